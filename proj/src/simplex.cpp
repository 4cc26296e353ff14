#include "invopt/simplex.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace invopt {

namespace {

// Internal standard form: minimize cost.x subject to A x = b, x >= 0, b >= 0.
// Original columns may be split (free variables), rows gain slack/surplus
// columns and one artificial column each.
struct Standardized {
  int m = 0;
  int n = 0;  // total internal columns, artificials last
  int art_begin = 0;
  std::vector<std::vector<Rational>> a;  // m x n
  std::vector<Rational> b;
  std::vector<Rational> cost;            // phase-2 costs (internal min form)
  std::vector<int> plus_col;             // per original column
  std::vector<int> minus_col;            // -1 unless the column was split
  std::vector<bool> row_flipped;
  bool negated_objective = false;        // true when the original LP maximizes
};

Standardized standardize(const LinearProgram& lp) {
  Standardized s;
  const int mrows = lp.num_rows();
  const int ncols = lp.num_columns();
  s.m = mrows;
  s.negated_objective = lp.direction() == LpDirection::maximize;

  s.plus_col.assign(ncols, -1);
  s.minus_col.assign(ncols, -1);
  int next = 0;
  for (int j = 0; j < ncols; ++j) {
    s.plus_col[j] = next++;
    if (!lp.columns()[j].nonneg) s.minus_col[j] = next++;
  }
  const int struct_cols = next;
  // slack/surplus for every inequality row, then one artificial per row
  int slack_count = 0;
  for (const auto& row : lp.rows()) {
    if (row.rel != LpRelation::eq) ++slack_count;
  }
  s.art_begin = struct_cols + slack_count;
  s.n = s.art_begin + mrows;

  s.a.assign(mrows, std::vector<Rational>(s.n));
  s.b.assign(mrows, Rational());
  s.cost.assign(s.n, Rational());
  s.row_flipped.assign(mrows, false);

  for (int j = 0; j < ncols; ++j) {
    Rational c = lp.objective()[j];
    if (s.negated_objective) c = -c;
    s.cost[s.plus_col[j]] = c;
    if (s.minus_col[j] >= 0) s.cost[s.minus_col[j]] = -c;
  }

  int slack_at = struct_cols;
  for (int i = 0; i < mrows; ++i) {
    const LpRow& row = lp.rows()[i];
    const bool flip = row.rhs < Rational(0);
    s.row_flipped[i] = flip;
    const Rational sign = flip ? Rational(-1) : Rational(1);
    for (const auto& [j, c] : row.coeffs) {
      const Rational v = c * sign;
      s.a[i][s.plus_col[j]] += v;
      if (s.minus_col[j] >= 0) s.a[i][s.minus_col[j]] -= v;
    }
    s.b[i] = row.rhs * sign;
    LpRelation rel = row.rel;
    if (flip) {
      if (rel == LpRelation::le) rel = LpRelation::ge;
      else if (rel == LpRelation::ge) rel = LpRelation::le;
    }
    if (row.rel != LpRelation::eq) {
      s.a[i][slack_at] = (rel == LpRelation::le) ? Rational(1) : Rational(-1);
      ++slack_at;
    }
    s.a[i][s.art_begin + i] = Rational(1);
  }
  return s;
}

class Tableau {
 public:
  Tableau(Standardized std_form, const SimplexOptions& opts)
      : s_(std::move(std_form)), opts_(opts) {
    basis_.resize(s_.m);
    for (int i = 0; i < s_.m; ++i) basis_[i] = s_.art_begin + i;
    // phase-1 reduced costs: cost 1 on artificials, basis = artificials
    z1_.assign(s_.n, Rational());
    for (int j = 0; j < s_.art_begin; ++j) {
      Rational acc;
      for (int i = 0; i < s_.m; ++i) acc += s_.a[i][j];
      z1_[j] = -acc;
    }
    // phase-2 reduced costs: artificials have zero phase-2 cost, so the
    // initial reduced costs are just the costs themselves
    z2_ = s_.cost;
    bland_threshold_ = opts.bland_threshold >= 0
                           ? opts.bland_threshold
                           : 200 + 10L * (s_.m + s_.n);
  }

  LpStatus run() {
    // phase 1: drive artificials to zero
    if (!iterate(z1_, /*allow_artificial_entering=*/false)) {
      throw std::logic_error("simplex: phase-1 objective unbounded");
    }
    Rational infeas;
    for (int i = 0; i < s_.m; ++i) {
      if (basis_[i] >= s_.art_begin) infeas += s_.b[i];
    }
    if (!infeas.is_zero()) return LpStatus::infeasible;
    pivot_out_artificials();
    if (!iterate(z2_, /*allow_artificial_entering=*/false)) return LpStatus::unbounded;
    return LpStatus::optimal;
  }

  std::vector<Rational> primal_internal() const {
    std::vector<Rational> x(s_.n);
    for (int i = 0; i < s_.m; ++i) x[basis_[i]] = s_.b[i];
    return x;
  }

  // simplex multipliers for the internal min problem, from the phase-2
  // reduced costs of the artificial columns (cost 0, unit column per row)
  std::vector<Rational> duals_internal() const {
    std::vector<Rational> y(s_.m);
    for (int i = 0; i < s_.m; ++i) y[i] = -z2_[s_.art_begin + i];
    return y;
  }

  const Standardized& std_form() const { return s_; }

 private:
  // Returns false when the objective is unbounded below.
  bool iterate(std::vector<Rational>& zrow, bool allow_artificial_entering) {
    while (true) {
      const int limit = allow_artificial_entering ? s_.n : s_.art_begin;
      int enter = -1;
      if (pivots_ < bland_threshold_) {
        Rational best;
        for (int j = 0; j < limit; ++j) {
          if (zrow[j] < best) {
            best = zrow[j];
            enter = j;
          }
        }
      } else {  // Bland's rule: first improving column
        for (int j = 0; j < limit; ++j) {
          if (zrow[j] < Rational(0)) {
            enter = j;
            break;
          }
        }
      }
      if (enter < 0) return true;

      int leave = -1;
      Rational best_ratio;
      for (int i = 0; i < s_.m; ++i) {
        if (s_.a[i][enter] > Rational(0)) {
          const Rational ratio = s_.b[i] / s_.a[i][enter];
          if (leave < 0 || ratio < best_ratio ||
              (ratio == best_ratio && tie_break(i, leave))) {
            leave = i;
            best_ratio = ratio;
          }
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter, zrow);
    }
  }

  // Lowest row index by default; under Bland's rule, lowest basis variable.
  bool tie_break(int candidate, int incumbent) const {
    if (pivots_ < bland_threshold_) return candidate < incumbent;
    return basis_[candidate] < basis_[incumbent];
  }

  void pivot(int r, int c, std::vector<Rational>& active_zrow) {
    if (++pivots_ > opts_.max_pivots) throw std::logic_error("simplex: pivot limit exceeded");
    auto& arow = s_.a[r];
    const Rational piv = arow[c];
    if (!(piv == Rational(1))) {
      for (auto& v : arow) {
        if (!v.is_zero()) v /= piv;
      }
      s_.b[r] /= piv;
    }
    for (int i = 0; i < s_.m; ++i) {
      if (i == r) continue;
      eliminate(s_.a[i], s_.b[i], arow, s_.b[r], s_.a[i][c]);
    }
    Rational dummy;
    eliminate(z1_, dummy, arow, s_.b[r], z1_[c]);
    eliminate(z2_, dummy, arow, s_.b[r], z2_[c]);
    (void)active_zrow;
    basis_[r] = c;
  }

  static void eliminate(std::vector<Rational>& row, Rational& rhs,
                        const std::vector<Rational>& pivot_row, const Rational& pivot_rhs,
                        Rational factor) {
    if (factor.is_zero()) return;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (!pivot_row[j].is_zero()) row[j] -= factor * pivot_row[j];
    }
    rhs -= factor * pivot_rhs;
  }

  // After phase 1, swap basic artificials for structural columns where the
  // row allows it; rows with no nonzero structural entry are redundant and
  // keep their artificial basic at value zero.
  void pivot_out_artificials() {
    for (int i = 0; i < s_.m; ++i) {
      if (basis_[i] < s_.art_begin) continue;
      int col = -1;
      for (int j = 0; j < s_.art_begin; ++j) {
        if (!s_.a[i][j].is_zero()) {
          col = j;
          break;
        }
      }
      if (col >= 0) pivot(i, col, z2_);
    }
  }

  Standardized s_;
  SimplexOptions opts_;
  std::vector<int> basis_;
  std::vector<Rational> z1_, z2_;
  long pivots_ = 0;
  long bland_threshold_ = 0;
};

}  // namespace

LpSolution solve_lp(const LinearProgram& lp, const SimplexOptions& opts) {
  Tableau tab(standardize(lp), opts);
  LpSolution sol;
  sol.status = tab.run();
  if (sol.status != LpStatus::optimal) return sol;

  const Standardized& s = tab.std_form();
  const auto x = tab.primal_internal();
  const auto y = tab.duals_internal();

  Rational obj;
  for (int j = 0; j < lp.num_columns(); ++j) {
    Rational v = x[s.plus_col[j]];
    if (s.minus_col[j] >= 0) v -= x[s.minus_col[j]];
    sol.primal[lp.columns()[j].name] = v;
    obj += lp.objective()[j] * v;
  }
  sol.objective = obj + lp.objective_offset();

  for (int i = 0; i < lp.num_rows(); ++i) {
    Rational yi = y[i];
    if (s.row_flipped[i]) yi = -yi;
    if (s.negated_objective) yi = -yi;
    sol.dual[lp.rows()[i].name] = yi;
  }

  const CertificateReport audit = check_lp_certificate(lp, sol);
  if (!audit.all_pass()) {
    std::string what = "simplex: internal certificate audit failed:";
    for (const auto& c : audit.checks) {
      if (!c.pass) what += " [" + c.name + ": " + c.detail + "]";
    }
    throw std::logic_error(what);
  }
  return sol;
}

namespace {

const Rational& lookup(const std::map<std::string, Rational>& values, const std::string& name) {
  static const Rational zero;
  const auto it = values.find(name);
  return it == values.end() ? zero : it->second;
}

}  // namespace

CertificateReport check_lp_certificate(const LinearProgram& lp, const LpSolution& sol) {
  if (sol.status != LpStatus::optimal) {
    throw std::invalid_argument("check_lp_certificate requires an optimal solution");
  }
  CertificateReport report;
  const bool minimizing = lp.direction() == LpDirection::minimize;

  // primal feasibility: column bounds and every row relation
  {
    CertificateCheck check{"primal-feasibility", true, ""};
    for (const auto& col : lp.columns()) {
      if (col.nonneg && lookup(sol.primal, col.name) < Rational(0)) {
        check.pass = false;
        check.detail = "column '" + col.name + "' negative";
        break;
      }
    }
    if (check.pass) {
      for (const auto& row : lp.rows()) {
        Rational lhs;
        for (const auto& [j, c] : row.coeffs) lhs += c * lookup(sol.primal, lp.columns()[j].name);
        const bool ok = row.rel == LpRelation::le   ? lhs <= row.rhs
                        : row.rel == LpRelation::ge ? lhs >= row.rhs
                                                    : lhs == row.rhs;
        if (!ok) {
          check.pass = false;
          check.detail = "row '" + row.name + "' violated";
          break;
        }
      }
    }
    report.checks.push_back(std::move(check));
  }

  // dual feasibility: row sign conditions and column constraints
  {
    CertificateCheck check{"dual-feasibility", true, ""};
    for (const auto& row : lp.rows()) {
      const Rational& yr = lookup(sol.dual, row.name);
      bool ok = true;
      if (row.rel == LpRelation::ge) ok = minimizing ? yr >= Rational(0) : yr <= Rational(0);
      if (row.rel == LpRelation::le) ok = minimizing ? yr <= Rational(0) : yr >= Rational(0);
      if (!ok) {
        check.pass = false;
        check.detail = "dual sign of row '" + row.name + "'";
        break;
      }
    }
    if (check.pass) {
      std::vector<Rational> load(lp.num_columns());
      for (const auto& row : lp.rows()) {
        const Rational& yr = lookup(sol.dual, row.name);
        if (yr.is_zero()) continue;
        for (const auto& [j, c] : row.coeffs) load[j] += yr * c;
      }
      for (int j = 0; j < lp.num_columns(); ++j) {
        const LpColumn& col = lp.columns()[j];
        const Rational& cj = lp.objective()[j];
        bool ok;
        if (!col.nonneg) ok = load[j] == cj;
        else ok = minimizing ? load[j] <= cj : load[j] >= cj;
        if (!ok) {
          check.pass = false;
          check.detail = "dual constraint of column '" + col.name + "'";
          break;
        }
      }
    }
    report.checks.push_back(std::move(check));
  }

  // objective equality: c.x = y.b = reported objective, all exact
  {
    CertificateCheck check{"objective-equality", true, ""};
    Rational primal_obj = lp.objective_offset();
    for (int j = 0; j < lp.num_columns(); ++j) {
      primal_obj += lp.objective()[j] * lookup(sol.primal, lp.columns()[j].name);
    }
    Rational dual_obj = lp.objective_offset();
    for (const auto& row : lp.rows()) dual_obj += lookup(sol.dual, row.name) * row.rhs;
    if (primal_obj != sol.objective || dual_obj != sol.objective) {
      check.pass = false;
      std::ostringstream os;
      os << "primal " << primal_obj << ", dual " << dual_obj << ", reported " << sol.objective;
      check.detail = os.str();
    }
    report.checks.push_back(std::move(check));
  }

  return report;
}

}  // namespace invopt
