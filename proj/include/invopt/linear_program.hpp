#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "invopt/rational.hpp"

namespace invopt {

enum class LpDirection { minimize, maximize };
enum class LpRelation { le, eq, ge };
enum class LpStatus { optimal, infeasible, unbounded };

struct LpColumn {
  std::string name;
  bool nonneg = true;  // false: free column (lower bound -inf); upper bound is always +inf
};

struct LpRow {
  std::string name;
  std::vector<std::pair<int, Rational>> coeffs;  // (column index, coefficient), sorted, nonzero
  LpRelation rel = LpRelation::le;
  Rational rhs;
};

/// Named linear program in row/column form.  Free variables are usually
/// split into nonnegative pairs by the formulation builders; the solver
/// nevertheless accepts free columns directly.
class LinearProgram {
 public:
  explicit LinearProgram(LpDirection dir) : dir_(dir) {}

  int add_column(const std::string& name, bool nonneg = true);
  int add_free_column(const std::string& name) { return add_column(name, false); }

  /// Coefficients are merged per column and zero terms dropped.  Throws on
  /// unknown column names or duplicate row names.
  void add_row(const std::string& name, const std::vector<std::pair<std::string, Rational>>& coeffs,
               LpRelation rel, const Rational& rhs);
  void add_row_indexed(const std::string& name, std::vector<std::pair<int, Rational>> coeffs,
                       LpRelation rel, const Rational& rhs);

  void set_objective_coeff(const std::string& column, const Rational& c);
  void set_objective_coeff(int column, const Rational& c);
  void set_objective_offset(const Rational& off) { offset_ = off; }

  LpDirection direction() const { return dir_; }
  const std::vector<LpColumn>& columns() const { return cols_; }
  const std::vector<LpRow>& rows() const { return rows_; }
  const std::vector<Rational>& objective() const { return obj_; }
  const Rational& objective_offset() const { return offset_; }
  std::optional<int> column_index(const std::string& name) const;
  int num_columns() const { return static_cast<int>(cols_.size()); }
  int num_rows() const { return static_cast<int>(rows_.size()); }

  /// Plain-text dump in LP-file style with rationals rendered as num/den.
  std::string to_text() const;

 private:
  LpDirection dir_;
  std::vector<LpColumn> cols_;
  std::vector<LpRow> rows_;
  std::vector<Rational> obj_;
  Rational offset_;
  std::map<std::string, int> col_index_;
  std::map<std::string, int> row_names_;
};

/// Solver output.  When status == optimal the primal is feasible for every
/// row, the dual is feasible for the dual program, and the two objective
/// values agree exactly.
///
/// Dual sign conventions, by primal direction:
///   minimize:  >= rows carry dual >= 0, <= rows dual <= 0, = rows free;
///              for each column j, sum_r y_r a_rj <= c_j (equality if free).
///   maximize:  <= rows carry dual >= 0, >= rows dual <= 0, = rows free;
///              for each column j, sum_r y_r a_rj >= c_j (equality if free).
struct LpSolution {
  LpStatus status = LpStatus::optimal;
  std::map<std::string, Rational> primal;  // column name -> value
  std::map<std::string, Rational> dual;    // row name -> value
  Rational objective;                      // includes the objective offset
};

struct CertificateCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct CertificateReport {
  std::vector<CertificateCheck> checks;
  bool all_pass() const;
};

}  // namespace invopt
