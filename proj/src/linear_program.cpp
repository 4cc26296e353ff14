#include "invopt/linear_program.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace invopt {

int LinearProgram::add_column(const std::string& name, bool nonneg) {
  if (col_index_.count(name)) throw std::invalid_argument("duplicate column name '" + name + "'");
  const int idx = static_cast<int>(cols_.size());
  cols_.push_back(LpColumn{name, nonneg});
  obj_.emplace_back();
  col_index_[name] = idx;
  return idx;
}

void LinearProgram::add_row(const std::string& name,
                            const std::vector<std::pair<std::string, Rational>>& coeffs,
                            LpRelation rel, const Rational& rhs) {
  std::vector<std::pair<int, Rational>> indexed;
  indexed.reserve(coeffs.size());
  for (const auto& [col, c] : coeffs) {
    const auto idx = column_index(col);
    if (!idx) throw std::invalid_argument("row '" + name + "' references unknown column '" + col + "'");
    indexed.emplace_back(*idx, c);
  }
  add_row_indexed(name, std::move(indexed), rel, rhs);
}

void LinearProgram::add_row_indexed(const std::string& name,
                                    std::vector<std::pair<int, Rational>> coeffs, LpRelation rel,
                                    const Rational& rhs) {
  if (row_names_.count(name)) throw std::invalid_argument("duplicate row name '" + name + "'");
  std::map<int, Rational> merged;
  for (auto& [idx, c] : coeffs) {
    if (idx < 0 || idx >= num_columns()) {
      throw std::invalid_argument("row '" + name + "' references column out of range");
    }
    merged[idx] += c;
  }
  LpRow row;
  row.name = name;
  row.rel = rel;
  row.rhs = rhs;
  for (auto& [idx, c] : merged) {
    if (!c.is_zero()) row.coeffs.emplace_back(idx, c);
  }
  row_names_[name] = static_cast<int>(rows_.size());
  rows_.push_back(std::move(row));
}

void LinearProgram::set_objective_coeff(const std::string& column, const Rational& c) {
  const auto idx = column_index(column);
  if (!idx) throw std::invalid_argument("objective references unknown column '" + column + "'");
  obj_[*idx] = c;
}

void LinearProgram::set_objective_coeff(int column, const Rational& c) {
  if (column < 0 || column >= num_columns()) throw std::invalid_argument("objective column out of range");
  obj_[column] = c;
}

std::optional<int> LinearProgram::column_index(const std::string& name) const {
  const auto it = col_index_.find(name);
  if (it == col_index_.end()) return std::nullopt;
  return it->second;
}

namespace {

std::string frac(const Rational& r) {
  return r.num().get_str() + "/" + r.den().get_str();
}

void append_terms(std::ostringstream& os, const std::vector<std::pair<int, Rational>>& terms,
                  const std::vector<LpColumn>& cols) {
  bool first = true;
  for (const auto& [idx, c] : terms) {
    if (!first) os << " + ";
    os << frac(c) << " " << cols[idx].name;
    first = false;
  }
  if (first) os << "0";
}

}  // namespace

std::string LinearProgram::to_text() const {
  std::ostringstream os;
  os << (dir_ == LpDirection::minimize ? "Minimize" : "Maximize") << "\n obj: ";
  std::vector<std::pair<int, Rational>> obj_terms;
  for (int j = 0; j < num_columns(); ++j) {
    if (!obj_[j].is_zero()) obj_terms.emplace_back(j, obj_[j]);
  }
  append_terms(os, obj_terms, cols_);
  if (!offset_.is_zero()) os << " + " << frac(offset_);
  os << "\nSubject To\n";
  for (const auto& row : rows_) {
    os << " " << row.name << ": ";
    append_terms(os, row.coeffs, cols_);
    switch (row.rel) {
      case LpRelation::le: os << " <= "; break;
      case LpRelation::eq: os << " = "; break;
      case LpRelation::ge: os << " >= "; break;
    }
    os << frac(row.rhs) << "\n";
  }
  os << "Bounds\n";
  for (const auto& col : cols_) {
    if (!col.nonneg) os << " " << col.name << " free\n";
  }
  os << "End\n";
  return os.str();
}

bool CertificateReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CertificateCheck& c) { return c.pass; });
}

}  // namespace invopt
