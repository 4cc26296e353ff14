#pragma once

#include "invopt/linear_program.hpp"

namespace invopt {

struct SimplexOptions {
  /// Pivot count after which the solver switches from the largest-coefficient
  /// rule to Bland's rule.  -1 selects 200 + 10*(rows+columns).
  long bland_threshold = -1;
  /// Hard safety cap; exceeding it indicates a solver bug and throws.
  long max_pivots = 1000000;
};

/// Exact primal simplex on the dense tableau, two-phase (no big-M).
/// Returns certified primal and dual solutions; every optimal result is
/// re-verified internally with check_lp_certificate before being returned.
LpSolution solve_lp(const LinearProgram& lp, const SimplexOptions& opts = {});

/// Independent re-verification of an optimal solution: primal feasibility,
/// dual feasibility (sign conventions documented on LpSolution), and exact
/// equality of the primal and dual objective values.
CertificateReport check_lp_certificate(const LinearProgram& lp, const LpSolution& sol);

}  // namespace invopt
