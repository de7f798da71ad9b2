#pragma once

#include <span>
#include <vector>

#include "corrcast/rational.hpp"

namespace corrcast::lp {

enum class Sense { at_most, at_least };

/// coeffs . x  (<= or >=)  rhs
struct Row {
  std::vector<Rational> coeffs;
  Sense sense = Sense::at_most;
  Rational rhs;
};

struct Result {
  bool feasible = false;
  /// A point with x >= 0 satisfying every row (when feasible).
  std::vector<Rational> point;
  /// Indices of an irreducible infeasible subset of rows (when infeasible); ascending.
  /// Nonnegativity of the variables is implicit and never listed.
  std::vector<std::size_t> conflict;
};

/// Phase-1 simplex over exact rationals with Bland's rule, on { x >= 0 : rows }.
/// The conflict set starts from the support of the phase-1 dual (a Farkas certificate)
/// and is shrunk to irreducibility with a deletion filter.
Result solve_feasibility(std::size_t num_vars, std::span<const Row> rows);

}  // namespace corrcast::lp
