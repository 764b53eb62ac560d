#pragma once
// Exact feasibility of mixed systems of linear equations, strict and weak
// inequalities by Fourier-Motzkin elimination.

#include <vector>

#include "motivic/exactalg.hpp"
#include "motivic/polytope.hpp"

namespace motivic {

/// coeffs . x + constant  (rel)  0, with integer data.
struct LinearRow {
  std::vector<BigInt> coeffs;
  BigInt constant;
  Relation rel = Relation::ge;
};

/// True iff some x in Q^n satisfies every row. Rows must all have n coefficients.
bool fm_feasible(std::vector<LinearRow> rows, std::size_t n);

}  // namespace motivic
