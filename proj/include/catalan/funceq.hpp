#pragma once

#include "catalan/gf_common.hpp"

namespace catalan {

// The single functional equation for the capacity bistatistic (s, s_bar)
// with the last column tracked: over (x, y, z, u) with q = yz, the series
// splits as F(u) = direct(u) + cross(u)*G(1) + self(u)*F(1), where G is the
// y<->z swapped series, and a 2x2 linear solve at u = 1 closes the system.
struct FunceqSide {
  MPoly direct;  // no unknown attached
  MPoly cross;   // multiplies the swapped series at u = 1
  MPoly self;    // multiplies this side's series at u = 1
};

struct FunceqSolution {
  FunceqSide lead;     // y-leading split
  FunceqSide swapped;  // z-leading split
  MPoly delta;         // determinant of the 2x2 solve, constant term 1
  MPoly f_at_one;      // C(x,y,z,1)
  MPoly g_at_one;      // C(x,z,y,1)
  MPoly c;             // C(x,y,z,u)
};

FunceqSolution funceq_solve(const SolverConfig& cfg);

// Residual checks: the one-step recursion in u -> qu, the product-vs-
// Pochhammer identity for the iterated kernel (n = 0..n_max), and the
// u-valuation of the truncated iteration tail.
CheckReport funceq_recursion_check(const FunceqSolution& sol,
                                   const SolverConfig& cfg);
CheckReport funceq_kernel_product_check(const SolverConfig& cfg, int n_max);
CheckReport funceq_tail_check(const FunceqSolution& sol,
                              const SolverConfig& cfg, int n_max);

}  // namespace catalan
