#pragma once

#include "catalan/gf_common.hpp"
#include "catalan/series_matrix.hpp"

namespace catalan {

// The 2x2 matrix continued fraction over (x, q) whose inverse row sums give
// the black-capacity series: level h contributes the anti-diagonal matrix
// with a_h = x*q^ceil((h+1)/2) and b_h = x*q^floor((h+1)/2).

MPoly cf_weight_a(const VarSet& ring, int h);
MPoly cf_weight_b(const VarSet& ring, int h);
SeriesMatrix cf_level_matrix(const VarSet& ring, int h);

// Depth-N convergent starting at `level`: S_{level} with the nesting cut off
// after N further levels (the innermost denominator is the identity). Each
// level carries a factor x, so depth x_max fixes all coefficients up to the
// x cap.
SeriesMatrix cf_convergent_from(int level, int depth, const VarSet& ring);
SeriesMatrix cf_convergent(int depth, const SolverConfig& cfg);

struct ContfracResult {
  SeriesMatrix s0;
  SeriesMatrix s0_inv;
  MPoly a0;  // row-0 sum of s0_inv; a0 - 1 is the black-capacity series
  MPoly b0;  // row-1 sum
};
ContfracResult contfrac_solve(const SolverConfig& cfg);

// Reconstructs the per-level series pair from the nested inverses and checks
// the automaton recurrences and initial conditions within caps, for levels
// 1..h_max.
CheckReport contfrac_recurrence_check(const SolverConfig& cfg, int h_max);

}  // namespace catalan
