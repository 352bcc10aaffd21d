#pragma once

#include <array>

#include "catalan/gf_common.hpp"
#include "catalan/series_matrix.hpp"

namespace catalan {

// The four-component system counting polyominoes by (length, last column,
// black capacity) with length/last parities split so that the column-append
// recursion becomes a 4x4 matrix equation over (x, u, q); u tracks half the
// last column (rounded up), which the reconstruction below undoes.
//
// Component order: index a*2 + b holds length = a (mod 2), last = b (mod 2).
struct ParityComponents {
  std::array<MPoly, 4> comp;
};

// Solution at u = 1: the components and their sum F(x,1,q).
struct ParityAtOneSolution {
  ParityComponents at_one;
  MPoly f;  // F(x,1,q)
};
ParityAtOneSolution parity_solve_at_one(const SolverConfig& cfg);

// Full solution in u: the components and the reconstructed F(x,u,q), where
// component u-exponents are doubled (even last) or doubled minus one (odd
// last); a zero exponent in an odd component is an internal error.
struct ParityFullSolution {
  ParityComponents g;  // in the halved-u variable
  MPoly f;             // F(x,u,q)
};
ParityFullSolution parity_solve_full(const SolverConfig& cfg);

// System matrices with the substitution u -> q^j u (keep_u) or u -> q^j,
// exposed for tests against the printed displays.
SeriesMatrix parity_matrix_m(const VarSet& ring, int j, bool keep_u);
SeriesMatrix parity_matrix_n(const VarSet& ring, int j, bool keep_u);
std::vector<MPoly> parity_vector_b(const VarSet& ring, int j, bool keep_u);

}  // namespace catalan
