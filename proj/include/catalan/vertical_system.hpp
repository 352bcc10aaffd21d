#pragma once

#include "catalan/gf_common.hpp"
#include "catalan/series_matrix.hpp"

namespace catalan {

// The 2x2 system counting polyominoes by (length, odd-column cells,
// even-column cells, last column) over (x, y, z, u), split by length parity:
// component 0 is the even-length series, component 1 the odd-length one.
struct VerticalPair {
  MPoly even;  // only even x-degrees
  MPoly odd;   // only odd x-degrees
};

struct VerticalIterationResult {
  VerticalPair at_one;  // u = 1
  VerticalPair full;    // free u
};

// Iterates the matrix equation. The diagonal product P_k(1) is computed both
// as a matrix product and through its q-Pochhammer closed form; disagreement
// throws std::runtime_error naming the first differing coefficient.
VerticalIterationResult vertical_solve_iteration(const SolverConfig& cfg);

// The four q-Pochhammer sums of the closed form and their determinant.
struct PochhammerSums {
  MPoly f;      // even-component source sum
  MPoly g;      // odd-component source sum
  MPoly phi;    // diagonal kernel sum
  MPoly psi;    // off-diagonal kernel sum (carries its minus sign)
  MPoly delta;  // (1+phi(y,z))(1+phi(z,y)) - psi(y,z)psi(z,y)
};

struct VerticalClosedFormResult {
  PochhammerSums parts;
  VerticalPair at_one;
};

// Evaluates the printed closed form and compares it entry-wise against the
// iteration's u = 1 solution; mismatch throws with the first differing
// coefficient (the closed form is validated, not trusted).
VerticalClosedFormResult vertical_closed_form(const SolverConfig& cfg);

// System pieces with the substitution u -> (yz)^k u (keep_u) or u -> (yz)^k,
// exposed for tests.
SeriesMatrix vertical_matrix_m(const VarSet& ring, int k, bool keep_u);
SeriesMatrix vertical_matrix_n(const VarSet& ring, int k, bool keep_u);
std::vector<MPoly> vertical_vector_b(const VarSet& ring, int k, bool keep_u);

// Closed form of the k-fold diagonal product entry.
MPoly vertical_product_closed_form(const VarSet& ring, int k);

}  // namespace catalan
