#include "catalan/parity_system.hpp"

#include <stdexcept>

namespace catalan {

namespace {

// x * u^p * q^{j*p + r} / (q^{j+1} u - 1), with u dropped when keep_u is
// false (the u -> q^j substitution at u = 1). The denominator is expanded by
// the unit convention 1/(m - 1) = -geom_inverse(1 - m).
MPoly cell(const VarSet& R, int p, int r, int j, bool keep_u) {
  int ux = R.index("u"), qx = R.index("q"), xx = R.index("x");
  std::vector<int> num(R.size(), 0);
  num[xx] = 1;
  num[ux] = keep_u ? p : 0;
  num[qx] = j * p + r;
  std::vector<int> den(R.size(), 0);
  den[ux] = keep_u ? 1 : 0;
  den[qx] = j + 1;
  MPoly one_minus = MPoly::one(R) - MPoly::monomial(R, den);
  return -(MPoly::monomial(R, num) * geom_inverse(one_minus));
}

}  // namespace

SeriesMatrix parity_matrix_m(const VarSet& R, int j, bool keep_u) {
  SeriesMatrix m(4, R);
  m.at(0, 2) = cell(R, 1, 1, j, keep_u);
  m.at(0, 3) = m.at(0, 2);
  m.at(1, 2) = cell(R, 2, 1, j, keep_u);
  m.at(1, 3) = cell(R, 1, 0, j, keep_u);
  m.at(2, 0) = cell(R, 1, 1, j, keep_u);
  m.at(2, 1) = m.at(2, 0);
  m.at(3, 0) = cell(R, 2, 2, j, keep_u);
  m.at(3, 1) = cell(R, 1, 1, j, keep_u);
  return m;
}

SeriesMatrix parity_matrix_n(const VarSet& R, int j, bool keep_u) {
  SeriesMatrix n(4, R);
  n.at(0, 2) = cell(R, 1, 1, j, keep_u);
  n.at(0, 3) = n.at(0, 2);
  n.at(1, 2) = cell(R, 1, 0, j, keep_u);
  n.at(1, 3) = n.at(1, 2);
  n.at(2, 0) = cell(R, 1, 1, j, keep_u);
  n.at(2, 1) = n.at(2, 0);
  n.at(3, 0) = n.at(2, 0);
  n.at(3, 1) = n.at(2, 0);
  return n;
}

std::vector<MPoly> parity_vector_b(const VarSet& R, int j, bool keep_u) {
  std::vector<MPoly> b(4, MPoly::zero(R));
  std::vector<int> e(R.size(), 0);
  e[R.index("x")] = 1;
  e[R.index("u")] = keep_u ? 1 : 0;
  e[R.index("q")] = j + 1;
  b[3] = MPoly::monomial(R, e);
  return b;
}

ParityAtOneSolution parity_solve_at_one(const SolverConfig& cfg) {
  VarSet R = ring_xuq(cfg);
  const int X = R.cap(0);

  // S = sum_k P_k N_k and T = sum_k P_k B_k with P_k = prod_{j<k} M_j; every
  // M/N/B factor carries x, so the sums stop at the x cap.
  SeriesMatrix s(4, R);
  std::vector<MPoly> t(4, MPoly::zero(R));
  SeriesMatrix p = SeriesMatrix::identity(4, R);
  for (int k = 0; k <= X; ++k) {
    s += p * parity_matrix_n(R, k, false);
    // B has a single nonzero entry; multiply it directly.
    MPoly bk = parity_vector_b(R, k, false)[3];
    for (int i = 0; i < 4; ++i) t[i] += p.at(i, 3) * bk;
    if (k < X) p = p * parity_matrix_m(R, k, false);
  }
  SeriesMatrix inv = neumann_inverse(SeriesMatrix::identity(4, R) + s);

  ParityAtOneSolution out;
  std::vector<MPoly> g = mat_vec(inv, t);
  out.f = MPoly::zero(R);
  for (int i = 0; i < 4; ++i) {
    out.at_one.comp[i] = g[i];
    out.f += g[i];
  }
  return out;
}

ParityFullSolution parity_solve_full(const SolverConfig& cfg) {
  ParityAtOneSolution base = parity_solve_at_one(cfg);
  VarSet R = ring_xuq(cfg);
  const int X = R.cap(0);

  std::vector<MPoly> g1(base.at_one.comp.begin(), base.at_one.comp.end());
  std::vector<MPoly> g(4, MPoly::zero(R));
  SeriesMatrix p = SeriesMatrix::identity(4, R);
  for (int k = 0; k <= X; ++k) {
    std::vector<MPoly> rhs = parity_vector_b(R, k, true);
    std::vector<MPoly> ng = mat_vec(parity_matrix_n(R, k, true), g1);
    for (int i = 0; i < 4; ++i) rhs[i] -= ng[i];
    std::vector<MPoly> term = mat_vec(p, rhs);
    for (int i = 0; i < 4; ++i) g[i] += term[i];
    if (k < X) p = p * parity_matrix_m(R, k, true);
  }

  ParityFullSolution out;
  int ux = R.index("u");
  out.f = MPoly::zero(R);
  for (int i = 0; i < 4; ++i) {
    out.g.comp[i] = g[i];
    bool odd_last = (i % 2) == 1;
    // Undo the halved-u encoding: even-last components carry u^{last/2},
    // odd-last ones u^{(last+1)/2}; the latter must never have exponent 0.
    out.f += remap_exponent(g[i], ux, 2, odd_last ? -1 : 0);
  }
  return out;
}

}  // namespace catalan
