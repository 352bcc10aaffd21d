#include "catalan/vertical_system.hpp"

#include <stdexcept>

#include "catalan/render.hpp"

namespace catalan {

namespace {

MPoly mono(const VarSet& R, int ex, int ey, int ez, int eu) {
  return MPoly::monomial(R, {ex, ey, ez, eu});
}

// geom_inverse(1 - y^{ey} z^{ez} u^{eu}); the expansions of every 1/(m - 1)
// denominator, sign handled at the call sites.
MPoly inv_one_minus(const VarSet& R, int ey, int ez, int eu) {
  return geom_inverse(MPoly::one(R) - mono(R, 0, ey, ez, eu));
}

}  // namespace

SeriesMatrix vertical_matrix_m(const VarSet& R, int k, bool keep_u) {
  int u = keep_u ? 1 : 0;
  SeriesMatrix m(2, R);
  // Both denominators flip sign, so the pair of geometric expansions is +.
  m.at(0, 0) = mono(R, 2, 2 + 4 * k, 4 + 4 * k, 4 * u) *
               inv_one_minus(R, k, k + 1, u) *
               inv_one_minus(R, k + 1, k + 1, u);
  m.at(1, 1) = mono(R, 2, 4 + 4 * k, 2 + 4 * k, 4 * u) *
               inv_one_minus(R, k + 1, k, u) *
               inv_one_minus(R, k + 1, k + 1, u);
  return m;
}

SeriesMatrix vertical_matrix_n(const VarSet& R, int k, bool keep_u) {
  int u = keep_u ? 1 : 0;
  SeriesMatrix n(2, R);
  n.at(0, 0) = mono(R, 2, 1 + 3 * k, 3 + 3 * k, 3 * u) *
               inv_one_minus(R, k, k + 1, u) *
               inv_one_minus(R, k + 1, k + 1, u);
  n.at(0, 1) = -(mono(R, 1, k, 1 + k, u) * inv_one_minus(R, k, k + 1, u));
  n.at(1, 0) = -(mono(R, 1, 1 + k, k, u) * inv_one_minus(R, k + 1, k, u));
  n.at(1, 1) = mono(R, 2, 3 + 3 * k, 1 + 3 * k, 3 * u) *
               inv_one_minus(R, k + 1, k, u) *
               inv_one_minus(R, k + 1, k + 1, u);
  return n;
}

std::vector<MPoly> vertical_vector_b(const VarSet& R, int k, bool keep_u) {
  int u = keep_u ? 1 : 0;
  std::vector<MPoly> b(2, MPoly::zero(R));
  b[0] = -(mono(R, 2, 1 + 3 * k, 3 + 3 * k, 3 * u) *
           inv_one_minus(R, k, k + 1, u));
  b[1] = mono(R, 1, 1 + k, k, u);
  return b;
}

MPoly vertical_product_closed_form(const VarSet& R, int k) {
  // x^{2k} y^{2k^2} z^{2k^2 + 2k} / ((z; yz)_k (yz; yz)_k)
  MPoly z = MPoly::variable(R, "z");
  MPoly yz = mono(R, 0, 1, 1, 0);
  MPoly den = pochhammer(z, yz, k) * pochhammer(yz, yz, k);
  return mono(R, 2 * k, 2 * k * k, 2 * k * k + 2 * k, 0) * geom_inverse(den);
}

namespace {

std::string first_term_text(const VarSet& R, const MPoly& diff) {
  auto ts = diff.sorted_terms();
  return poly_text(MPoly::monomial(R, R.unpack(ts.front().first),
                                   ts.front().second));
}

}  // namespace

VerticalIterationResult vertical_solve_iteration(const SolverConfig& cfg) {
  VarSet R = ring_xyzu(cfg);
  const int X = R.cap(0);
  int yv = R.index("y"), zv = R.index("z");

  SeriesMatrix s(2, R);
  std::vector<MPoly> t(2, MPoly::zero(R));
  SeriesMatrix p = SeriesMatrix::identity(2, R);
  for (int k = 0; 2 * k <= X; ++k) {
    // The diagonal product must match its q-Pochhammer closed form.
    MPoly closed = vertical_product_closed_form(R, k);
    if (p.at(0, 0) != closed || p.at(1, 1) != swap_vars(closed, yv, zv) ||
        !p.at(0, 1).is_zero() || !p.at(1, 0).is_zero()) {
      MPoly diff = p.at(0, 0) - closed;
      if (diff.is_zero()) diff = p.at(1, 1) - swap_vars(closed, yv, zv);
      throw std::runtime_error(
          "vertical system: matrix product and Pochhammer forms of the "
          "k-fold product disagree at k = " +
          std::to_string(k) + ", first differing term " +
          first_term_text(R, diff));
    }
    s += p * vertical_matrix_n(R, k, false);
    std::vector<MPoly> b = vertical_vector_b(R, k, false);
    for (int i = 0; i < 2; ++i) t[i] += p.at(i, i) * b[i];
    if (2 * (k + 1) <= X) p = p * vertical_matrix_m(R, k, false);
  }
  SeriesMatrix inv = neumann_inverse(SeriesMatrix::identity(2, R) + s);
  std::vector<MPoly> v1 = mat_vec(inv, t);

  VerticalIterationResult out{{v1[0], v1[1]}, {MPoly::zero(R), MPoly::zero(R)}};

  p = SeriesMatrix::identity(2, R);
  for (int k = 0; 2 * k <= X; ++k) {
    std::vector<MPoly> rhs = vertical_vector_b(R, k, true);
    std::vector<MPoly> ng = mat_vec(vertical_matrix_n(R, k, true), v1);
    for (int i = 0; i < 2; ++i) rhs[i] -= ng[i];
    out.full.even += p.at(0, 0) * rhs[0];
    out.full.odd += p.at(1, 1) * rhs[1];
    if (2 * (k + 1) <= X) p = p * vertical_matrix_m(R, k, true);
  }
  return out;
}

VerticalClosedFormResult vertical_closed_form(const SolverConfig& cfg) {
  VarSet R = ring_xyzu(cfg);
  const int X = R.cap(0);
  int yv = R.index("y"), zv = R.index("z");
  MPoly y = MPoly::variable(R, "y");
  MPoly z = MPoly::variable(R, "z");
  MPoly yz = mono(R, 0, 1, 1, 0);

  PochhammerSums ps{MPoly::zero(R), MPoly::zero(R), MPoly::zero(R),
                    MPoly::zero(R), MPoly::zero(R)};
  // Summand k of f/phi carries x^{2k+2}, of g/psi x^{2k+1}.
  for (int k = 0; 2 * k + 1 <= X; ++k) {
    MPoly poch_z_k1 = pochhammer(z, yz, k + 1);
    MPoly poch_yz_k = pochhammer(yz, yz, k);
    MPoly poch_yz_k1 = pochhammer(yz, yz, k + 1);
    MPoly poch_y_k = pochhammer(y, yz, k);
    if (2 * k + 2 <= X) {
      MPoly num_f = mono(R, 2 * k + 2, 2 * k * k + 3 * k + 1,
                         2 * k * k + 5 * k + 3, 0);
      ps.f += num_f * geom_inverse(poch_z_k1 * poch_yz_k);
      ps.phi += num_f * geom_inverse(poch_z_k1 * poch_yz_k1);
    }
    MPoly num_g =
        mono(R, 2 * k + 1, 2 * k * k + 3 * k + 1, 2 * k * k + k, 0);
    ps.g += num_g * geom_inverse(poch_y_k * poch_yz_k);
    MPoly num_psi =
        mono(R, 2 * k + 1, 2 * k * k + k, 2 * k * k + 3 * k + 1, 0);
    ps.psi -= num_psi * geom_inverse(poch_z_k1 * poch_yz_k);
  }

  MPoly phi_sw = swap_vars(ps.phi, yv, zv);
  MPoly psi_sw = swap_vars(ps.psi, yv, zv);
  MPoly one = MPoly::one(R);
  ps.delta = (one + ps.phi) * (one + phi_sw) - ps.psi * psi_sw;
  MPoly inv_delta = geom_inverse(ps.delta);

  VerticalClosedFormResult out{
      ps,
      {inv_delta * (-((one + phi_sw) * ps.f) - ps.psi * ps.g),
       inv_delta * ((one + ps.phi) * ps.g + psi_sw * ps.f)}};

  VerticalIterationResult iter = vertical_solve_iteration(cfg);
  MPoly diff = out.at_one.even - iter.at_one.even;
  if (diff.is_zero()) diff = out.at_one.odd - iter.at_one.odd;
  if (!diff.is_zero())
    throw std::runtime_error(
        "vertical system: printed closed form disagrees with the iteration "
        "solution, first differing term " +
        first_term_text(R, diff));
  return out;
}

}  // namespace catalan
