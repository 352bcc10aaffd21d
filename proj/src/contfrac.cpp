#include "catalan/contfrac.hpp"

#include "catalan/render.hpp"

namespace catalan {

MPoly cf_weight_a(const VarSet& R, int h) {
  std::vector<int> e(R.size(), 0);
  e[R.index("x")] = 1;
  e[R.index("q")] = (h + 2) / 2;  // ceil((h+1)/2)
  return MPoly::monomial(R, e);
}

MPoly cf_weight_b(const VarSet& R, int h) {
  std::vector<int> e(R.size(), 0);
  e[R.index("x")] = 1;
  e[R.index("q")] = (h + 1) / 2;  // floor((h+1)/2)
  return MPoly::monomial(R, e);
}

SeriesMatrix cf_level_matrix(const VarSet& R, int h) {
  SeriesMatrix u(2, R);
  u.at(0, 1) = cf_weight_a(R, h);
  u.at(1, 0) = cf_weight_b(R, h);
  return u;
}

SeriesMatrix cf_convergent_from(int level, int depth, const VarSet& R) {
  SeriesMatrix s = SeriesMatrix::identity(2, R);
  for (int h = level + depth; h >= level; --h)
    s = SeriesMatrix::identity(2, R) - cf_level_matrix(R, h) * neumann_inverse(s);
  return s;
}

SeriesMatrix cf_convergent(int depth, const SolverConfig& cfg) {
  return cf_convergent_from(0, depth, ring_xq(cfg));
}

ContfracResult contfrac_solve(const SolverConfig& cfg) {
  VarSet R = ring_xq(cfg);
  SeriesMatrix s0 = cf_convergent_from(0, R.cap(0), R);
  SeriesMatrix inv = neumann_inverse(s0);
  ContfracResult out{s0, inv, inv.at(0, 0) + inv.at(0, 1),
                     inv.at(1, 0) + inv.at(1, 1)};
  return out;
}

CheckReport contfrac_recurrence_check(const SolverConfig& cfg, int h_max) {
  VarSet R = ring_xq(cfg);
  const int depth = R.cap(0);

  // W_0 = S_0^{-1} e, W_{h+1} = S_{h+1}^{-1} W_h; component 0 is the series
  // of the upper automaton layer at level h, component 1 the lower.
  std::vector<std::vector<MPoly>> w;
  std::vector<MPoly> cur = {MPoly::one(R), MPoly::one(R)};
  for (int h = 0; h <= h_max + 1; ++h) {
    cur = mat_vec(neumann_inverse(cf_convergent_from(h, depth, R)), cur);
    w.push_back(cur);
  }

  auto fail = [&](const std::string& what, const MPoly& residual) {
    auto ts = residual.sorted_terms();
    return CheckReport{false, what + ": first nonzero residual term " +
                                  poly_text(MPoly::monomial(
                                      R, R.unpack(ts.front().first),
                                      ts.front().second))};
  };

  MPoly r = w[0][0] - MPoly::one(R) - cf_weight_a(R, 0) * w[1][1];
  if (!r.is_zero()) return fail("initial condition (upper layer)", r);
  r = w[0][1] - MPoly::one(R) - cf_weight_b(R, 0) * w[1][0];
  if (!r.is_zero()) return fail("initial condition (lower layer)", r);

  for (int h = 1; h <= h_max; ++h) {
    r = w[h][0] - w[h - 1][0] - cf_weight_a(R, h) * w[h + 1][1];
    if (!r.is_zero())
      return fail("upper recurrence at level " + std::to_string(h), r);
    r = w[h][1] - w[h - 1][1] - cf_weight_b(R, h) * w[h + 1][0];
    if (!r.is_zero())
      return fail("lower recurrence at level " + std::to_string(h), r);
  }
  return CheckReport{true,
                     "recurrences and initial conditions hold through level " +
                         std::to_string(h_max)};
}

}  // namespace catalan
