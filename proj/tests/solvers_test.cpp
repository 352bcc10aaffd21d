#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "catalan/contfrac.hpp"
#include "catalan/funceq.hpp"
#include "catalan/gf_common.hpp"
#include "catalan/parity_system.hpp"
#include "catalan/render.hpp"
#include "catalan/verify.hpp"
#include "catalan/vertical_system.hpp"
#include "catalan/words.hpp"

using namespace catalan;

namespace {

using QCoeffs = std::vector<std::pair<int, long long>>;  // (q-exp, coeff)

// Printed expansion of the black-capacity series by length, transcribed.
const std::vector<QCoeffs> kFSeries = {
    /* x^1 */ {{1, 1}},
    /* x^2 */ {{2, 1}, {1, 1}},
    /* x^3 */ {{4, 1}, {3, 2}, {2, 2}},
    /* x^4 */ {{6, 1}, {5, 2}, {4, 4}, {3, 5}, {2, 2}},
    /* x^5 */ {{9, 1}, {8, 2}, {7, 5}, {6, 8}, {5, 12}, {4, 10}, {3, 4}},
    /* x^6 */
    {{12, 1}, {11, 2}, {10, 5}, {9, 9}, {8, 16}, {7, 24}, {6, 28}, {5, 27},
     {4, 16}, {3, 4}},
    /* x^7 */
    {{16, 1}, {15, 2}, {14, 5}, {13, 10}, {12, 18}, {11, 30}, {10, 47},
     {9, 62}, {8, 76}, {7, 76}, {6, 62}, {5, 32}, {4, 8}}};

MPoly f_series_poly(const VarSet& R, int up_to) {
  MPoly p(R);
  int xv = R.index("x"), qv = R.index("q");
  for (int n = 1; n <= up_to; ++n)
    for (auto [e, c] : kFSeries[n - 1]) {
      std::vector<int> exps(R.size(), 0);
      exps[xv] = n;
      exps[qv] = e;
      p += MPoly::monomial(R, exps, c);
    }
  return p;
}

MPoly truncate_x(const MPoly& p, int n_max) {
  MPoly r(p.ring());
  for (const auto& [k, c] : p.terms())
    if (p.ring().exp(k, 0) <= n_max) r.add_term(k, c);
  return r;
}

// Exhaustive counting series over the given statistics, as a polynomial in
// the solver's own ring; stat i lands on ring variable vars[i], or on
// variable i+1 when vars is omitted.
MPoly brute_poly(const VarSet& R, int n_max, const std::vector<Stat>& stats,
                 std::vector<int> vars = {}) {
  if (vars.empty())
    for (std::size_t i = 0; i < stats.size(); ++i)
      vars.push_back(static_cast<int>(i) + 1);
  MPoly p(R);
  for (int n = 1; n <= n_max; ++n) {
    DistributionTable d = distribution(n, stats, 14);
    for (const auto& [key, count] : d.counts) {
      std::vector<int> exps(R.size(), 0);
      exps[0] = n;
      for (std::size_t i = 0; i < key.size(); ++i)
        exps[vars[i]] = static_cast<int>(key[i]);
      p += MPoly::monomial(R, exps, count);
    }
  }
  return p;
}

bool x_parity_only(const MPoly& p, int parity) {
  for (const auto& [k, c] : p.terms())
    if (p.ring().exp(k, 0) % 2 != parity) return false;
  return true;
}

bool nonnegative_coeffs(const MPoly& p) {
  for (const auto& [k, c] : p.terms())
    if (c < 0) return false;
  return true;
}

}  // namespace

// ---------------------------------------------------------------- parity ---

TEST_CASE("parity system reproduces the printed F(x,1,q) expansion") {
  SolverConfig cfg{7};
  ParityAtOneSolution sol = parity_solve_at_one(cfg);
  CHECK(sol.f == f_series_poly(sol.f.ring(), 7));
}

TEST_CASE("parity system F(x,1,q) matches brute force") {
  SolverConfig cfg{7};
  ParityAtOneSolution sol = parity_solve_at_one(cfg);
  const VarSet& R = sol.f.ring();
  CHECK(sol.f == brute_poly(R, 7, {Stat::Bck}, {R.index("q")}));
}

TEST_CASE("parity components carry the right length parity") {
  SolverConfig cfg{6};
  ParityAtOneSolution sol = parity_solve_at_one(cfg);
  CHECK(x_parity_only(sol.at_one.comp[0], 0));
  CHECK(x_parity_only(sol.at_one.comp[1], 0));
  CHECK(x_parity_only(sol.at_one.comp[2], 1));
  CHECK(x_parity_only(sol.at_one.comp[3], 1));
}

TEST_CASE("full parity solution reproduces the printed F(x,u,q) expansion") {
  SolverConfig cfg{5};
  ParityFullSolution sol = parity_solve_full(cfg);
  const VarSet& R = sol.f.ring();
  // (u-exp, q-exp, coeff) per x-degree, transcribed from the display.
  using UQ = std::vector<std::array<long long, 3>>;
  const std::vector<UQ> expect = {
      {{1, 1, 1}},
      {{2, 2, 1}, {1, 1, 1}},
      {{3, 4, 1}, {2, 3, 1}, {2, 2, 1}, {1, 3, 1}, {1, 2, 1}},
      {{4, 6, 1}, {3, 5, 1}, {3, 4, 1}, {3, 3, 1}, {2, 5, 1}, {2, 4, 2},
       {2, 3, 2}, {1, 4, 1}, {1, 3, 2}, {1, 2, 2}},
      {{5, 9, 1}, {4, 8, 1}, {4, 7, 1}, {4, 6, 1}, {4, 5, 1}, {3, 8, 1},
       {3, 7, 2}, {3, 6, 3}, {3, 5, 3}, {2, 7, 1}, {2, 6, 2}, {2, 5, 4},
       {2, 4, 5}, {2, 3, 2}, {1, 7, 1}, {1, 6, 2}, {1, 5, 4}, {1, 4, 5},
       {1, 3, 2}}};
  MPoly want(R);
  for (int n = 1; n <= 5; ++n)
    for (auto [u, q, c] : expect[n - 1])
      want += MPoly::monomial(
          R, {n, static_cast<int>(u), static_cast<int>(q)}, c);
  CHECK(sol.f == want);
}

TEST_CASE("full parity solution matches brute force by (length,last,bck)") {
  SolverConfig cfg{6};
  ParityFullSolution sol = parity_solve_full(cfg);
  CHECK(sol.f == brute_poly(sol.f.ring(), 6, {Stat::Last, Stat::Bck}));
}

TEST_CASE("q-degree of the x^n coefficient stays within the area bounds") {
  SolverConfig cfg{8};
  ParityAtOneSolution sol = parity_solve_at_one(cfg);
  const VarSet& R = sol.f.ring();
  int qv = R.index("q");
  for (int n = 1; n <= 8; ++n) {
    MPoly c = sol.f.coefficient_of(0, n);
    REQUIRE_FALSE(c.is_zero());
    // At most the staircase area, at least one black cell per odd column.
    CHECK(c.degree(qv) <= n * (n + 1) / 2);
    CHECK(c.valuation(qv) >= (n + 1) / 2);
  }
}

TEST_CASE("parity solution at q=1 yields Catalan numbers") {
  SolverConfig cfg{8};
  ParityAtOneSolution sol = parity_solve_at_one(cfg);
  const VarSet& R = sol.f.ring();
  MPoly at_q1 = eval_one(sol.f, R.index("q"));
  for (int n = 1; n <= 8; ++n)
    CHECK(at_q1.coeff({n, 0, 0}) == Int(catalan_number(n)));
}

TEST_CASE("parity truncation is insensitive to widened caps") {
  ParityAtOneSolution base = parity_solve_at_one({5, 0});
  ParityAtOneSolution wide = parity_solve_at_one({5, 3});
  // Compare on the base window.
  for (const auto& [k, c] : base.f.terms()) {
    std::vector<int> e = base.f.ring().unpack(k);
    CHECK(wide.f.coeff(e) == c);
  }
  for (const auto& [k, c] : wide.f.terms()) {
    std::vector<int> e = wide.f.ring().unpack(k);
    if (base.f.ring().within_caps(base.f.ring().pack(e)))
      CHECK(base.f.coeff(e) == c);
  }
}

// -------------------------------------------------------------- contfrac ---

TEST_CASE("depth-0 convergent is I - U0") {
  SolverConfig cfg{4};
  VarSet R = ring_xq(cfg);
  SeriesMatrix s = cf_convergent_from(0, 0, R);
  CHECK(s.at(0, 0) == MPoly::one(R));
  CHECK(s.at(0, 1) == -MPoly::monomial(R, {1, 1}));  // -a_0 = -x q
  CHECK(s.at(1, 0) == -MPoly::monomial(R, {1, 0}));  // -b_0 = -x
}

TEST_CASE("convergents stabilize one x-order per level") {
  SolverConfig cfg{6};
  VarSet R = ring_xq(cfg);
  for (int n = 0; n <= 5; ++n) {
    SeriesMatrix a = cf_convergent_from(0, n, R);
    SeriesMatrix b = cf_convergent_from(0, n + 1, R);
    for (int d = 0; d <= n + 1; ++d)
      CHECK(a.coefficient_of(0, d) == b.coefficient_of(0, d));
  }
}

TEST_CASE("printed coefficient matrices of the continued fraction") {
  SolverConfig cfg{5};
  ContfracResult r = contfrac_solve(cfg);
  const VarSet& R = r.s0.ring();
  auto q = [&](int e, long long c) { return MPoly::monomial(R, {0, e}, c); };

  // S0 = I + x M1 + ... + x^5 M5.
  SeriesMatrix m1 = r.s0.coefficient_of(0, 1);
  CHECK(m1.at(0, 1) == q(1, -1));
  CHECK(m1.at(1, 0) == q(0, -1));
  CHECK(m1.at(0, 0).is_zero());
  SeriesMatrix m2 = r.s0.coefficient_of(0, 2);
  CHECK(m2.at(0, 0) == q(2, -1));
  CHECK(m2.at(1, 1) == q(1, -1));
  SeriesMatrix m3 = r.s0.coefficient_of(0, 3);
  CHECK(m3.at(0, 1) == q(4, -1) + q(3, -1));
  CHECK(m3.at(1, 0) == q(2, -2));
  SeriesMatrix m4 = r.s0.coefficient_of(0, 4);
  CHECK(m4.at(0, 0) == q(6, -1) + q(5, -2) + q(4, -2));
  CHECK(m4.at(1, 1) == q(4, -3) + q(3, -2));
  SeriesMatrix m5 = r.s0.coefficient_of(0, 5);
  CHECK(m5.at(0, 1) ==
        q(9, -1) + q(8, -2) + q(7, -4) + q(6, -5) + q(5, -2));
  CHECK(m5.at(1, 0) == q(6, -4) + q(5, -6) + q(4, -4));

  // S0^{-1} = I + x N1 + ... + x^5 N5.
  SeriesMatrix n1 = r.s0_inv.coefficient_of(0, 1);
  CHECK(n1.at(0, 1) == q(1, 1));
  CHECK(n1.at(1, 0) == q(0, 1));
  SeriesMatrix n2 = r.s0_inv.coefficient_of(0, 2);
  CHECK(n2.at(0, 0) == q(2, 1) + q(1, 1));
  CHECK(n2.at(1, 1) == q(1, 2));
  SeriesMatrix n3 = r.s0_inv.coefficient_of(0, 3);
  CHECK(n3.at(0, 1) == q(4, 1) + q(3, 2) + q(2, 2));
  CHECK(n3.at(1, 0) == q(2, 3) + q(1, 2));
  SeriesMatrix n4 = r.s0_inv.coefficient_of(0, 4);
  CHECK(n4.at(0, 0) ==
        q(6, 1) + q(5, 2) + q(4, 4) + q(3, 5) + q(2, 2));
  CHECK(n4.at(1, 1) == q(4, 4) + q(3, 6) + q(2, 4));
  SeriesMatrix n5 = r.s0_inv.coefficient_of(0, 5);
  CHECK(n5.at(0, 1) == q(9, 1) + q(8, 2) + q(7, 5) + q(6, 8) + q(5, 12) +
                           q(4, 10) + q(3, 4));
  CHECK(n5.at(1, 0) ==
        q(6, 5) + q(5, 8) + q(4, 13) + q(3, 12) + q(2, 4));
}

TEST_CASE("S0 coefficients alternate between diagonal and anti-diagonal") {
  SolverConfig cfg{8};
  ContfracResult r = contfrac_solve(cfg);
  for (int n = 1; n <= 8; ++n) {
    SeriesMatrix c = r.s0.coefficient_of(0, n);
    if (n % 2 == 1) {
      CHECK(c.at(0, 0).is_zero());
      CHECK(c.at(1, 1).is_zero());
    } else {
      CHECK(c.at(0, 1).is_zero());
      CHECK(c.at(1, 0).is_zero());
    }
  }
}

TEST_CASE("S0 times its inverse is the identity") {
  SolverConfig cfg{6};
  ContfracResult r = contfrac_solve(cfg);
  CHECK(r.s0 * r.s0_inv ==
        SeriesMatrix::identity(2, r.s0.ring()));
}

TEST_CASE("A0 - 1 is the black-capacity series") {
  SolverConfig cfg{8};
  ContfracResult r = contfrac_solve(cfg);
  const VarSet& R = r.a0.ring();
  CHECK(r.a0.coeff({0, 0}) == 1);
  MPoly series = r.a0 - MPoly::one(R);
  CHECK(truncate_x(series, 7) == f_series_poly(R, 7));
  CHECK(series == brute_poly(R, 8, {Stat::Bck}));
  CHECK(nonnegative_coeffs(series));
}

TEST_CASE("automaton recurrences hold within caps") {
  CheckReport r = contfrac_recurrence_check({8, 0}, 8);
  INFO(r.detail);
  CHECK(r.ok);
}

// -------------------------------------------------------------- vertical ---

TEST_CASE("vertical iteration reproduces the printed OD and EV series") {
  SolverConfig cfg{7};
  VerticalIterationResult it = vertical_solve_iteration(cfg);
  const VarSet& R = it.at_one.even.ring();
  int yv = R.index("y"), zv = R.index("z");

  MPoly od_y = eval_one(it.at_one.odd, zv);  // OD(x,y,1,1)
  MPoly want_od(R);
  auto add_y = [&](int n, int e, long long c) {
    want_od += MPoly::monomial(R, {n, e, 0, 0}, c);
  };
  add_y(1, 1, 1);
  for (auto [e, c] : QCoeffs{{4, 1}, {3, 2}, {2, 2}}) add_y(3, e, c);
  for (auto [e, c] :
       QCoeffs{{9, 1}, {8, 2}, {7, 5}, {6, 8}, {5, 12}, {4, 10}, {3, 4}})
    add_y(5, e, c);
  for (auto [e, c] :
       QCoeffs{{16, 1}, {15, 2}, {14, 5}, {13, 10}, {12, 18}, {11, 30},
               {10, 47}, {9, 62}, {8, 76}, {7, 76}, {6, 62}, {5, 32}, {4, 8}})
    add_y(7, e, c);
  CHECK(od_y == want_od);

  MPoly ev_z = eval_one(it.at_one.even, yv);  // EV(x,1,z,1)
  MPoly want_ev(R);
  auto add_z = [&](int n, int e, long long c) {
    want_ev += MPoly::monomial(R, {n, 0, e, 0}, c);
  };
  for (auto [e, c] : QCoeffs{{2, 1}, {1, 1}}) add_z(2, e, c);
  for (auto [e, c] : QCoeffs{{6, 1}, {5, 2}, {4, 4}, {3, 5}, {2, 2}})
    add_z(4, e, c);
  for (auto [e, c] : QCoeffs{{12, 1}, {11, 2}, {10, 5}, {9, 9}, {8, 16},
                             {7, 24}, {6, 28}, {5, 27}, {4, 16}, {3, 4}})
    add_z(6, e, c);
  CHECK(ev_z == want_ev);
}

TEST_CASE("vertical series by ver: the printed length marginal") {
  SolverConfig cfg{6};
  VerticalIterationResult it = vertical_solve_iteration(cfg);
  const VarSet& R = it.at_one.even.ring();
  int zv = R.index("z");
  // OD(x,y,1,1) + EV(x,y,1,1): odd part in y plus even part with z = 1.
  MPoly ver_series =
      eval_one(it.at_one.odd, zv) + eval_one(it.at_one.even, zv);
  using YC = std::vector<std::pair<int, long long>>;
  const std::vector<YC> expect = {
      {{1, 1}},
      {{1, 2}},
      {{4, 1}, {3, 2}, {2, 2}},
      {{4, 4}, {3, 6}, {2, 4}},
      {{9, 1}, {8, 2}, {7, 5}, {6, 8}, {5, 12}, {4, 10}, {3, 4}},
      {{9, 6}, {8, 10}, {7, 22}, {6, 28}, {5, 34}, {4, 24}, {3, 8}}};
  MPoly want(R);
  for (int n = 1; n <= 6; ++n)
    for (auto [e, c] : expect[n - 1])
      want += MPoly::monomial(R, {n, e, 0, 0}, c);
  CHECK(ver_series == want);
}

TEST_CASE("vertical closed form agrees with the iteration") {
  SolverConfig cfg{7};
  VerticalClosedFormResult cf = vertical_closed_form(cfg);  // throws on mismatch
  VerticalIterationResult it = vertical_solve_iteration(cfg);
  CHECK(cf.at_one.even == it.at_one.even);
  CHECK(cf.at_one.odd == it.at_one.odd);
  CHECK(cf.parts.delta.constant_term() == 1);
}

TEST_CASE("vertical full solution matches brute force by (ver,white,last)") {
  SolverConfig cfg{6};
  VerticalIterationResult it = vertical_solve_iteration(cfg);
  const VarSet& R = it.full.even.ring();
  MPoly brute = brute_poly(R, 6, {Stat::Ver, Stat::White, Stat::Last});
  MPoly even(R), odd(R);
  for (const auto& [k, c] : brute.terms())
    (R.exp(k, 0) % 2 == 0 ? even : odd).add_term(k, c);
  CHECK(it.full.even == even);
  CHECK(it.full.odd == odd);
  CHECK(x_parity_only(it.full.even, 0));
  CHECK(x_parity_only(it.full.odd, 1));
  CHECK(nonnegative_coeffs(it.full.even));
  CHECK(nonnegative_coeffs(it.full.odd));
}

TEST_CASE("vertical capacity sequence from the closed form") {
  SolverConfig cfg{8};
  VerticalClosedFormResult cf = vertical_closed_form(cfg);
  const VarSet& R = cf.at_one.even.ring();
  int zv = R.index("z");
  MPoly ver_series =
      eval_one(eval_one(cf.at_one.odd, zv) + eval_one(cf.at_one.even, zv), 0);
  // Counts with ver = k are complete once lengths up to 2k are included.
  const long long expect[] = {3, 6, 20, 63};
  for (int k = 1; k <= 4; ++k)
    CHECK(ver_series.coeff({0, k, 0, 0}) == Int(expect[k - 1]));

  // The parity-reassembled capacity marginal: odd part in y plus even part
  // in z, all at x = 1.
  int yv = R.index("y");
  MPoly bck_series = eval_one(
      eval_one(cf.at_one.odd, zv) +
          swap_vars(eval_one(cf.at_one.even, yv), yv, zv),
      0);
  const long long bck_expect[] = {2, 5, 15, 47};
  for (int k = 1; k <= 4; ++k)
    CHECK(bck_series.coeff({0, k, 0, 0}) == Int(bck_expect[k - 1]));
}

// ---------------------------------------------------------------- funceq ---

TEST_CASE("funceq solution starts with xyu and matches brute force") {
  SolverConfig cfg{8};
  FunceqSolution sol = funceq_solve(cfg);
  const VarSet& R = sol.c.ring();
  CHECK(sol.c.coefficient_of(0, 1) == MPoly::monomial(R, {0, 1, 0, 1}));
  CHECK(sol.c == brute_poly(R, 8, {Stat::S, Stat::SBar, Stat::Last}));
  CHECK(nonnegative_coeffs(sol.c));
}

TEST_CASE("funceq capacity marginal equals the parity-reassembled one") {
  SolverConfig cfg{7};
  FunceqSolution sol = funceq_solve(cfg);
  VerticalIterationResult it = vertical_solve_iteration(cfg);
  const VarSet& R = sol.c.ring();
  int yv = R.index("y"), zv = R.index("z");
  // C(x,y,1,1) = OD(x,y,1,1) + EV(x,1,y,1).
  MPoly lhs = eval_one(sol.f_at_one, zv);
  MPoly rhs = eval_one(it.at_one.odd, zv) +
              swap_vars(eval_one(it.at_one.even, yv), yv, zv);
  CHECK(lhs == rhs);
}

TEST_CASE("funceq specialization y=z=u=1 gives Catalan numbers") {
  SolverConfig cfg{7};
  FunceqSolution sol = funceq_solve(cfg);
  const VarSet& R = sol.c.ring();
  MPoly counts = eval_one(eval_one(eval_one(sol.c, 1), 2), 3);
  for (int n = 1; n <= 7; ++n)
    CHECK(counts.coeff({n, 0, 0, 0}) == Int(catalan_number(n)));
}

TEST_CASE("funceq solution is insensitive to widened caps") {
  FunceqSolution base = funceq_solve({5, 0});
  FunceqSolution wide = funceq_solve({5, 7});
  const VarSet& rb = base.c.ring();
  for (const auto& [k, c] : base.c.terms())
    REQUIRE(wide.c.coeff(rb.unpack(k)) == c);
  for (const auto& [k, c] : wide.c.terms()) {
    std::vector<int> e = wide.c.ring().unpack(k);
    bool inside = true;
    for (int i = 0; i < rb.size(); ++i)
      if (e[i] > rb.cap(i)) inside = false;
    if (inside) REQUIRE(base.c.coeff(e) == c);
  }
}

TEST_CASE("funceq identity checks") {
  SolverConfig cfg{6};
  FunceqSolution sol = funceq_solve(cfg);
  CheckReport rec = funceq_recursion_check(sol, cfg);
  INFO(rec.detail);
  CHECK(rec.ok);
  CheckReport ker = funceq_kernel_product_check(cfg, 3);
  INFO(ker.detail);
  CHECK(ker.ok);
  CheckReport tail = funceq_tail_check(sol, cfg, 3);
  INFO(tail.detail);
  CHECK(tail.ok);
}

// ------------------------------------------------------------- verify ------

TEST_CASE("all methods agree at x_max 6") {
  VerifyOutcome v = verify_black_capacity(6, 14);
  INFO(v.first_mismatch);
  CHECK(v.all_agree);
  CHECK(v.methods.size() == 6);
  CHECK(agreement_report(v).find("all methods agree") != std::string::npos);
}
