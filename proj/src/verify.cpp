#include "catalan/verify.hpp"

#include <stdexcept>

#include "catalan/contfrac.hpp"
#include "catalan/funceq.hpp"
#include "catalan/parity_system.hpp"
#include "catalan/vertical_system.hpp"
#include "catalan/words.hpp"

namespace catalan {

XQTable xq_table(const MPoly& p, int xvar, int statvar, int x_limit) {
  const VarSet& R = p.ring();
  XQTable t;
  for (const auto& [k, c] : p.terms()) {
    for (int i = 0; i < R.size(); ++i)
      if (i != xvar && i != statvar && R.exp(k, i) != 0)
        throw std::logic_error("xq_table: unexpected exponent of " +
                               R.name(i));
    int x = R.exp(k, xvar);
    if (x > x_limit) continue;
    t[{x, R.exp(k, statvar)}] = c;
  }
  return t;
}

std::string TableMismatch::text() const {
  return "x^" + std::to_string(x) + " q^" + std::to_string(stat) + ": " +
         lhs.str() + " vs " + rhs.str();
}

std::optional<TableMismatch> first_difference(const XQTable& a,
                                              const XQTable& b) {
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      return TableMismatch{ia->first.first, ia->first.second, ia->second, 0};
    }
    if (ia == a.end() || ib->first < ia->first) {
      return TableMismatch{ib->first.first, ib->first.second, 0, ib->second};
    }
    if (ia->second != ib->second) {
      return TableMismatch{ia->first.first, ia->first.second, ia->second,
                           ib->second};
    }
    ++ia;
    ++ib;
  }
  return std::nullopt;
}

XQTable brute_force_table(int x_max, int enum_cap) {
  XQTable t;
  for (int n = 1; n <= x_max; ++n) {
    DistributionTable d = distribution(n, {Stat::Bck}, enum_cap);
    for (const auto& [key, count] : d.counts)
      t[{n, static_cast<int>(key[0])}] = count;
  }
  return t;
}

XQTable parity_table(int x_max) {
  SolverConfig cfg{x_max};
  ParityAtOneSolution sol = parity_solve_at_one(cfg);
  const VarSet& R = sol.f.ring();
  return xq_table(sol.f, R.index("x"), R.index("q"), x_max);
}

XQTable contfrac_table(int x_max) {
  SolverConfig cfg{x_max};
  ContfracResult r = contfrac_solve(cfg);
  const VarSet& R = r.a0.ring();
  MPoly series = r.a0 - MPoly::one(R);
  return xq_table(series, R.index("x"), R.index("q"), x_max);
}

XQTable vertical_table(int x_max, bool closed_form) {
  SolverConfig cfg{x_max};
  VerticalPair at_one = closed_form
                            ? vertical_closed_form(cfg).at_one
                            : vertical_solve_iteration(cfg).at_one;
  const VarSet& R = at_one.even.ring();
  int xv = R.index("x"), yv = R.index("y"), zv = R.index("z");
  // Odd lengths report the capacity through y (odd-column cells), even
  // lengths through z (even-column cells); the supports are x-parity
  // disjoint so the tables merge without collisions.
  XQTable t = xq_table(eval_one(at_one.odd, zv), xv, yv, x_max);
  XQTable even = xq_table(eval_one(at_one.even, yv), xv, zv, x_max);
  for (const auto& [k, c] : even) {
    if (t.count(k))
      throw std::logic_error("vertical_table: parity supports overlap");
    t[k] = c;
  }
  return t;
}

XQTable funceq_table(int x_max) {
  SolverConfig cfg{x_max};
  FunceqSolution sol = funceq_solve(cfg);
  const VarSet& R = sol.c.ring();
  MPoly series = eval_one(sol.f_at_one, R.index("z"));
  return xq_table(series, R.index("x"), R.index("y"), x_max);
}

VerifyOutcome verify_black_capacity(int x_max, int enum_cap) {
  VerifyOutcome v;
  v.x_max = x_max;
  v.methods = {"brute", "matrix", "contfrac", "vertical-iter",
               "vertical-closed", "funceq"};
  v.tables.push_back(brute_force_table(x_max, enum_cap));
  v.tables.push_back(parity_table(x_max));
  v.tables.push_back(contfrac_table(x_max));
  v.tables.push_back(vertical_table(x_max, false));
  v.tables.push_back(vertical_table(x_max, true));
  v.tables.push_back(funceq_table(x_max));

  std::size_t m = v.methods.size();
  v.agree.assign(m, std::vector<bool>(m, true));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      auto diff = first_difference(v.tables[i], v.tables[j]);
      bool same = !diff.has_value();
      v.agree[i][j] = v.agree[j][i] = same;
      if (!same && v.all_agree) {
        v.all_agree = false;
        v.first_mismatch = v.methods[i] + " vs " + v.methods[j] + " at " +
                           diff->text();
      }
    }
  return v;
}

std::string agreement_report(const VerifyOutcome& v) {
  std::string out = "black-capacity series agreement, x_max = " +
                    std::to_string(v.x_max) + "\n";
  std::size_t width = 0;
  for (const auto& m : v.methods) width = std::max(width, m.size());
  for (std::size_t i = 0; i < v.methods.size(); ++i) {
    out += v.methods[i] + std::string(width - v.methods[i].size() + 2, ' ');
    for (std::size_t j = 0; j < v.methods.size(); ++j)
      out += i == j ? " ." : (v.agree[i][j] ? " =" : " X");
    out += "\n";
  }
  out += v.all_agree ? "all methods agree coefficient-exactly\n"
                     : "MISMATCH: " + v.first_mismatch + "\n";
  return out;
}

}  // namespace catalan
