#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "catalan/mpoly.hpp"

namespace catalan {

// Truncation setup shared by all solver pipelines. For a target x-degree X
// the capacity caps (q, y, z) are X(X+1)/2 - the staircase area bound - and
// the last-column cap (u) is X. cap_cushion widens every cap, including x,
// for the truncation-soundness regression.
struct SolverConfig {
  int x_max = 8;
  int cap_cushion = 0;

  int x_cap() const { return x_max + cap_cushion; }
  int stat_cap() const { return x_max * (x_max + 1) / 2 + cap_cushion; }
  int last_cap() const { return x_max + cap_cushion; }
};

inline VarSet ring_xuq(const SolverConfig& c) {
  return VarSet({"x", "u", "q"}, {c.x_cap(), c.last_cap(), c.stat_cap()});
}

inline VarSet ring_xq(const SolverConfig& c) {
  return VarSet({"x", "q"}, {c.x_cap(), c.stat_cap()});
}

inline VarSet ring_xyzu(const SolverConfig& c) {
  return VarSet({"x", "y", "z", "u"},
                {c.x_cap(), c.stat_cap(), c.stat_cap(), c.last_cap()});
}

// A named generating function plus the method and window that produced it.
struct GFResult {
  std::string method;
  std::string gf;
  int x_max = 0;
  MPoly series;
};

// Bivariate view (x-degree, statistic degree) -> coefficient, the common
// currency for cross-method comparison.
using XQTable = std::map<std::pair<int, int>, Int>;

// Projects a polynomial whose support uses only xvar and statvar.
// Throws std::logic_error if any other exponent is nonzero.
XQTable xq_table(const MPoly& p, int xvar, int statvar, int x_limit);

struct TableMismatch {
  int x = 0;
  int stat = 0;
  Int lhs;
  Int rhs;
  std::string text() const;
};
std::optional<TableMismatch> first_difference(const XQTable& a,
                                              const XQTable& b);

// Outcome of a residual/identity check; detail carries the first differing
// coefficient when ok is false.
struct CheckReport {
  bool ok = true;
  std::string detail;
};

}  // namespace catalan
