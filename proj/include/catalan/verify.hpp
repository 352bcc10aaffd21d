#pragma once

#include <string>
#include <vector>

#include "catalan/gf_common.hpp"

namespace catalan {

// Cross-method agreement on the black-capacity series: brute-force counts,
// the 4x4 parity system, the continued fraction, both vertical-system
// pipelines reassembled by length parity, and the functional-equation solve
// must produce identical (length, capacity) tables.
struct VerifyOutcome {
  int x_max = 0;
  std::vector<std::string> methods;
  std::vector<XQTable> tables;
  std::vector<std::vector<bool>> agree;  // pairwise, indexed like methods
  bool all_agree = true;
  std::string first_mismatch;  // empty when all_agree
};

VerifyOutcome verify_black_capacity(int x_max, int enum_cap);

// Individual tables, exposed for the CLI series command and tests.
XQTable brute_force_table(int x_max, int enum_cap);
XQTable parity_table(int x_max);
XQTable contfrac_table(int x_max);
XQTable vertical_table(int x_max, bool closed_form);
XQTable funceq_table(int x_max);

std::string agreement_report(const VerifyOutcome& v);

}  // namespace catalan
