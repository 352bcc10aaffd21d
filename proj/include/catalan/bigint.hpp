#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace catalan {

// Exact integer coefficients. Every denominator in the solver pipelines is a
// +-1-constant-term unit, so rationals never appear.
using Int = boost::multiprecision::cpp_int;

}  // namespace catalan
