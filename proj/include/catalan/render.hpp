#pragma once

#include <string>

#include "catalan/mpoly.hpp"
#include "catalan/series_matrix.hpp"

namespace catalan {

// Canonical text form: terms in sorted_terms() order, unit coefficients
// elided, "-" folded into the join ("q^2 - 3*q + 1"). Zero renders as "0".
std::string poly_text(const MPoly& p);

// One line per nonzero coefficient of the grading variable, ascending:
// "x^3: q^4 + 2*q^3 + 2*q^2". Degrees above max_deg are omitted.
std::string series_lines(const MPoly& p, int max_deg);

// "x^2: [-q^2, 0; 0, -q]" per nonzero coefficient matrix of the grading
// variable.
std::string matrix_series_lines(const SeriesMatrix& m, int max_deg);

// JSON list of {"exp":[...],"coef":"<decimal>"} in canonical order.
std::string poly_json_terms(const MPoly& p);

// Row-major nested array of per-entry term lists.
std::string matrix_json(const SeriesMatrix& m);

}  // namespace catalan
