#include "catalan/render.hpp"

#include <json.hpp>

namespace catalan {

namespace {

std::string monomial_text(const VarSet& R, MPoly::Key k, const Int& coef) {
  Int mag = coef < 0 ? Int(-coef) : coef;
  std::string vars;
  for (int i = 0; i < R.size(); ++i) {
    int e = R.exp(k, i);
    if (e == 0) continue;
    if (!vars.empty()) vars += "*";
    vars += R.name(i);
    if (e > 1) vars += "^" + std::to_string(e);
  }
  if (vars.empty()) return mag.str();
  if (mag == 1) return vars;
  return mag.str() + "*" + vars;
}

}  // namespace

std::string poly_text(const MPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : p.sorted_terms()) {
    if (first) {
      if (c < 0) out += "-";
      first = false;
    } else {
      out += c < 0 ? " - " : " + ";
    }
    out += monomial_text(p.ring(), k, c);
  }
  return out;
}

std::string series_lines(const MPoly& p, int max_deg) {
  std::string out;
  for (int n = 0; n <= max_deg; ++n) {
    MPoly c = p.coefficient_of(0, n);
    if (c.is_zero()) continue;
    out += p.ring().name(0) + "^" + std::to_string(n) + ": " + poly_text(c) +
           "\n";
  }
  return out;
}

std::string matrix_series_lines(const SeriesMatrix& m, int max_deg) {
  std::string out;
  for (int n = 0; n <= max_deg; ++n) {
    SeriesMatrix c = m.coefficient_of(0, n);
    bool zero = true;
    for (int i = 0; i < m.dim() && zero; ++i)
      for (int j = 0; j < m.dim(); ++j)
        if (!c.at(i, j).is_zero()) {
          zero = false;
          break;
        }
    if (zero) continue;
    out += m.ring().name(0) + "^" + std::to_string(n) + ": [";
    for (int i = 0; i < m.dim(); ++i) {
      if (i) out += "; ";
      for (int j = 0; j < m.dim(); ++j) {
        if (j) out += ", ";
        out += poly_text(c.at(i, j));
      }
    }
    out += "]\n";
  }
  return out;
}

namespace {

nlohmann::json json_terms(const MPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [k, c] : p.sorted_terms()) {
    nlohmann::json t;
    t["exp"] = p.ring().unpack(k);
    t["coef"] = c.str();
    terms.push_back(std::move(t));
  }
  return terms;
}

}  // namespace

std::string poly_json_terms(const MPoly& p) { return json_terms(p).dump(); }

std::string matrix_json(const SeriesMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < m.dim(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < m.dim(); ++j) row.push_back(json_terms(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows.dump();
}

}  // namespace catalan
