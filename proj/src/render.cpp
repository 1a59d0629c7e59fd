#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "artin/torus_class.hpp"

namespace artin {

namespace {

std::string lefschetz_power(int p, Notation notation) {
  const std::string base = notation == Notation::Latex ? "\\mathbb{L}" : "𝕃";
  if (p == 1) return base;
  return notation == Notation::Latex ? base + "^{" + std::to_string(p) + "}" : base + "^" + std::to_string(p);
}

std::string orbit_symbol(std::int64_t k, Notation notation) {
  if (notation == Notation::Text) return "[" + std::to_string(k) + "]";
  const std::string field = k == 1 ? "\\mathbb{F}_{q}" : "\\mathbb{F}_{q^{" + std::to_string(k) + "}}";
  return "[\\operatorname{Spec}" + field + "]";
}

// Terms of a coefficient. LaTeX lists orbits largest first, text follows the canonical order.
std::vector<std::pair<std::int64_t, std::int64_t>> ordered_terms(const CyclicBurnside& c, Notation notation) {
  std::vector<std::pair<std::int64_t, std::int64_t>> terms(c.coeffs().begin(), c.coeffs().end());
  if (notation == Notation::Latex) std::reverse(terms.begin(), terms.end());
  return terms;
}

std::string term_body(std::int64_t k, std::int64_t mag, Notation notation) {
  if (k == 1) return std::to_string(mag);
  const std::string times = notation == Notation::Latex ? "" : "·";
  return (mag == 1 ? "" : std::to_string(mag) + times) + orbit_symbol(k, notation);
}

void append_signed(std::ostringstream& out, bool& first, bool negative, const std::string& body) {
  if (first)
    out << (negative ? "-" : "");
  else
    out << (negative ? " - " : " + ");
  first = false;
  out << body;
}

}  // namespace

std::string render(const TorusClass& tc, Notation notation) {
  std::ostringstream out;
  bool first = true;
  const int n = tc.n();
  const std::string times = notation == Notation::Latex ? "\\cdot " : "·";
  for (int i = 0; i <= n; ++i) {
    const auto& c = tc.coefficient(i);
    const int p = n - i;
    if (c.is_zero()) continue;
    const auto terms = ordered_terms(c, notation);
    if (p == 0) {
      for (const auto& [k, coeff] : terms) append_signed(out, first, coeff < 0, term_body(k, coeff < 0 ? -coeff : coeff, notation));
      continue;
    }
    const std::string power = lefschetz_power(p, notation);
    if (terms.size() == 1) {
      const auto [k, coeff] = terms.front();
      const std::int64_t mag = coeff < 0 ? -coeff : coeff;
      const std::string body = (k == 1 && mag == 1) ? power : term_body(k, mag, notation) + times + power;
      append_signed(out, first, coeff < 0, body);
      continue;
    }
    std::ostringstream inner;
    bool inner_first = true;
    for (const auto& [k, coeff] : terms) append_signed(inner, inner_first, coeff < 0, term_body(k, coeff < 0 ? -coeff : coeff, notation));
    const std::string open = notation == Notation::Latex ? "\\bigl(" : "(";
    const std::string close = notation == Notation::Latex ? "\\bigr)" : ")";
    append_signed(out, first, false, open + inner.str() + close + times + power);
  }
  return first ? "0" : out.str();
}

nlohmann::ordered_json to_json(const TorusClass& tc) {
  nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
  const int n = tc.n();
  for (int i = 0; i <= n; ++i) {
    if (tc.coefficient(i).is_zero()) continue;
    coeffs.push_back({{"power", n - i}, {"artin", to_json(tc.coefficient(i))}});
  }
  return {{"n", n}, {"coeffs", coeffs}};
}

TorusClass torus_class_from_json(const nlohmann::ordered_json& j) {
  const int n = j.at("n").get<int>();
  if (n < 0) throw std::invalid_argument("torus class JSON: negative degree");
  std::vector<CyclicBurnside> coeffs(static_cast<std::size_t>(n) + 1);
  int previous = n + 1;
  for (const auto& entry : j.at("coeffs")) {
    const int power = entry.at("power").get<int>();
    if (power < 0 || power > n || power >= previous)
      throw std::invalid_argument("torus class JSON: powers must be descending and within 0..n");
    previous = power;
    coeffs[static_cast<std::size_t>(n - power)] = cyclic_burnside_from_json(entry.at("artin"));
  }
  return TorusClass::from_coefficients(std::move(coeffs));
}

}  // namespace artin
