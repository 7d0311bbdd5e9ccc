#include "sgo/poly_io.hpp"

#include <stdexcept>

namespace sgo::io {

using nlohmann::json;

namespace {

Rational parse_coef(const json& c) {
  if (c.is_string()) return parse_rational(c.get<std::string>());
  if (c.is_number_integer()) {
    if (c.is_number_unsigned()) return Rational(Integer(std::to_string(c.get<std::uint64_t>())));
    return Rational(Integer(std::to_string(c.get<std::int64_t>())));
  }
  if (c.is_number_float())
    throw std::invalid_argument("floating-point coef is ambiguous; write it as a string, e.g. \"0.1\"");
  throw std::invalid_argument("coef must be a string or integer");
}

}  // namespace

PolynomialDocument parse_polynomial(const json& doc) {
  if (!doc.is_object()) throw std::invalid_argument("polynomial document must be an object");
  if (!doc.contains("n") || !doc["n"].is_number_integer() || doc["n"].get<long long>() < 1)
    throw std::invalid_argument("\"n\" must be a positive integer");
  const auto n = static_cast<std::size_t>(doc["n"].get<long long>());
  if (!doc.contains("terms") || !doc["terms"].is_array())
    throw std::invalid_argument("\"terms\" must be an array");

  Polynomial p(n);
  for (const auto& t : doc["terms"]) {
    if (!t.is_object() || !t.contains("alpha") || !t.contains("coef"))
      throw std::invalid_argument("each term needs \"alpha\" and \"coef\"");
    const auto& a = t["alpha"];
    if (!a.is_array() || a.size() != n)
      throw std::invalid_argument("\"alpha\" must be an array of length n");
    ExponentTuple alpha(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (!a[i].is_number_integer() || a[i].get<long long>() < 0)
        throw std::invalid_argument("exponents must be nonnegative integers");
      alpha[i] = static_cast<unsigned>(a[i].get<long long>());
    }
    p.add_term(alpha, parse_coef(t["coef"]));
  }

  std::optional<unsigned> degree;
  if (doc.contains("degree") && !doc["degree"].is_null()) {
    if (!doc["degree"].is_number_integer() || doc["degree"].get<long long>() < 1)
      throw std::invalid_argument("\"degree\" must be a positive integer");
    degree = static_cast<unsigned>(doc["degree"].get<long long>());
  }
  return {std::move(p), degree};
}

PolynomialDocument read_polynomial(std::istream& in) {
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
  }
  return parse_polynomial(doc);
}

HomogeneousPolynomial to_homogeneous(const PolynomialDocument& doc, bool homogenize_terms) {
  unsigned d = doc.degree.value_or(doc.poly.max_degree());
  if (d == 0) {
    if (!homogenize_terms && !doc.poly.is_zero())
      throw std::invalid_argument("constant polynomial has degree 0; pass a degree or homogenize");
    d = std::max(1u, d);
  }
  if (homogenize_terms) return homogenize(doc.poly, d);
  for (const auto& [alpha, c] : doc.poly.terms())
    if (alpha.degree() != d)
      throw std::invalid_argument("polynomial is not homogeneous of degree " + std::to_string(d) +
                                  " (term " + alpha.to_string() + "); use --homogenize");
  return HomogeneousPolynomial::from(doc.poly, d);
}

json to_json(const HomogeneousPolynomial& f) {
  json terms = json::array();
  for (const auto& [alpha, c] : f.terms())
    terms.push_back({{"alpha", alpha.values()}, {"coef", to_string(c)}});
  return {{"n", f.variables()}, {"degree", f.degree()}, {"terms", terms}};
}

}  // namespace sgo::io
