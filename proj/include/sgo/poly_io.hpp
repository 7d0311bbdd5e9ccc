#pragma once

#include <istream>
#include <optional>
#include <string>

#include <json.hpp>

#include "sgo/poly.hpp"

namespace sgo::io {

/// Parsed polynomial document:
///   {"n": 2, "terms": [{"alpha": [2,0], "coef": "2"}, ...], "degree": 2}
/// "coef" is a string ("p/q", integer or decimal) or a JSON integer.
struct PolynomialDocument {
  Polynomial poly;
  std::optional<unsigned> degree;
};

/// Throws std::invalid_argument on schema violations.
PolynomialDocument parse_polynomial(const nlohmann::json& doc);
PolynomialDocument read_polynomial(std::istream& in);

/// Degree is the declared one, else the largest |alpha|. Unless
/// `homogenize` is set, every term must have exactly that degree.
HomogeneousPolynomial to_homogeneous(const PolynomialDocument& doc, bool homogenize);

/// Canonical (lexicographic) serialization.
nlohmann::json to_json(const HomogeneousPolynomial& f);

}  // namespace sgo::io
