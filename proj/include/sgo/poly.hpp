#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "sgo/exponent.hpp"
#include "sgo/rational.hpp"

namespace sgo {

using Point = std::vector<Rational>;
using TermMap = std::map<ExponentTuple, Rational>;

/// Sparse polynomial in n variables with exact coefficients, not necessarily
/// homogeneous. Zero coefficients are never stored.
class Polynomial {
 public:
  explicit Polynomial(std::size_t n);
  Polynomial(std::size_t n, TermMap terms);

  std::size_t variables() const { return n_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Highest total degree of a stored monomial; 0 for the zero polynomial.
  unsigned max_degree() const;
  bool is_homogeneous() const;

  /// Adds c * x^alpha, merging with any existing term.
  void add_term(const ExponentTuple& alpha, const Rational& c);

  Rational evaluate(std::span<const Rational> x) const;

 private:
  std::size_t n_;
  TermMap terms_;
};

/// f in H_{n,d}: every stored exponent has |alpha| = d, n >= 1, d >= 1.
class HomogeneousPolynomial {
 public:
  /// Throws std::invalid_argument if a term has the wrong length or degree.
  HomogeneousPolynomial(std::size_t n, unsigned d, TermMap terms = {});

  static HomogeneousPolynomial from(const Polynomial& p, unsigned d);

  std::size_t variables() const { return n_; }
  unsigned degree() const { return d_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Coefficient f_alpha; zero when absent.
  Rational coefficient(const ExponentTuple& alpha) const;

  void add_term(const ExponentTuple& alpha, const Rational& c);

  /// f(x) = sum f_beta x^beta. Throws std::invalid_argument on a length mismatch.
  Rational evaluate(std::span<const Rational> x) const;

  /// f evaluated at alpha / r.
  Rational evaluate_grid(const ExponentTuple& alpha, unsigned r) const;

  /// f * (x_1 + ... + x_n)^k, the degree-(d+k) representation of the same
  /// function on the simplex.
  HomogeneousPolynomial elevate(unsigned k) const;

  HomogeneousPolynomial operator-() const;
  HomogeneousPolynomial& operator+=(const HomogeneousPolynomial& g);
  HomogeneousPolynomial& operator*=(const Rational& c);

  friend HomogeneousPolynomial operator+(HomogeneousPolynomial a, const HomogeneousPolynomial& b) {
    return a += b;
  }
  friend HomogeneousPolynomial operator*(const Rational& c, HomogeneousPolynomial f) {
    return f *= c;
  }
  friend bool operator==(const HomogeneousPolynomial&, const HomogeneousPolynomial&) = default;

 private:
  std::size_t n_;
  unsigned d_;
  TermMap terms_;
};

/// Bernstein coefficients f_beta * beta! / d! over all of I(n,d).
struct BernsteinTable {
  TermMap entries;
  Rational min_coeff;
  Rational max_coeff;
};

BernsteinTable bernstein_table(const HomogeneousPolynomial& f);

/// Bernstein sandwich of f after k degree elevations:
/// lower <= f_min and f_max <= upper.
struct BernsteinBounds {
  unsigned elevation = 0;
  Rational lower;
  Rational upper;
};

BernsteinBounds bernstein_enclosure(const HomogeneousPolynomial& f, unsigned elevation);

bool is_square_free(const HomogeneousPolynomial& f);

/// Multiplies each monomial of degree e by (sum x_i)^{d-e}. The result agrees
/// with p on the simplex. Throws std::invalid_argument if p has a monomial of
/// degree above d, or d == 0.
HomogeneousPolynomial homogenize(const Polynomial& p, unsigned d);

}  // namespace sgo
