#pragma once

#include <cstdint>
#include <vector>

#include "sgo/poly.hpp"

namespace sgo::hypergeom {

/// Urn with counts[i] balls of color i (m in total); r balls are drawn
/// without replacement. Y_i counts draws of color i, X = Y / r.
class Params {
 public:
  /// Throws std::invalid_argument unless n >= 1 and 1 <= r <= m.
  Params(std::vector<unsigned> counts, unsigned r);

  std::size_t n() const { return counts_.size(); }
  unsigned m() const { return m_; }
  unsigned r() const { return r_; }
  const std::vector<unsigned>& counts() const { return counts_; }
  unsigned count(std::size_t i) const { return counts_[i]; }

  /// counts / m, the mean of X.
  Point mean() const;

 private:
  std::vector<unsigned> counts_;
  unsigned m_ = 0;
  unsigned r_ = 0;
};

/// Pr[Y = alpha] = prod C(m_i, alpha_i) / C(m, r). Requires |alpha| = r.
Rational pmf(const Params& p, const ExponentTuple& alpha);

/// E[Y^beta] via the Stirling-number expansion over alpha <= beta.
Rational moment(const Params& p, const ExponentTuple& beta);

/// E[X^beta] = moment / r^{|beta|}.
Rational scaled_moment(const Params& p, const ExponentTuple& beta);

/// Oracle: sum over I(n, r) of (alpha/r)^beta * pmf. Refuses grids larger
/// than `max_points` (default 10^4) with std::length_error.
Rational scaled_moment_bruteforce(const Params& p, const ExponentTuple& beta,
                                  std::uint64_t max_points = 10'000);
Rational moment_bruteforce(const Params& p, const ExponentTuple& beta,
                           std::uint64_t max_points = 10'000);

/// Closed forms of E[X_i^2], E[X_i X_j] (needs m >= 2), keyed by beta in I(n,2).
TermMap quadratic_moments_closed(const Params& p);
/// Closed forms of E[X_i^3], E[X_i^2 X_j], E[X_i X_j X_k] (needs m >= 3), keyed by beta in I(n,3).
TermMap cubic_moments_closed(const Params& p);

/// E[f(X)] = sum f_beta E[X^beta].
Rational expectation(const HomogeneousPolynomial& f, const Params& p);

/// Multinomial (with-replacement) counterpart: the Bernstein approximation
/// sum_{alpha in I(n,r)} f(alpha/r) (r!/alpha!) x^alpha. x must lie on the simplex.
Rational bernstein_approximation(const HomogeneousPolynomial& f, const Point& x, unsigned r);

}  // namespace sgo::hypergeom
