#pragma once

#include <vector>

#include "sgo/exponent.hpp"
#include "sgo/rational.hpp"

namespace sgo::combin {

/// Stirling number of the second kind S(a, b). Memoized; thread-safe.
Integer stirling2(unsigned a, unsigned b);

Integer factorial(unsigned n);

/// x (x-1) ... (x-d+1); the empty product for d = 0.
Integer falling(const Integer& x, unsigned d);
Rational falling(const Rational& x, unsigned d);
inline Integer falling(long x, unsigned d) { return falling(Integer(x), d); }

/// Product of falling(x_i, alpha_i).
Integer falling(const std::vector<Integer>& x, const ExponentTuple& alpha);

Integer binomial(long n, long k);

/// d! / alpha!. Throws std::invalid_argument unless |alpha| = d.
Integer multinomial(unsigned d, const ExponentTuple& alpha);

/// alpha! = prod alpha_i!.
Integer factorial(const ExponentTuple& alpha);

/// (x-1)(x-2)...(x-d+1) = x^{d-1} + sum_i (-1)^{d-1-i} a_i x^i.
struct FallingPolyCoeffs {
  unsigned d = 0;
  std::vector<Integer> a;  // a_0 .. a_{d-2}, all positive
  Integer c_d;             // (d-1) * sum a_i

  /// Evaluates the reconstructed polynomial x^{d-1} + p(x).
  Integer evaluate(const Integer& x) const;
};

/// Throws std::invalid_argument for d < 2.
FallingPolyCoeffs falling_poly_coeffs(unsigned d);

}  // namespace sgo::combin
