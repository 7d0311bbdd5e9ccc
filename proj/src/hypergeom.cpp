#include "sgo/hypergeom.hpp"

#include <numeric>
#include <stdexcept>

#include "sgo/combin.hpp"
#include "sgo/grid.hpp"

namespace sgo::hypergeom {

using combin::binomial;
using combin::falling;
using combin::stirling2;

Params::Params(std::vector<unsigned> counts, unsigned r) : counts_(std::move(counts)), r_(r) {
  if (counts_.empty()) throw std::invalid_argument("hypergeometric urn needs n >= 1 colors");
  m_ = std::accumulate(counts_.begin(), counts_.end(), 0u);
  if (r_ < 1 || r_ > m_)
    throw std::invalid_argument("hypergeometric draw needs 1 <= r <= m (r=" + std::to_string(r_) +
                                ", m=" + std::to_string(m_) + ")");
}

Point Params::mean() const {
  Point x;
  for (unsigned c : counts_) {
    Rational q(c, m_);
    q.canonicalize();
    x.push_back(q);
  }
  return x;
}

namespace {

void require_dim(const Params& p, const ExponentTuple& a) {
  if (a.size() != p.n()) throw std::invalid_argument("exponent length does not match urn colors");
}

}  // namespace

Rational pmf(const Params& p, const ExponentTuple& alpha) {
  require_dim(p, alpha);
  if (alpha.degree() != p.r()) throw std::invalid_argument("pmf needs |alpha| = r");
  Integer num = 1;
  for (std::size_t i = 0; i < p.n() && num != 0; ++i) num *= binomial(p.count(i), alpha[i]);
  Rational q(num, binomial(p.m(), p.r()));
  q.canonicalize();
  return q;
}

Rational moment(const Params& p, const ExponentTuple& beta) {
  require_dim(p, beta);
  const unsigned r = p.r();
  const unsigned m = p.m();
  Rational total = 0;
  for (const auto& alpha : dominated(beta)) {
    const unsigned k = alpha.degree();
    // r^{k} falling vanishes for k > r; then m^{k} falling > 0 whenever it does not.
    if (k > r) continue;
    Integer prod = 1;
    for (std::size_t i = 0; i < p.n() && prod != 0; ++i)
      prod *= falling(Integer(p.count(i)), alpha[i]) * stirling2(beta[i], alpha[i]);
    if (prod == 0) continue;
    Rational term(falling(Integer(r), k) * prod, falling(Integer(m), k));
    term.canonicalize();
    total += term;
  }
  return total;
}

Rational scaled_moment(const Params& p, const ExponentTuple& beta) {
  Rational q = moment(p, beta) / pow_int(Integer(p.r()), beta.degree());
  return q;
}

Rational moment_bruteforce(const Params& p, const ExponentTuple& beta, std::uint64_t max_points) {
  require_dim(p, beta);
  const grid::GridSpec spec{p.n(), p.r()};
  if (grid::grid_size(spec) > max_points)
    throw std::length_error("brute-force moment refused: grid larger than limit");
  Rational total = 0;
  grid::enumerate_grid(spec, [&](const ExponentTuple& alpha) {
    Rational w = pmf(p, alpha);
    if (w == 0) return;
    Integer ab = 1;
    for (std::size_t i = 0; i < beta.size(); ++i) ab *= pow_int(Integer(alpha[i]), beta[i]);
    total += w * ab;
  });
  return total;
}

Rational scaled_moment_bruteforce(const Params& p, const ExponentTuple& beta, std::uint64_t max_points) {
  return moment_bruteforce(p, beta, max_points) / pow_int(Integer(p.r()), beta.degree());
}

TermMap quadratic_moments_closed(const Params& p) {
  const Rational m = p.m();
  const Rational r = p.r();
  if (p.m() < 2) throw std::invalid_argument("quadratic closed form needs m >= 2");
  const Rational q = (m - r) / (r * (m - 1));
  TermMap out;
  const std::size_t n = p.n();
  for (std::size_t i = 0; i < n; ++i) {
    const Rational mi = p.count(i);
    // (mi/m)^2 (1 - q) + mi (m - r) / (m r (m - 1)); the m_i in the denominator is cleared.
    out[ExponentTuple::unit(n, i, 2)] = (mi / m) * (mi / m) * (1 - q) + mi * (m - r) / (m * r * (m - 1));
    for (std::size_t j = i + 1; j < n; ++j) {
      ExponentTuple b(n);
      b[i] = b[j] = 1;
      out[b] = (mi / m) * (Rational(p.count(j)) / m) * (1 - q);
    }
  }
  return out;
}

TermMap cubic_moments_closed(const Params& p) {
  if (p.m() < 3) throw std::invalid_argument("cubic closed form needs m >= 3");
  const Rational m = p.m();
  const Rational r = p.r();
  const Rational den = r * r * (m - 1) * (m - 2);
  const Rational common = 1 - (m - r) * (3 * m * r - 2 * (m + r)) / den;
  TermMap out;
  const std::size_t n = p.n();
  for (std::size_t i = 0; i < n; ++i) {
    const Rational mi = p.count(i);
    const Rational xi = mi / m;
    // (m_i/m)^3 (m-r)(3 r m_i m^2 - 3 m_i m^2 + m^3 - 2 r m^2) / (r^2 m_i^2 (m-1)(m-2)), m_i^2 cleared.
    out[ExponentTuple::unit(n, i, 3)] =
        xi * xi * xi * common +
        mi * (m - r) * (3 * r * mi * m * m - 3 * mi * m * m + m * m * m - 2 * r * m * m) / (m * m * m * den);
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const Rational mj = p.count(j);
      ExponentTuple b(n);
      b[i] = 2;
      b[j] = 1;
      // (m_i/m)^2 (m_j/m) (m-r)(r-1) m^2 / (r^2 m_i (m-1)(m-2)), m_i cleared.
      out[b] = xi * xi * (mj / m) * common + mi * mj * (m - r) * (r - 1) / (m * den);
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        ExponentTuple t(n);
        t[i] = t[j] = t[k] = 1;
        out[t] = Rational(p.count(i)) * p.count(j) * p.count(k) / (m * m * m) * common;
      }
  return out;
}

Rational expectation(const HomogeneousPolynomial& f, const Params& p) {
  if (f.variables() != p.n()) throw std::invalid_argument("polynomial and urn dimensions differ");
  Rational total = 0;
  for (const auto& [beta, c] : f.terms()) total += c * scaled_moment(p, beta);
  return total;
}

Rational bernstein_approximation(const HomogeneousPolynomial& f, const Point& x, unsigned r) {
  if (x.size() != f.variables()) throw std::invalid_argument("point dimension does not match n");
  if (r < 1) throw std::invalid_argument("Bernstein approximation needs r >= 1");
  Rational sum = 0;
  for (const auto& xi : x) {
    if (xi < 0) throw std::invalid_argument("point is not on the simplex (negative coordinate)");
    sum += xi;
  }
  if (sum != 1) throw std::invalid_argument("point is not on the simplex (coordinates sum to " + to_string(sum) + ")");

  Rational total = 0;
  grid::enumerate_grid({f.variables(), r}, [&](const ExponentTuple& alpha) {
    Rational w = combin::multinomial(r, alpha);
    for (std::size_t i = 0; i < alpha.size() && w != 0; ++i)
      if (alpha[i]) w *= pow_rat(x[i], alpha[i]);
    if (w != 0) total += f.evaluate_grid(alpha, r) * w;
  });
  return total;
}

}  // namespace sgo::hypergeom
