#pragma once

// Deliberately naive reference implementations used as test oracles. None of
// them call into the library's combinatorics; they only share the number types.

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <vector>

#include "sgo/poly.hpp"

namespace oracle {

using sgo::ExponentTuple;
using sgo::HomogeneousPolynomial;
using sgo::Integer;
using sgo::Rational;

// Partitions of {1..a} into b nonempty blocks, counted via restricted growth strings.
inline Integer stirling2(unsigned a, unsigned b) {
  if (a == 0) return b == 0 ? 1 : 0;
  Integer count = 0;
  std::vector<unsigned> s(a, 0);
  std::function<void(unsigned, unsigned)> rec = [&](unsigned pos, unsigned maxv) {
    if (pos == a) {
      if (maxv + 1 == b) ++count;
      return;
    }
    for (unsigned v = 0; v <= maxv + 1 && v < b; ++v) rec(pos + 1, std::max(maxv, v));
  };
  rec(1, 0);  // s[0] = 0
  return count;
}

// Pascal's triangle.
inline Integer binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  std::vector<Integer> row{1};
  for (unsigned i = 1; i <= n; ++i) {
    std::vector<Integer> next(i + 1, 1);
    for (unsigned j = 1; j < i; ++j) next[j] = row[j - 1] + row[j];
    row = std::move(next);
  }
  return row[k];
}

inline Rational power(const Rational& x, unsigned e) {
  Rational p = 1;
  for (unsigned i = 0; i < e; ++i) p *= x;
  return p;
}

// All compositions of r into n parts, recursive, order unspecified.
inline void compositions(std::size_t n, unsigned r, const std::function<void(const std::vector<unsigned>&)>& fn) {
  std::vector<unsigned> cur(n, 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
    if (i + 1 == n) {
      cur[i] = left;
      fn(cur);
      return;
    }
    for (unsigned v = 0; v <= left; ++v) {
      cur[i] = v;
      rec(i + 1, left - v);
    }
  };
  rec(0, r);
}

// f evaluated monomial by monomial with repeated multiplication.
inline Rational eval(const HomogeneousPolynomial& f, const std::vector<Rational>& x) {
  Rational s = 0;
  for (const auto& [a, c] : f.terms()) {
    Rational t = c;
    for (std::size_t i = 0; i < x.size(); ++i) t *= power(x[i], a[i]);
    s += t;
  }
  return s;
}

struct GridExtrema {
  Rational min;
  Rational max;
  std::uint64_t min_ties = 0;
  std::uint64_t points = 0;
};

inline GridExtrema grid_extrema(const HomogeneousPolynomial& f, unsigned r) {
  GridExtrema out;
  bool first = true;
  compositions(f.variables(), r, [&](const std::vector<unsigned>& a) {
    std::vector<Rational> x;
    for (unsigned v : a) x.emplace_back(v, r);
    for (auto& q : x) q.canonicalize();
    const Rational v = eval(f, x);
    ++out.points;
    if (first || v < out.min) {
      out.min = v;
      out.min_ties = 1;
    } else if (v == out.min) {
      ++out.min_ties;
    }
    if (first || v > out.max) out.max = v;
    first = false;
  });
  return out;
}

// Hypergeometric law of Y by enumerating every r-subset of the m labelled
// balls and tallying colors. Exponential; keep C(m, r) small.
inline std::map<std::vector<unsigned>, Rational> urn_law(const std::vector<unsigned>& counts, unsigned r) {
  std::vector<unsigned> color;
  for (std::size_t i = 0; i < counts.size(); ++i)
    for (unsigned j = 0; j < counts[i]; ++j) color.push_back(static_cast<unsigned>(i));
  const unsigned m = static_cast<unsigned>(color.size());
  std::map<std::vector<unsigned>, Integer> tally;
  Integer total = 0;
  std::vector<unsigned> y(counts.size(), 0);
  std::function<void(unsigned, unsigned)> rec = [&](unsigned start, unsigned left) {
    if (left == 0) {
      ++tally[y];
      ++total;
      return;
    }
    for (unsigned b = start; b + left <= m; ++b) {
      ++y[color[b]];
      rec(b + 1, left - 1);
      --y[color[b]];
    }
  };
  rec(0, r);
  std::map<std::vector<unsigned>, Rational> law;
  for (const auto& [k, v] : tally) {
    Rational p(v, total);
    p.canonicalize();
    law[k] = p;
  }
  return law;
}

// E[(Y/r)^beta] from the enumerated law.
inline Rational urn_moment(const std::vector<unsigned>& counts, unsigned r, const ExponentTuple& beta) {
  Rational s = 0;
  for (const auto& [y, p] : urn_law(counts, r)) {
    Rational t = p;
    for (std::size_t i = 0; i < y.size(); ++i) {
      Rational xi(y[i], r);
      xi.canonicalize();
      t *= power(xi, beta[i]);
    }
    s += t;
  }
  return s;
}

// Falling factorial by direct product.
inline Rational falling(const Rational& x, unsigned d) {
  Rational p = 1;
  for (unsigned i = 0; i < d; ++i) p *= x - i;
  return p;
}

// Coefficients (constant term first) of (x-1)(x-2)...(x-d+1).
inline std::vector<long> falling_product_coeffs(unsigned d) {
  std::vector<long> c{1};
  for (unsigned j = 1; j < d; ++j) {
    std::vector<long> next(c.size() + 1, 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= static_cast<long>(j) * c[i];
    }
    c = std::move(next);
  }
  return c;
}

inline HomogeneousPolynomial random_poly(std::mt19937_64& rng, std::size_t n, unsigned d, int bound, bool rational = false) {
  HomogeneousPolynomial f(n, d);
  std::uniform_int_distribution<int> coef(-bound, bound);
  std::uniform_int_distribution<int> den(1, 7);
  compositions(n, d, [&](const std::vector<unsigned>& a) {
    Rational c(coef(rng), rational ? den(rng) : 1);
    c.canonicalize();
    if (c != 0) f.add_term(ExponentTuple(a), c);
  });
  return f;
}

// A random rational point on the simplex with denominator q.
inline std::vector<Rational> random_simplex_point(std::mt19937_64& rng, std::size_t n, unsigned q) {
  std::vector<unsigned> parts(n, 0);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (unsigned i = 0; i < q; ++i) ++parts[pick(rng)];
  std::vector<Rational> x;
  for (unsigned v : parts) {
    Rational xi(v, q);
    xi.canonicalize();
    x.push_back(xi);
  }
  return x;
}

inline HomogeneousPolynomial sum_of_squares(std::size_t n) {
  HomogeneousPolynomial f(n, 2);
  for (std::size_t i = 0; i < n; ++i) f.add_term(ExponentTuple::unit(n, i, 2), 1);
  return f;
}

inline HomogeneousPolynomial worked_example() {
  return HomogeneousPolynomial(2, 2, {{ExponentTuple{2, 0}, 2}, {ExponentTuple{0, 2}, 1}, {ExponentTuple{1, 1}, -5}});
}

}  // namespace oracle
