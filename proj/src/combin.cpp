#include "sgo/combin.hpp"

#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace sgo {

ExponentTuple operator+(const ExponentTuple& a, const ExponentTuple& b) {
  if (a.size() != b.size()) throw std::invalid_argument("exponent length mismatch");
  ExponentTuple c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

namespace {

void compositions_rec(ExponentTuple& cur, std::size_t pos, unsigned left,
                      std::vector<ExponentTuple>& out) {
  if (pos + 1 == cur.size()) {
    cur[pos] = left;
    out.push_back(cur);
    return;
  }
  for (unsigned v = 0; v <= left; ++v) {
    cur[pos] = v;
    compositions_rec(cur, pos + 1, left - v, out);
  }
}

void dominated_rec(const ExponentTuple& beta, ExponentTuple& cur, std::size_t pos,
                   std::vector<ExponentTuple>& out) {
  if (pos == beta.size()) {
    out.push_back(cur);
    return;
  }
  for (unsigned v = 0; v <= beta[pos]; ++v) {
    cur[pos] = v;
    dominated_rec(beta, cur, pos + 1, out);
  }
}

}  // namespace

std::vector<ExponentTuple> compositions(std::size_t n, unsigned d) {
  std::vector<ExponentTuple> out;
  if (n == 0) return out;
  ExponentTuple cur(n);
  compositions_rec(cur, 0, d, out);
  return out;
}

std::vector<ExponentTuple> dominated(const ExponentTuple& beta) {
  std::vector<ExponentTuple> out;
  ExponentTuple cur(beta.size());
  dominated_rec(beta, cur, 0, out);
  return out;
}

namespace combin {

namespace {

// Row a holds S(a, 0..a).
class StirlingTable {
 public:
  Integer get(unsigned a, unsigned b) {
    if (b > a) return 0;
    {
      std::shared_lock lock(mu_);
      if (a < rows_.size()) return rows_[a][b];
    }
    std::unique_lock lock(mu_);
    if (rows_.empty()) rows_.push_back({Integer(1)});
    while (rows_.size() <= a) {
      const auto& prev = rows_.back();
      const unsigned n = static_cast<unsigned>(rows_.size());
      std::vector<Integer> row(n + 1, 0);
      for (unsigned k = 1; k <= n; ++k) {
        Integer v = (k < n) ? Integer(k * prev[k]) : Integer(0);
        v += prev[k - 1];
        row[k] = v;
      }
      rows_.push_back(std::move(row));
    }
    return rows_[a][b];
  }

 private:
  std::shared_mutex mu_;
  std::vector<std::vector<Integer>> rows_;
};

StirlingTable& stirling_table() {
  static StirlingTable table;
  return table;
}

}  // namespace

Integer stirling2(unsigned a, unsigned b) { return stirling_table().get(a, b); }

Integer factorial(unsigned n) {
  Integer z;
  mpz_fac_ui(z.get_mpz_t(), n);
  return z;
}

Integer falling(const Integer& x, unsigned d) {
  Integer p = 1;
  for (unsigned i = 0; i < d; ++i) p *= x - i;
  return p;
}

Rational falling(const Rational& x, unsigned d) {
  Rational p = 1;
  for (unsigned i = 0; i < d; ++i) p *= x - i;
  return p;
}

Integer falling(const std::vector<Integer>& x, const ExponentTuple& alpha) {
  if (x.size() != alpha.size()) throw std::invalid_argument("falling: length mismatch");
  Integer p = 1;
  for (std::size_t i = 0; i < x.size() && p != 0; ++i) p *= falling(x[i], alpha[i]);
  return p;
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer z;
  mpz_bin_uiui(z.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return z;
}

Integer factorial(const ExponentTuple& alpha) {
  Integer p = 1;
  for (unsigned a : alpha) p *= factorial(a);
  return p;
}

Integer multinomial(unsigned d, const ExponentTuple& alpha) {
  if (alpha.degree() != d) throw std::invalid_argument("multinomial: |alpha| != d");
  Integer q;
  mpz_divexact(q.get_mpz_t(), factorial(d).get_mpz_t(), factorial(alpha).get_mpz_t());
  return q;
}

Integer FallingPolyCoeffs::evaluate(const Integer& x) const {
  Integer v = pow_int(x, d - 1);
  for (unsigned i = 0; i + 1 < d; ++i) {
    Integer term = a[i] * pow_int(x, i);
    if ((d - 1 - i) % 2 == 1)
      v -= term;
    else
      v += term;
  }
  return v;
}

FallingPolyCoeffs falling_poly_coeffs(unsigned d) {
  if (d < 2) throw std::invalid_argument("falling_poly_coeffs requires d >= 2");
  // coeffs[i] is the coefficient of x^i in (x-1)...(x-j).
  std::vector<Integer> coeffs{1};
  for (unsigned j = 1; j + 1 <= d; ++j) {
    std::vector<Integer> next(coeffs.size() + 1, 0);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      next[i + 1] += coeffs[i];
      next[i] -= coeffs[i] * j;
    }
    coeffs = std::move(next);
  }
  FallingPolyCoeffs out;
  out.d = d;
  Integer sum = 0;
  for (unsigned i = 0; i + 1 < d; ++i) {
    out.a.push_back(abs(coeffs[i]));
    sum += out.a.back();
  }
  out.c_d = sum * (d - 1);
  return out;
}

}  // namespace combin
}  // namespace sgo
