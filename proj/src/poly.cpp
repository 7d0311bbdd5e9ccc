#include "sgo/poly.hpp"

#include <algorithm>
#include <stdexcept>

#include "sgo/combin.hpp"

namespace sgo {

namespace {

Rational monomial_value(const ExponentTuple& alpha, std::span<const Rational> x) {
  Rational v = 1;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i] == 0) continue;
    if (x[i] == 0) return 0;
    v *= pow_rat(x[i], alpha[i]);
  }
  return v;
}

void merge_term(TermMap& terms, const ExponentTuple& alpha, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(alpha, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

}  // namespace

Polynomial::Polynomial(std::size_t n) : n_(n) {
  if (n == 0) throw std::invalid_argument("polynomial needs at least one variable");
}

Polynomial::Polynomial(std::size_t n, TermMap terms) : Polynomial(n) {
  for (const auto& [alpha, c] : terms) add_term(alpha, c);
}

unsigned Polynomial::max_degree() const {
  unsigned d = 0;
  for (const auto& [alpha, c] : terms_) d = std::max(d, alpha.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const unsigned d = terms_.begin()->first.degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& t) { return t.first.degree() == d; });
}

void Polynomial::add_term(const ExponentTuple& alpha, const Rational& c) {
  if (alpha.size() != n_) throw std::invalid_argument("exponent length does not match n");
  merge_term(terms_, alpha, c);
}

Rational Polynomial::evaluate(std::span<const Rational> x) const {
  if (x.size() != n_) throw std::invalid_argument("point dimension does not match n");
  Rational v = 0;
  for (const auto& [alpha, c] : terms_) v += c * monomial_value(alpha, x);
  return v;
}

HomogeneousPolynomial::HomogeneousPolynomial(std::size_t n, unsigned d, TermMap terms)
    : n_(n), d_(d) {
  if (n == 0) throw std::invalid_argument("polynomial needs at least one variable");
  if (d == 0) throw std::invalid_argument("homogeneous degree must be >= 1");
  for (const auto& [alpha, c] : terms) add_term(alpha, c);
}

HomogeneousPolynomial HomogeneousPolynomial::from(const Polynomial& p, unsigned d) {
  return HomogeneousPolynomial(p.variables(), d, p.terms());
}

Rational HomogeneousPolynomial::coefficient(const ExponentTuple& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? Rational(0) : it->second;
}

void HomogeneousPolynomial::add_term(const ExponentTuple& alpha, const Rational& c) {
  if (alpha.size() != n_) throw std::invalid_argument("exponent length does not match n");
  if (alpha.degree() != d_)
    throw std::invalid_argument("term " + alpha.to_string() + " has degree " +
                                std::to_string(alpha.degree()) + ", expected " + std::to_string(d_));
  merge_term(terms_, alpha, c);
}

Rational HomogeneousPolynomial::evaluate(std::span<const Rational> x) const {
  if (x.size() != n_) throw std::invalid_argument("point dimension does not match n");
  Rational v = 0;
  for (const auto& [alpha, c] : terms_) v += c * monomial_value(alpha, x);
  return v;
}

Rational HomogeneousPolynomial::evaluate_grid(const ExponentTuple& alpha, unsigned r) const {
  Point x(alpha.size());
  for (std::size_t i = 0; i < alpha.size(); ++i) x[i] = Rational(alpha[i], r);
  for (auto& xi : x) xi.canonicalize();
  return evaluate(x);
}

HomogeneousPolynomial HomogeneousPolynomial::elevate(unsigned k) const {
  HomogeneousPolynomial cur = *this;
  for (unsigned step = 0; step < k; ++step) {
    HomogeneousPolynomial next(n_, cur.d_ + 1);
    for (const auto& [alpha, c] : cur.terms_) {
      for (std::size_t i = 0; i < n_; ++i) {
        ExponentTuple beta = alpha;
        ++beta[i];
        merge_term(next.terms_, beta, c);
      }
    }
    cur = std::move(next);
  }
  return cur;
}

HomogeneousPolynomial HomogeneousPolynomial::operator-() const {
  HomogeneousPolynomial g = *this;
  for (auto& [alpha, c] : g.terms_) c = -c;
  return g;
}

HomogeneousPolynomial& HomogeneousPolynomial::operator+=(const HomogeneousPolynomial& g) {
  if (g.n_ != n_ || g.d_ != d_) throw std::invalid_argument("adding polynomials of different shape");
  for (const auto& [alpha, c] : g.terms_) merge_term(terms_, alpha, c);
  return *this;
}

HomogeneousPolynomial& HomogeneousPolynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [alpha, v] : terms_) v *= c;
  return *this;
}

BernsteinTable bernstein_table(const HomogeneousPolynomial& f) {
  BernsteinTable table;
  const unsigned d = f.degree();
  bool first = true;
  for (const auto& beta : compositions(f.variables(), d)) {
    Rational b = 0;
    if (auto c = f.coefficient(beta); c != 0) {
      b = c / combin::multinomial(d, beta);
    }
    if (first || b < table.min_coeff) table.min_coeff = b;
    if (first || b > table.max_coeff) table.max_coeff = b;
    first = false;
    table.entries.emplace(beta, std::move(b));
  }
  return table;
}

BernsteinBounds bernstein_enclosure(const HomogeneousPolynomial& f, unsigned elevation) {
  BernsteinTable table = bernstein_table(f.elevate(elevation));
  return {elevation, std::move(table.min_coeff), std::move(table.max_coeff)};
}

bool is_square_free(const HomogeneousPolynomial& f) {
  return std::all_of(f.terms().begin(), f.terms().end(),
                     [](const auto& t) { return t.first.square_free(); });
}

HomogeneousPolynomial homogenize(const Polynomial& p, unsigned d) {
  const std::size_t n = p.variables();
  HomogeneousPolynomial out(n, d);
  for (const auto& [alpha, c] : p.terms()) {
    const unsigned e = alpha.degree();
    if (e > d)
      throw std::invalid_argument("monomial " + alpha.to_string() + " has degree " +
                                  std::to_string(e) + " > " + std::to_string(d));
    // (sum x_i)^{d-e} = sum_{gamma in I(n,d-e)} (d-e)!/gamma! x^gamma
    for (const auto& gamma : compositions(n, d - e))
      out.add_term(alpha + gamma, c * combin::multinomial(d - e, gamma));
  }
  return out;
}

}  // namespace sgo
