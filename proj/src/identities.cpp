#include "sgo/identities.hpp"

#include <omp.h>

#include <array>
#include <functional>
#include <numeric>
#include <random>
#include <stdexcept>

#include "sgo/bounds.hpp"
#include "sgo/combin.hpp"
#include "sgo/hypergeom.hpp"

namespace sgo::identities {

using combin::binomial;
using combin::falling;
using combin::multinomial;
using combin::stirling2;

namespace {

constexpr std::array<std::pair<Identity, std::string_view>, 11> kNames = {{
    {Identity::VandermondeChu, "VANDERMONDE_CHU"},
    {Identity::Multinomial, "MULTINOMIAL"},
    {Identity::StirlingSum, "STIRLING_SUM"},
    {Identity::StirlingMulti, "STIRLING_MULTI"},
    {Identity::Kmr, "KMR"},
    {Identity::Sigma, "SIGMA"},
    {Identity::Phi, "PHI"},
    {Identity::ABetaNonneg, "A_BETA_NONNEG"},
    {Identity::ABetaSum, "A_BETA_SUM"},
    {Identity::MomentDecomposition, "MOMENT_DECOMPOSITION"},
    {Identity::CubicThreshold, "CUBIC_THRESHOLD"},
}};

bool compare(const Rational& lhs, const Rational& rhs, Relation rel) {
  switch (rel) {
    case Relation::Equal:
      return lhs == rhs;
    case Relation::LessEqual:
      return lhs <= rhs;
    case Relation::GreaterEqual:
      return lhs >= rhs;
  }
  return false;
}

IdentityCheck make_check(Identity id, std::string params, Rational lhs, Rational rhs, Relation rel) {
  IdentityCheck c{id, std::move(params), std::move(lhs), std::move(rhs), rel, false};
  c.holds = compare(c.lhs, c.rhs, rel);
  return c;
}

std::string join(const std::vector<unsigned>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

std::string join(const std::vector<long>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

unsigned total(const std::vector<unsigned>& counts) {
  return std::accumulate(counts.begin(), counts.end(), 0u);
}

void check_abeta_args(const ExponentTuple& beta, unsigned r, const std::vector<unsigned>& counts) {
  const unsigned m = total(counts);
  if (beta.size() != counts.size()) throw std::invalid_argument("beta and counts differ in length");
  if (r < 1 || r > m) throw std::invalid_argument("A_beta needs 1 <= r <= m");
  if (m < beta.degree()) throw std::invalid_argument("A_beta needs m >= d");
}

std::vector<Integer> as_integers(const std::vector<unsigned>& counts) {
  return {counts.begin(), counts.end()};
}

std::string abeta_params(const ExponentTuple& beta, unsigned r, const std::vector<unsigned>& counts) {
  return "beta=" + beta.to_string(' ') + ";r=" + std::to_string(r) + ";m=" + std::to_string(total(counts)) +
         ";counts=" + join(counts);
}

}  // namespace

std::string_view name(Identity id) {
  for (const auto& [k, v] : kNames)
    if (k == id) return v;
  return "UNKNOWN";
}

std::optional<Identity> parse_identity(std::string_view text) {
  for (const auto& [k, v] : kNames)
    if (v == text) return k;
  return std::nullopt;
}

std::string relation_symbol(Relation rel) {
  switch (rel) {
    case Relation::Equal:
      return "==";
    case Relation::LessEqual:
      return "<=";
    case Relation::GreaterEqual:
      return ">=";
  }
  return "?";
}

Rational a_beta(const ExponentTuple& beta, unsigned r, const std::vector<unsigned>& counts) {
  check_abeta_args(beta, r, counts);
  const unsigned d = beta.degree();
  const Integer m = total(counts);
  const auto mi = as_integers(counts);

  Integer pure_power = 1;
  for (std::size_t i = 0; i < mi.size(); ++i) pure_power *= pow_int(mi[i], beta[i]);
  Rational value = falling(Integer(r), d) * (falling(mi, beta) - pure_power);

  const Integer m_fall_d = falling(m, d);
  for (const auto& alpha : dominated(beta)) {
    if (alpha == beta) continue;
    Integer prod = 1;
    for (std::size_t i = 0; i < mi.size() && prod != 0; ++i)
      prod *= falling(mi[i], alpha[i]) * stirling2(beta[i], alpha[i]);
    if (prod == 0) continue;
    const unsigned k = alpha.degree();
    value += make_rational(falling(Integer(r), k) * m_fall_d * prod, falling(m, k));
  }
  return value;
}

Rational a_beta(const ExponentTuple& beta, unsigned r, unsigned m, const std::vector<unsigned>& counts) {
  if (total(counts) != m) throw std::invalid_argument("counts do not sum to m");
  return a_beta(beta, r, counts);
}

IdentityCheck a_beta_nonneg(const ExponentTuple& beta, unsigned r, const std::vector<unsigned>& counts) {
  return make_check(Identity::ABetaNonneg, abeta_params(beta, r, counts), a_beta(beta, r, counts), 0,
                    Relation::GreaterEqual);
}

IdentityCheck a_beta_sum_identity(unsigned r, unsigned d, const std::vector<unsigned>& counts) {
  const std::size_t n = counts.size();
  if (n == 0) throw std::invalid_argument("counts must be nonempty");
  if (d < 1) throw std::invalid_argument("A_beta sum needs d >= 1");
  const Integer m = total(counts);
  Rational lhs = 0;
  for (const auto& beta : compositions(n, d)) lhs += multinomial(d, beta) * a_beta(beta, r, counts);
  const Rational rhs = pow_int(Integer(r), d) * falling(m, d) - falling(Integer(r), d) * pow_int(m, d);
  return make_check(Identity::ABetaSum,
                    "d=" + std::to_string(d) + ";r=" + std::to_string(r) + ";m=" + m.get_str() + ";counts=" + join(counts),
                    lhs, rhs, Relation::Equal);
}

IdentityCheck moment_decomposition(const ExponentTuple& beta, unsigned r, const std::vector<unsigned>& counts) {
  check_abeta_args(beta, r, counts);
  const unsigned d = beta.degree();
  const Integer m = total(counts);
  const hypergeom::Params p(counts, r);
  const Rational lhs = hypergeom::scaled_moment(p, beta);

  Rational x_beta = 1;
  for (std::size_t i = 0; i < counts.size(); ++i) x_beta *= pow_rat(make_rational(counts[i], m), beta[i]);
  const Integer denom = pow_int(Integer(r), d) * falling(m, d);
  const Rational rhs = x_beta * make_rational(falling(Integer(r), d) * pow_int(m, d), denom) +
                       a_beta(beta, r, counts) / denom;
  return make_check(Identity::MomentDecomposition, abeta_params(beta, r, counts), lhs, rhs, Relation::Equal);
}

IdentityCheck vandermonde_chu(const std::vector<long>& x, unsigned d) {
  Integer s = 0;
  std::vector<Integer> xi;
  for (long v : x) {
    s += v;
    xi.emplace_back(v);
  }
  Integer rhs = 0;
  for (const auto& alpha : compositions(x.size(), d)) rhs += multinomial(d, alpha) * falling(xi, alpha);
  return make_check(Identity::VandermondeChu, "d=" + std::to_string(d) + ";x=" + join(x), Rational(falling(s, d)),
                    Rational(rhs), Relation::Equal);
}

IdentityCheck multinomial_theorem(const std::vector<long>& x, unsigned d) {
  Integer s = 0;
  for (long v : x) s += v;
  Integer rhs = 0;
  for (const auto& alpha : compositions(x.size(), d)) {
    Integer term = multinomial(d, alpha);
    for (std::size_t i = 0; i < x.size(); ++i) term *= pow_int(Integer(x[i]), alpha[i]);
    rhs += term;
  }
  return make_check(Identity::Multinomial, "d=" + std::to_string(d) + ";x=" + join(x), Rational(pow_int(s, d)),
                    Rational(rhs), Relation::Equal);
}

IdentityCheck stirling_sum(unsigned d, unsigned r) {
  if (d < 1 || r < 1) throw std::invalid_argument("STIRLING_SUM needs d >= 1 and r >= 1");
  Integer lhs = 0;
  for (unsigned k = 1; k < d; ++k) lhs += falling(Integer(r), k) * stirling2(d, k);
  const Integer rhs = pow_int(Integer(r), d) - falling(Integer(r), d);
  return make_check(Identity::StirlingSum, "d=" + std::to_string(d) + ";r=" + std::to_string(r), Rational(lhs),
                    Rational(rhs), Relation::Equal);
}

IdentityCheck stirling_multi(const ExponentTuple& alpha, unsigned d) {
  const unsigned k = alpha.degree();
  if (alpha.size() == 0) throw std::invalid_argument("STIRLING_MULTI needs n >= 1");
  if (d <= k) throw std::invalid_argument("STIRLING_MULTI needs d > |alpha|");
  Integer sum = 0;
  for (const auto& beta : compositions(alpha.size(), d)) {
    Integer prod = multinomial(d, beta);
    for (std::size_t i = 0; i < alpha.size() && prod != 0; ++i) prod *= stirling2(beta[i], alpha[i]);
    sum += prod;
  }
  const Rational rhs = make_rational(combin::factorial(alpha) * sum, combin::factorial(k));
  return make_check(Identity::StirlingMulti, "alpha=" + alpha.to_string(' ') + ";d=" + std::to_string(d),
                    Rational(stirling2(d, k)), rhs, Relation::Equal);
}

IdentityCheck kmr(unsigned k, unsigned m, unsigned r) {
  if (k < 1 || m < 1 || r < 1) throw std::invalid_argument("KMR needs k, m, r >= 1");
  if (!((k - 1) * m < r && r <= k * m)) throw std::invalid_argument("KMR needs (k-1)m < r <= km");
  const Integer km = Integer(k) * m;
  // km = 1 forces r = 1 and km - r = 0.
  const Rational lhs = km == 1 ? Rational(0) : make_rational(km - r, km - 1);
  return make_check(Identity::Kmr, "k=" + std::to_string(k) + ";m=" + std::to_string(m) + ";r=" + std::to_string(r),
                    lhs, make_rational(m, r), Relation::LessEqual);
}

IdentityCheck sigma(unsigned d, unsigned m, unsigned k, unsigned r) {
  if (d < 2) throw std::invalid_argument("SIGMA needs d >= 2");
  if (m < d || k < 1) throw std::invalid_argument("SIGMA needs m >= d and k >= 1");
  if (!((k - 1) * m < r && r <= k * m)) throw std::invalid_argument("SIGMA needs (k-1)m < r <= km");
  const Integer km = Integer(k) * m;
  const Rational lhs = 1 - make_rational(falling(Integer(r), d) * pow_int(km, d), pow_int(Integer(r), d) * falling(km, d));
  const Rational rhs = make_rational(Integer(m) * combin::falling_poly_coeffs(d).c_d, Integer(r) * r);
  return make_check(Identity::Sigma,
                    "d=" + std::to_string(d) + ";m=" + std::to_string(m) + ";k=" + std::to_string(k) +
                        ";r=" + std::to_string(r),
                    lhs, rhs, Relation::LessEqual);
}

IdentityCheck phi(unsigned k, unsigned m, unsigned r) {
  if (k < 2 || m < 3) throw std::invalid_argument("PHI needs k >= 2 and m >= 3");
  if (!((k - 1) * m < r && r <= k * m)) throw std::invalid_argument("PHI needs (k-1)m < r <= km");
  const Integer km = Integer(k) * m;
  const Integer rr = r;
  const Integer value = (2 * km - 1) * rr * rr + (4 - 6 * km) * rr - km * km + 6 * km - 4;
  return make_check(Identity::Phi, "k=" + std::to_string(k) + ";m=" + std::to_string(m) + ";r=" + std::to_string(r),
                    Rational(value), 0, Relation::GreaterEqual);
}

IdentityCheck cubic_threshold(unsigned r, unsigned m) {
  if (m < 3 || r < 2 || r > m) throw std::invalid_argument("CUBIC_THRESHOLD needs 2 <= r <= m, m >= 3");
  if (!bounds::cubic_threshold_met(r, m))
    throw std::invalid_argument("CUBIC_THRESHOLD needs r >= 1 + (m-1)/(sqrt(2m)-1)");
  const auto refined = bounds::bound_coefficient(bounds::BoundKind::CubicRefined, 3, r, m);
  const auto kls = bounds::bound_coefficient(bounds::BoundKind::CubicKls, 3, r, m);
  return make_check(Identity::CubicThreshold, "r=" + std::to_string(r) + ";m=" + std::to_string(m),
                    refined.coefficient, kls.coefficient, Relation::LessEqual);
}

IdentityCheck verify_identity(Identity id, const IdentityParams& p) {
  switch (id) {
    case Identity::VandermondeChu:
      return vandermonde_chu(p.x, p.d);
    case Identity::Multinomial:
      return multinomial_theorem(p.x, p.d);
    case Identity::StirlingSum:
      return stirling_sum(p.d, p.r);
    case Identity::StirlingMulti:
      return stirling_multi(p.alpha, p.d);
    case Identity::Kmr:
      return kmr(p.k, p.m, p.r);
    case Identity::Sigma:
      return sigma(p.d, p.m, p.k, p.r);
    case Identity::Phi:
      return phi(p.k, p.m, p.r);
    case Identity::ABetaNonneg:
      return a_beta_nonneg(p.alpha, p.r, p.counts);
    case Identity::ABetaSum:
      return a_beta_sum_identity(p.r, p.d, p.counts);
    case Identity::MomentDecomposition:
      return moment_decomposition(p.alpha, p.r, p.counts);
    case Identity::CubicThreshold:
      return cubic_threshold(p.r, p.m);
  }
  throw std::invalid_argument("unknown identity");
}

std::vector<IdentityCheck> run_sweeps(const SweepConfig& cfg) {
  std::vector<std::function<IdentityCheck()>> jobs;

  for (unsigned d = 1; d <= cfg.stirling_max_d; ++d)
    for (unsigned r = 1; r <= cfg.stirling_max_r; ++r) jobs.emplace_back([d, r] { return stirling_sum(d, r); });

  for (unsigned n = 1; n <= cfg.multi_max_n; ++n)
    for (unsigned d = 2; d <= cfg.multi_max_d; ++d)
      for (unsigned k = 1; k < d; ++k)
        for (const auto& alpha : compositions(n, k)) jobs.emplace_back([alpha, d] { return stirling_multi(alpha, d); });

  if (cfg.random_max_n >= 1 && cfg.random_max_d >= 1) {
    std::mt19937_64 rng(cfg.seed);
    const auto span = static_cast<std::uint64_t>(2 * cfg.random_coord_bound + 1);
    for (unsigned i = 0; i < cfg.random_points; ++i) {
      const auto n = static_cast<std::size_t>(1 + rng() % cfg.random_max_n);
      const auto d = static_cast<unsigned>(1 + rng() % cfg.random_max_d);
      std::vector<long> x(n);
      for (auto& v : x) v = static_cast<long>(rng() % span) - cfg.random_coord_bound;
      jobs.emplace_back([x, d] { return vandermonde_chu(x, d); });
      jobs.emplace_back([x, d] { return multinomial_theorem(x, d); });
    }
  }

  for (unsigned n = 1; n <= cfg.abeta_max_n; ++n)
    for (unsigned d = 1; d <= cfg.abeta_max_d; ++d)
      for (unsigned m = d; m <= cfg.abeta_max_m; ++m)
        for (const auto& c : compositions(n, m)) {
          const std::vector<unsigned> counts = c.values();
          for (unsigned r = 1; r <= m; ++r) {
            jobs.emplace_back([counts, r, d] { return a_beta_sum_identity(r, d, counts); });
            for (const auto& beta : compositions(n, d)) {
              jobs.emplace_back([beta, r, counts] { return a_beta_nonneg(beta, r, counts); });
              jobs.emplace_back([beta, r, counts] { return moment_decomposition(beta, r, counts); });
            }
          }
        }

  for (unsigned k = 1; k <= cfg.kmr_max; ++k)
    for (unsigned m = 1; m <= cfg.kmr_max; ++m)
      for (unsigned r = (k - 1) * m + 1; r <= k * m && r <= cfg.kmr_max; ++r)
        jobs.emplace_back([k, m, r] { return kmr(k, m, r); });

  for (unsigned d = 2; d <= cfg.sigma_max_d; ++d)
    for (unsigned m = d; m <= cfg.sigma_max_m; ++m)
      for (unsigned k = 1; k <= cfg.sigma_max_k; ++k)
        for (unsigned r = (k - 1) * m + 1; r <= k * m; ++r) jobs.emplace_back([d, m, k, r] { return sigma(d, m, k, r); });

  for (unsigned k = 2; k <= cfg.phi_max_k; ++k)
    for (unsigned m = 3; m <= cfg.phi_max_m; ++m)
      for (unsigned r = (k - 1) * m + 1; r <= k * m; ++r) jobs.emplace_back([k, m, r] { return phi(k, m, r); });

  for (unsigned m = 3; m <= cfg.threshold_max_m; ++m)
    for (unsigned r = 2; r <= m; ++r)
      if (bounds::cubic_threshold_met(r, m)) jobs.emplace_back([r, m] { return cubic_threshold(r, m); });

  std::vector<IdentityCheck> results(jobs.size());
  const int threads = cfg.threads > 0 ? cfg.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(jobs.size()); ++i)
    results[static_cast<std::size_t>(i)] = jobs[static_cast<std::size_t>(i)]();
  return results;
}

}  // namespace sgo::identities
