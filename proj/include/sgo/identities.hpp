#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sgo/exponent.hpp"
#include "sgo/rational.hpp"

namespace sgo::identities {

enum class Identity {
  VandermondeChu,       // (sum x)^{d}_ = sum_alpha d!/alpha! x^{alpha}_
  Multinomial,          // (sum x)^d = sum_alpha d!/alpha! x^alpha
  StirlingSum,          // sum_{k<d} r^{k}_ S(d,k) = r^d - r^{d}_
  StirlingMulti,        // S(d,k) = alpha!/k! sum_beta d!/beta! prod S(beta_i, alpha_i)
  Kmr,                  // (km - r)/(km - 1) <= m/r
  Sigma,                // 1 - r^{d}_ (km)^d / (r^d (km)^{d}_) <= (m/r^2) c_d
  Phi,                  // phi(r) >= 0 for (k-1)m < r <= km, k >= 2, m >= 3
  ABetaNonneg,          // A_beta >= 0
  ABetaSum,             // sum_beta d!/beta! A_beta = r^d m^{d}_ - r^{d}_ m^d
  MomentDecomposition,  // E[X^beta] = x*^beta r^{d}_ m^d/(r^d m^{d}_) + A_beta/(r^d m^{d}_)
  CubicThreshold,       // cubic refined coefficient <= 4/r - 4/r^2 past the threshold
};

std::string_view name(Identity id);
std::optional<Identity> parse_identity(std::string_view text);

enum class Relation { Equal, LessEqual, GreaterEqual };

struct IdentityCheck {
  Identity name{};
  std::string params;  // echoed as "key=value;..."
  Rational lhs;
  Rational rhs;
  Relation relation = Relation::Equal;
  bool holds = false;
};

/// A_beta with m = sum(counts). Requires |beta| = d, 1 <= r <= m, m >= d;
/// throws std::invalid_argument otherwise.
Rational a_beta(const ExponentTuple& beta, unsigned r, const std::vector<unsigned>& counts);
/// Same, validating that m equals sum(counts).
Rational a_beta(const ExponentTuple& beta, unsigned r, unsigned m, const std::vector<unsigned>& counts);

IdentityCheck a_beta_nonneg(const ExponentTuple& beta, unsigned r, const std::vector<unsigned>& counts);
IdentityCheck a_beta_sum_identity(unsigned r, unsigned d, const std::vector<unsigned>& counts);
IdentityCheck moment_decomposition(const ExponentTuple& beta, unsigned r, const std::vector<unsigned>& counts);

IdentityCheck vandermonde_chu(const std::vector<long>& x, unsigned d);
IdentityCheck multinomial_theorem(const std::vector<long>& x, unsigned d);
IdentityCheck stirling_sum(unsigned d, unsigned r);
IdentityCheck stirling_multi(const ExponentTuple& alpha, unsigned d);
IdentityCheck kmr(unsigned k, unsigned m, unsigned r);
IdentityCheck sigma(unsigned d, unsigned m, unsigned k, unsigned r);
IdentityCheck phi(unsigned k, unsigned m, unsigned r);
IdentityCheck cubic_threshold(unsigned r, unsigned m);

/// Parameters for verify_identity; each identity reads the fields it needs.
struct IdentityParams {
  unsigned d = 0;
  unsigned r = 0;
  unsigned m = 0;
  unsigned k = 0;
  std::vector<long> x;
  ExponentTuple alpha;  // alpha (StirlingMulti) or beta (A_beta, moments)
  std::vector<unsigned> counts;
};

IdentityCheck verify_identity(Identity id, const IdentityParams& p);

/// Bounded exhaustive (or seeded random) parameter sweeps.
struct SweepConfig {
  unsigned stirling_max_d = 6;
  unsigned stirling_max_r = 30;
  unsigned multi_max_n = 3;
  unsigned multi_max_d = 5;
  unsigned random_points = 200;  // Vandermonde-Chu and multinomial checks each
  unsigned random_max_n = 4;
  unsigned random_max_d = 6;
  long random_coord_bound = 10;
  std::uint64_t seed = 20140101;
  unsigned abeta_max_n = 3;
  unsigned abeta_max_d = 4;
  unsigned abeta_max_m = 8;
  unsigned kmr_max = 40;
  unsigned sigma_max_d = 5;
  unsigned sigma_max_m = 12;
  unsigned sigma_max_k = 4;
  unsigned phi_max_k = 5;
  unsigned phi_max_m = 10;
  unsigned threshold_max_m = 40;
  int threads = 0;
};

/// Every check of the configured sweeps, in a fixed order independent of
/// the thread count.
std::vector<IdentityCheck> run_sweeps(const SweepConfig& cfg);

std::string relation_symbol(Relation rel);

}  // namespace sgo::identities
