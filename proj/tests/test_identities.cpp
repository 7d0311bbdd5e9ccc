#include <doctest.h>

#include "oracle.hpp"
#include "sgo/combin.hpp"
#include "sgo/identities.hpp"

using namespace sgo;
using namespace sgo::identities;

namespace {

// A_beta recovered from the enumerated urn law:
// A_beta = r^d m^{d}_ E[X^beta] - r^{d}_ prod m_i^{beta_i}.
Rational a_beta_from_urn(const ExponentTuple& beta, unsigned r, const std::vector<unsigned>& counts) {
  unsigned m = 0;
  for (unsigned c : counts) m += c;
  const unsigned d = beta.degree();
  Rational pure = 1;
  for (std::size_t i = 0; i < counts.size(); ++i) pure *= oracle::power(Rational(counts[i]), beta[i]);
  return oracle::power(Rational(r), d) * oracle::falling(Rational(m), d) * oracle::urn_moment(counts, r, beta) -
         oracle::falling(Rational(r), d) * pure;
}

}  // namespace

TEST_CASE("identity names round-trip") {
  for (auto id : {Identity::VandermondeChu, Identity::Multinomial, Identity::StirlingSum, Identity::StirlingMulti,
                  Identity::Kmr, Identity::Sigma, Identity::Phi, Identity::ABetaNonneg, Identity::ABetaSum,
                  Identity::MomentDecomposition, Identity::CubicThreshold})
    CHECK(parse_identity(name(id)) == id);
  CHECK_FALSE(parse_identity("bogus").has_value());
  CHECK(relation_symbol(Relation::LessEqual) == "<=");
}

TEST_CASE("worked identity examples") {
  const auto vc = vandermonde_chu({2, 3}, 2);
  CHECK(vc.lhs == 20);
  CHECK(vc.rhs == 20);
  CHECK(vc.holds);

  const auto ss = stirling_sum(3, 4);
  CHECK(ss.lhs == 40);
  CHECK(ss.rhs == 40);
  CHECK(ss.holds);

  const auto k = kmr(2, 3, 4);
  CHECK(k.lhs == Rational(2, 5));
  CHECK(k.rhs == Rational(3, 4));
  CHECK(k.relation == Relation::LessEqual);
  CHECK(k.holds);
  CHECK(k.params == "k=2;m=3;r=4");

  CHECK(kmr(1, 1, 1).lhs == 0);
  CHECK(multinomial_theorem({-3, 5, 2}, 4).holds);
  CHECK(multinomial_theorem({-3, 5, 2}, 4).lhs == 256);
}

TEST_CASE("verify_identity dispatches with the same results") {
  IdentityParams p;
  p.d = 3;
  p.r = 4;
  CHECK(verify_identity(Identity::StirlingSum, p).lhs == 40);
  p = {};
  p.k = 2;
  p.m = 3;
  p.r = 4;
  CHECK(verify_identity(Identity::Kmr, p).holds);
  p = {};
  p.x = {2, 3};
  p.d = 2;
  CHECK(verify_identity(Identity::VandermondeChu, p).lhs == 20);
  p = {};
  p.r = 2;
  p.d = 2;
  p.counts = {1, 2};
  CHECK(verify_identity(Identity::ABetaSum, p).rhs == 6);
}

TEST_CASE("parameter constraint violations throw") {
  CHECK_THROWS_AS(kmr(2, 3, 7), std::invalid_argument);
  CHECK_THROWS_AS(kmr(0, 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(sigma(1, 3, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(sigma(3, 2, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(phi(1, 3, 2), std::invalid_argument);
  CHECK_THROWS_AS(phi(2, 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(stirling_multi(ExponentTuple{1, 1}, 2), std::invalid_argument);
  CHECK_THROWS_AS(stirling_sum(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(a_beta(ExponentTuple{2, 0}, 4, {1, 2}), std::invalid_argument);   // r > m
  CHECK_THROWS_AS(a_beta(ExponentTuple{3, 1}, 1, {1, 2}), std::invalid_argument);   // m < d
  CHECK_THROWS_AS(a_beta(ExponentTuple{1, 1}, 1, {1, 2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(a_beta(ExponentTuple{1, 1}, 1, 4, {1, 2}), std::invalid_argument);  // m mismatch
  CHECK_THROWS_AS(cubic_threshold(3, 8), std::invalid_argument);
}

TEST_CASE("A_beta worked example and closed collapses") {
  const auto s = a_beta_sum_identity(2, 2, {1, 2});
  CHECK(s.lhs == 6);
  CHECK(s.rhs == 6);
  CHECK(s.holds);
  CHECK(a_beta(ExponentTuple{2, 0}, 2, {1, 2}) >= 0);
  CHECK(a_beta(ExponentTuple{2, 0}, 2, 3, {1, 2}) == a_beta(ExponentTuple{2, 0}, 2, {1, 2}));

  // beta = d e_1, counts = m e_1.
  for (unsigned d = 1; d <= 4; ++d)
    for (unsigned m = d; m <= 8; ++m)
      for (unsigned r = 1; r <= m; ++r) {
        Rational expected = oracle::falling(Rational(r), d) * (oracle::falling(Rational(m), d) - oracle::power(Rational(m), d));
        for (unsigned k = 1; k < d; ++k)
          expected += oracle::falling(Rational(r), k) * oracle::falling(Rational(m), d) * oracle::stirling2(d, k);
        CHECK(a_beta(ExponentTuple{d, 0}, r, {m, 0}) == expected);
        CHECK(expected >= 0);
      }

  // r = m: every A_beta sums to zero; d = 1: rhs = rm - rm.
  for (unsigned m = 2; m <= 6; ++m) {
    CHECK(a_beta_sum_identity(m, 2, {1, m - 1}).rhs == 0);
    CHECK(a_beta_sum_identity(m, 2, {1, m - 1}).holds);
    CHECK(a_beta_sum_identity(1, 1, {1, m - 1}).rhs == 0);
  }
}

TEST_CASE("A_beta equals the value recovered from the urn law") {
  for (std::size_t n = 1; n <= 3; ++n)
    for (unsigned d = 1; d <= 3; ++d)
      for (unsigned m = d; m <= 6; ++m)
        oracle::compositions(n, m, [&](const std::vector<unsigned>& counts) {
          for (unsigned r = 1; r <= m; ++r)
            for (const auto& beta : compositions(n, d)) CHECK(a_beta(beta, r, counts) == a_beta_from_urn(beta, r, counts));
        });
}

TEST_CASE("moment decomposition reproduces the scaled moment") {
  const auto c = moment_decomposition(ExponentTuple{2, 1}, 3, {2, 4});
  CHECK(c.holds);
  CHECK(c.lhs == oracle::urn_moment({2, 4}, 3, ExponentTuple{2, 1}));
}

TEST_CASE("sigma uses c_d and holds on a small region; phi is nonnegative") {
  for (unsigned d = 2; d <= 4; ++d)
    for (unsigned m = d; m <= 6; ++m)
      for (unsigned k = 1; k <= 3; ++k)
        for (unsigned r = (k - 1) * m + 1; r <= k * m; ++r) {
          const auto s = sigma(d, m, k, r);
          CHECK(s.holds);
          CHECK(s.rhs == make_rational(Integer(m) * combin::falling_poly_coeffs(d).c_d, Integer(r) * r));
        }
  CHECK(phi(2, 3, 4).lhs == 11 * 16 + (4 - 36) * 4 - 36 + 36 - 4);
  CHECK(phi(2, 3, 4).holds);
}

TEST_CASE("run_sweeps: every default check holds and the order ignores the thread count") {
  SweepConfig small;
  small.stirling_max_d = 4;
  small.stirling_max_r = 6;
  small.multi_max_n = 2;
  small.multi_max_d = 4;
  small.random_points = 20;
  small.abeta_max_n = 2;
  small.abeta_max_d = 3;
  small.abeta_max_m = 5;
  small.kmr_max = 10;
  small.sigma_max_d = 3;
  small.sigma_max_m = 5;
  small.sigma_max_k = 2;
  small.phi_max_k = 3;
  small.phi_max_m = 5;
  small.threshold_max_m = 10;
  small.threads = 1;
  const auto a = run_sweeps(small);
  small.threads = 6;
  const auto b = run_sweeps(small);
  REQUIRE(a.size() == b.size());
  CHECK(a.size() > 300);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].name == b[i].name);
    CHECK(a[i].params == b[i].params);
    CHECK(a[i].lhs == b[i].lhs);
    CHECK_MESSAGE(a[i].holds, name(a[i].name) << " " << a[i].params);
  }
}

TEST_CASE("run_sweeps: empty configuration produces no checks") {
  SweepConfig none;
  none.stirling_max_d = none.multi_max_n = none.random_points = none.abeta_max_n = 0;
  none.kmr_max = none.sigma_max_d = none.phi_max_k = none.threshold_max_m = 0;
  CHECK(run_sweeps(none).empty());
}
