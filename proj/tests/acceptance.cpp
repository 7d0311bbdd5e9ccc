// One PASS/FAIL line per acceptance criterion. Exits nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "sgo/bounds.hpp"
#include "sgo/grid.hpp"
#include "sgo/hypergeom.hpp"
#include "sgo/identities.hpp"
#include "sgo/stableset.hpp"

using namespace sgo;

namespace {

// Wall-clock limits, in seconds.
constexpr double kLimitWorkedExample = 1.0;
constexpr double kLimitTightness = 1.0;
constexpr double kLimitMomentOracle = 60.0;
constexpr double kLimitIdentities = 300.0;
constexpr double kLimitStableSet = 1.0;
// Criterion 7: (f_Delta(4,r) - 1/4) r^2 / (3/4) <= 4, exact.
const Rational kQuadRateCap = 4;

struct Outcome {
  bool ok = true;
  std::string detail;
};

HomogeneousPolynomial sum_of_squares(std::size_t n) {
  HomogeneousPolynomial f(n, 2);
  for (std::size_t i = 0; i < n; ++i) f.add_term(ExponentTuple::unit(n, i, 2), 1);
  return f;
}

std::vector<std::vector<unsigned>> counts_of(std::size_t n, unsigned m, bool positive) {
  std::vector<std::vector<unsigned>> out;
  grid::enumerate_grid({n, m}, [&](const ExponentTuple& a) {
    bool ok = true;
    if (positive)
      for (unsigned v : a) ok = ok && v > 0;
    if (ok) out.push_back(a.values());
  });
  return out;
}

Outcome worked_example() {
  const HomogeneousPolynomial f(2, 2, {{ExponentTuple{2, 0}, 2}, {ExponentTuple{0, 2}, 1}, {ExponentTuple{1, 1}, -5}});
  const auto r16 = grid::grid_minimize(f, 16);
  const auto r2 = grid::grid_minimize(f, 2);
  const Rational e = hypergeom::expectation(f, hypergeom::Params({7, 9}, 2));
  Outcome o;
  o.ok = r16.value == Rational(-17, 32) && r16.minimizers == std::vector<ExponentTuple>{{7, 9}} &&
         r2.value == Rational(-1, 2) && r2.minimizers == std::vector<ExponentTuple>{{1, 1}} && e == Rational(31, 80);
  o.detail = "f_Delta(2,16)=" + to_string(r16.value) + " at " + r16.minimizers.front().to_string() + "/16, f_Delta(2,2)=" +
             to_string(r2.value) + ", E[f(X)]=" + to_string(e);
  return o;
}

Outcome tightness() {
  Outcome o;
  int cases = 0;
  for (std::size_t n = 3; n <= 5; ++n) {
    const auto f = sum_of_squares(n);
    const Rational fmin(1, n);
    for (unsigned r = 1; r <= n; ++r) {
      const Rational lhs = grid::grid_minimize(f, r).value - fmin;
      const Rational rhs = make_rational(Integer(n) - r, Integer(r) * (n - 1)) * (1 - fmin);
      ++cases;
      if (lhs != rhs) {
        o.ok = false;
        o.detail = "n=" + std::to_string(n) + " r=" + std::to_string(r) + ": " + to_string(lhs) + " != " + to_string(rhs);
        return o;
      }
    }
  }
  o.detail = std::to_string(cases) + " (n,r) pairs with exact equality";
  return o;
}

Outcome moment_oracle() {
  Outcome o;
  long cases = 0;
  for (std::size_t n = 1; n <= 3; ++n)
    for (unsigned m = 1; m <= 8; ++m)
      for (const auto& counts : counts_of(n, m, false))
        for (unsigned r = 1; r <= m; ++r) {
          const hypergeom::Params p(counts, r);
          for (unsigned k = 0; k <= 4; ++k)
            for (const auto& beta : compositions(n, k)) {
              ++cases;
              if (hypergeom::scaled_moment(p, beta) != hypergeom::scaled_moment_bruteforce(p, beta)) {
                o.ok = false;
                o.detail = "mismatch at beta=" + beta.to_string() + " r=" + std::to_string(r);
                return o;
              }
            }
        }
  o.detail = std::to_string(cases) + " (counts, r, beta) tuples equal";
  return o;
}

Outcome closed_forms() {
  Outcome o;
  long cases = 0;
  for (std::size_t n = 1; n <= 4; ++n)
    for (unsigned m = 2; m <= 12; ++m)
      for (const auto& counts : counts_of(n, m, true))
        for (unsigned r = 1; r <= m; ++r) {
          const hypergeom::Params p(counts, r);
          auto table = hypergeom::quadratic_moments_closed(p);
          if (m >= 3)
            for (auto& kv : hypergeom::cubic_moments_closed(p)) table.insert(kv);
          for (const auto& [beta, v] : table) {
            ++cases;
            if (v != hypergeom::scaled_moment(p, beta)) {
              o.ok = false;
              o.detail = "mismatch at beta=" + beta.to_string() + " m=" + std::to_string(m) + " r=" + std::to_string(r);
              return o;
            }
          }
        }
  o.detail = std::to_string(cases) + " closed-form moments equal";
  return o;
}

Outcome identity_sweeps() {
  Outcome o;
  const auto checks = identities::run_sweeps({});
  std::size_t failures = 0;
  std::string first;
  for (const auto& c : checks)
    if (!c.holds) {
      if (!failures) first = std::string(identities::name(c.name)) + " " + c.params;
      ++failures;
    }
  o.ok = failures == 0 && !checks.empty();
  o.detail = std::to_string(checks.size()) + " checks, " + std::to_string(failures) + " failures" +
             (failures ? " (first: " + first + ")" : "");
  return o;
}

Outcome bound_soundness() {
  Outcome o;
  const auto records = bounds::random_witness_sweep({});
  std::size_t violations = 0;
  for (const auto& rec : records) violations += rec.witness.holds ? 0 : 1;
  o.ok = violations == 0 && !records.empty();
  o.detail = std::to_string(records.size()) + " applicable witnesses over 100 polynomials, " + std::to_string(violations) +
             " violations";
  return o;
}

Outcome quadratic_rate() {
  Outcome o;
  const auto f = sum_of_squares(4);
  const unsigned m = 4;
  Rational worst = 0;
  for (unsigned r = 5; r <= 40; ++r) {
    const Rational scaled = (grid::grid_minimize(f, r).value - Rational(1, 4)) * r * r / Rational(3, 4);
    worst = std::max(worst, scaled);
    if (scaled > kQuadRateCap) {
      o.ok = false;
      o.detail = "r=" + std::to_string(r) + ": " + to_string(scaled);
      return o;
    }
  }
  for (unsigned r = 1; r <= 40; ++r) {
    if (r <= m && bounds::bound_coefficient(bounds::BoundKind::QuadRefined, 2, r, m).coefficient > Rational(1, r)) o.ok = false;
    if (r >= m && bounds::bound_coefficient(bounds::BoundKind::QuadDenom, 2, r, m).coefficient > Rational(1, r)) o.ok = false;
  }
  o.detail = "max rho*r^2 over 5<=r<=40 is " + to_string(worst) + " <= " + to_string(kQuadRateCap) +
             (o.ok ? "; refinement chain holds" : "; refinement chain violated");
  return o;
}

Outcome motzkin_straus() {
  Outcome o;
  const auto pet = stableset::alpha_lower_bound(stableset::Graph::petersen(), 4);
  const std::size_t alpha = stableset::brute_force_alpha(stableset::Graph::petersen());
  const auto empty = stableset::alpha_lower_bound(stableset::Graph(4), 4);
  const auto k5 = stableset::alpha_lower_bound(stableset::Graph::complete(5), 3);
  o.ok = pet.grid_value == Rational(1, 4) && pet.alpha_lb == 4 && alpha == 4 && empty.grid_value == Rational(1, 4) &&
         empty.alpha_lb == 4 && k5.grid_value == 1 && k5.alpha_lb == 1;
  o.detail = "Petersen r=4: grid " + to_string(pet.grid_value) + ", alpha_lb " + std::to_string(pet.alpha_lb) +
             ", brute force " + std::to_string(alpha) + "; empty(4): " + std::to_string(empty.alpha_lb) +
             "; K5: " + std::to_string(k5.alpha_lb);
  return o;
}

Outcome determinism() {
  Outcome o;
  const std::string poly = std::string(SGO_DATA_DIR) + "/sum_squares_4.json";
  std::ostringstream a, b, err;
  const int ca = cli::run({"grid-min", "--poly", poly, "--r", "2", "--threads", "1"}, a, err);
  const int cb = cli::run({"grid-min", "--poly", poly, "--r", "2", "--threads", "8"}, b, err);
  const auto res = grid::grid_minimize(sum_of_squares(4), 2);
  o.ok = ca == 0 && cb == 0 && a.str() == b.str() && res.tie_count >= 2;
  o.detail = std::to_string(res.tie_count) + " tied minimizers; outputs " + (a.str() == b.str() ? "identical" : "differ") +
             " (" + std::to_string(a.str().size()) + " bytes)";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    std::function<Outcome()> run;
    double limit;  // seconds; 0 means no runtime requirement
  };
  const Criterion criteria[] = {
      {1, "worked example", worked_example, kLimitWorkedExample},
      {2, "sum-of-squares tightness", tightness, kLimitTightness},
      {3, "moment oracle equivalence", moment_oracle, kLimitMomentOracle},
      {4, "closed-form moments", closed_forms, 0},
      {5, "identity sweeps", identity_sweeps, kLimitIdentities},
      {6, "bound soundness", bound_soundness, 0},
      {7, "quadratic O(1/r^2) rate", quadratic_rate, 0},
      {8, "Motzkin-Straus", motzkin_straus, kLimitStableSet},
      {9, "thread-count determinism", determinism, 0},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = c.limit == 0 || secs < c.limit;
    const bool pass = o.ok && in_time;
    failed += pass ? 0 : 1;
    char timing[96];
    if (c.limit > 0)
      std::snprintf(timing, sizeof timing, "%.3f s, limit %.0f s", secs, c.limit);
    else
      std::snprintf(timing, sizeof timing, "%.3f s", secs);
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.title << "): " << o.detail << " ["
              << timing << (in_time ? "" : ", TOO SLOW") << "]\n";
  }
  std::cout << (failed ? "FAILED " : "ALL PASSED ") << (9 - failed) << "/9\n";
  return failed ? 1 : 0;
}
