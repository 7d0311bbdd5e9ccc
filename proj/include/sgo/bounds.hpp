#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sgo/grid.hpp"
#include "sgo/poly.hpp"

namespace sgo::bounds {

/// Error bounds on f_Delta(n,r) - f_Delta(n,m) (or - f_min), each reported as
/// the coefficient of the range f_max - f_min.
enum class BoundKind {
  KlsQuad,         // 1/r, quadratic
  KlsGeneral,      // (1 - r^{d}_/r^d) C(2d-1,d) d^d
  QuadRefined,     // (m-r)/(r(m-1)), r <= m
  QuadDenom,       // m/r^2, minimizer with denominator m
  CubicKls,        // 4/r - 4/r^2, r >= 2
  SqfreeKls,       // 1 - r^{d}_/r^d, square-free f
  CubicRefined,    // (m-r)(4mr-2m-2r)/(r^2(m-1)(m-2)), r <= m, m >= 3
  SqfreeRefined,   // 1 - (r^{d}_/r^d)(m^d/m^{d}_), r <= m, m >= d
  GeneralRefined,  // (1 - r^{d}_ m^d/(r^d m^{d}_)) C(2d-1,d) d^d, r <= m, m >= d
  CubicRho,        // m^2/(r^2(m-2)) for r <= m, 6m/r^2 for r > m
  GeneralRho,      // (m/r^2) c_d C(2d-1,d) d^d
};

inline constexpr std::array<BoundKind, 11> kAllKinds = {
    BoundKind::KlsQuad,      BoundKind::KlsGeneral,    BoundKind::QuadRefined,
    BoundKind::QuadDenom,    BoundKind::CubicKls,      BoundKind::SqfreeKls,
    BoundKind::CubicRefined, BoundKind::SqfreeRefined, BoundKind::GeneralRefined,
    BoundKind::CubicRho,     BoundKind::GeneralRho};

std::string_view name(BoundKind kind);
std::optional<BoundKind> parse_kind(std::string_view text);
/// True for kinds that only hold for square-free polynomials.
bool requires_square_free(BoundKind kind);

struct BoundReport {
  BoundKind kind{};
  unsigned d = 0;
  unsigned r = 0;
  std::optional<unsigned> m;
  /// The multiple with (k-1)m < r <= km, whenever m is known.
  std::optional<unsigned> k;
  Rational coefficient;  // zero when not applicable
  bool applicable = false;
  std::string reason;
};

/// Coefficient of (f_max - f_min) for the given kind. Inapplicability is
/// reported in the result, never thrown.
BoundReport bound_coefficient(BoundKind kind, unsigned d, unsigned r, std::optional<unsigned> m = {});

/// ceil(r / m), i.e. the k with (k-1)m < r <= km.
unsigned multiple_of(unsigned r, unsigned m);

/// r >= 1 + (m-1)/(sqrt(2m)-1), decided exactly as 2m(r-1)^2 >= (r+m-2)^2 with r >= 1.
bool cubic_threshold_met(unsigned r, unsigned m);

/// Writes "kind,d,r,m,k,coefficient,applicable,reason" rows.
void write_csv(std::ostream& out, const std::vector<BoundReport>& rows, bool header = true);

/// How f_min and f_max are enclosed. By default both come from Bernstein
/// coefficients after `elevation` degree elevations and grid values. Known
/// extrema, or the hypothesis that a global minimizer has denominator
/// `min_denominator` (so f_min = f_Delta(n, min_denominator)), replace the
/// corresponding enclosure by a point.
struct EnclosureParams {
  unsigned elevation = 4;
  std::optional<Rational> known_min;
  std::optional<Rational> known_max;
  std::optional<unsigned> min_denominator;
  grid::GridOptions grid;
};

class DegenerateRange : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RhoInterval {
  unsigned r = 0;
  Rational grid_value;
  grid::Enclosure fmin;
  grid::Enclosure fmax;
  Rational lo;
  Rational hi;
};

/// Certified witness of one bound on one polynomial.
struct BoundWitness {
  BoundKind kind{};
  unsigned r = 0;
  unsigned m = 0;
  bool applicable = false;
  std::string reason;
  Rational lhs;          // f_Delta(n,r) - f_Delta(n,m)
  Rational coefficient;
  Rational range_upper;  // certified upper bound on f_max - f_min
  Rational rhs;          // coefficient * range_upper
  bool holds = true;
};

/// Caches grid optima and enclosures of one polynomial. Not thread-safe.
class BoundContext {
 public:
  explicit BoundContext(HomogeneousPolynomial f, EnclosureParams params = {});

  const HomogeneousPolynomial& polynomial() const { return f_; }
  const EnclosureParams& params() const { return params_; }

  const Rational& grid_min(unsigned r);
  const Rational& grid_max(unsigned r);
  const BernsteinBounds& bernstein();

  /// Enclosures of f_min and f_max consistent with grid r. Throws
  /// std::invalid_argument when a supplied extremum or denominator hypothesis
  /// contradicts a grid value.
  grid::RangeEnclosures enclosures(unsigned r);

  /// rho_r(f) = (f_Delta(n,r) - f_min) / (f_max - f_min), enclosed. Throws
  /// DegenerateRange when f_max > f_min cannot be certified.
  RhoInterval rho(unsigned r);

  BoundWitness check(BoundKind kind, unsigned r, unsigned m);

 private:
  HomogeneousPolynomial f_;
  EnclosureParams params_;
  bool square_free_;
  std::map<unsigned, Rational> min_cache_;
  std::map<unsigned, Rational> max_cache_;
  std::optional<BernsteinBounds> bernstein_;
};

RhoInterval rho_interval(const HomogeneousPolynomial& f, unsigned r, const EnclosureParams& params = {});
BoundWitness check_bound(const HomogeneousPolynomial& f, BoundKind kind, unsigned r, unsigned m,
                         const EnclosureParams& params = {});

/// Random integer-coefficient polynomials (n <= max_n, d <= max_d, coefficients
/// in [-coef_bound, coef_bound]) checked against every kind for 1 <= r <= m <= max_m.
struct WitnessSweep {
  unsigned polynomials = 100;
  unsigned max_n = 4;
  unsigned max_d = 3;
  unsigned max_m = 8;
  int coef_bound = 9;
  std::uint64_t seed = 20140101;
  unsigned elevation = 4;
  int threads = 0;
};

struct WitnessRecord {
  unsigned poly_index = 0;
  HomogeneousPolynomial f;
  BoundWitness witness;
};

/// Only applicable witnesses are returned, in deterministic order.
std::vector<WitnessRecord> random_witness_sweep(const WitnessSweep& cfg);

/// The polynomial generator used by random_witness_sweep, exposed for tests.
HomogeneousPolynomial random_polynomial(std::uint64_t seed, unsigned max_n, unsigned max_d, int coef_bound);

}  // namespace sgo::bounds
