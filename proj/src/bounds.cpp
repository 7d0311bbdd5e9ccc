#include "sgo/bounds.hpp"

#include <omp.h>

#include <random>

#include "sgo/combin.hpp"

namespace sgo::bounds {

using combin::binomial;
using combin::falling;

namespace {

struct KindInfo {
  BoundKind kind;
  std::string_view name;
};

constexpr std::array<KindInfo, 11> kNames = {{
    {BoundKind::KlsQuad, "KLS_QUAD"},
    {BoundKind::KlsGeneral, "KLS_GENERAL"},
    {BoundKind::QuadRefined, "QUAD_REFINED"},
    {BoundKind::QuadDenom, "QUAD_DENOM"},
    {BoundKind::CubicKls, "CUBIC_KLS"},
    {BoundKind::SqfreeKls, "SQFREE_KLS"},
    {BoundKind::CubicRefined, "CUBIC_REFINED"},
    {BoundKind::SqfreeRefined, "SQFREE_REFINED"},
    {BoundKind::GeneralRefined, "GENERAL_REFINED"},
    {BoundKind::CubicRho, "CUBIC_RHO"},
    {BoundKind::GeneralRho, "GENERAL_RHO"},
}};

// C(2d-1, d) d^d
Integer bernstein_range_constant(unsigned d) {
  return binomial(2 * static_cast<long>(d) - 1, d) * pow_int(Integer(d), d);
}

// r^{d}_ m^d / (r^d m^{d}_)
Rational falling_ratio(unsigned d, unsigned r, unsigned m) {
  return make_rational(falling(Integer(r), d) * pow_int(Integer(m), d),
                       pow_int(Integer(r), d) * falling(Integer(m), d));
}

BoundReport inapplicable(BoundReport rep, std::string why) {
  rep.applicable = false;
  rep.coefficient = 0;
  rep.reason = std::move(why);
  return rep;
}

}  // namespace

std::string_view name(BoundKind kind) {
  for (const auto& k : kNames)
    if (k.kind == kind) return k.name;
  return "UNKNOWN";
}

std::optional<BoundKind> parse_kind(std::string_view text) {
  for (const auto& k : kNames)
    if (k.name == text) return k.kind;
  return std::nullopt;
}

bool requires_square_free(BoundKind kind) {
  return kind == BoundKind::SqfreeKls || kind == BoundKind::SqfreeRefined;
}

unsigned multiple_of(unsigned r, unsigned m) {
  if (m == 0) throw std::invalid_argument("multiple_of needs m >= 1");
  return (r + m - 1) / m;
}

bool cubic_threshold_met(unsigned r, unsigned m) {
  if (r < 1 || m < 1) return false;
  const Integer lhs_root = Integer(r) - 1;
  const Integer rhs_root = Integer(r) + m - 2;
  if (rhs_root <= 0) return true;
  return 2 * Integer(m) * lhs_root * lhs_root >= rhs_root * rhs_root;
}

BoundReport bound_coefficient(BoundKind kind, unsigned d, unsigned r, std::optional<unsigned> m) {
  BoundReport rep;
  rep.kind = kind;
  rep.d = d;
  rep.r = r;
  rep.m = m;
  if (m && *m >= 1) rep.k = multiple_of(r, *m);
  if (d < 1) return inapplicable(rep, "requires d >= 1");
  if (r < 1) return inapplicable(rep, "requires r >= 1");

  const Rational rr = r;
  auto need_m = [&]() -> bool { return m.has_value() && *m >= 1; };

  switch (kind) {
    case BoundKind::KlsQuad:
      if (d != 2) return inapplicable(rep, "requires d = 2");
      rep.coefficient = 1 / rr;
      break;
    case BoundKind::KlsGeneral:
      rep.coefficient = (1 - make_rational(falling(Integer(r), d), pow_int(Integer(r), d))) * bernstein_range_constant(d);
      break;
    case BoundKind::QuadRefined: {
      if (d != 2) return inapplicable(rep, "requires d = 2");
      if (!need_m()) return inapplicable(rep, "requires m");
      if (r > *m) return inapplicable(rep, "requires r <= m");
      const Rational mm = *m;
      rep.coefficient = (*m == 1) ? Rational(0) : Rational((mm - rr) / (rr * (mm - 1)));
      break;
    }
    case BoundKind::QuadDenom:
      if (d != 2) return inapplicable(rep, "requires d = 2");
      if (!need_m()) return inapplicable(rep, "requires m");
      rep.coefficient = Rational(*m) / (rr * rr);
      break;
    case BoundKind::CubicKls:
      if (d != 3) return inapplicable(rep, "requires d = 3");
      if (r < 2) return inapplicable(rep, "requires r >= 2");
      rep.coefficient = 4 / rr - 4 / (rr * rr);
      break;
    case BoundKind::SqfreeKls:
      rep.coefficient = 1 - make_rational(falling(Integer(r), d), pow_int(Integer(r), d));
      break;
    case BoundKind::CubicRefined: {
      if (d != 3) return inapplicable(rep, "requires d = 3");
      if (!need_m()) return inapplicable(rep, "requires m");
      if (*m < 3) return inapplicable(rep, "requires m >= 3");
      if (r > *m) return inapplicable(rep, "requires r <= m");
      const Rational mm = *m;
      rep.coefficient = (mm - rr) * (4 * mm * rr - 2 * mm - 2 * rr) / (rr * rr * (mm - 1) * (mm - 2));
      break;
    }
    case BoundKind::SqfreeRefined:
      if (!need_m()) return inapplicable(rep, "requires m");
      if (*m < d) return inapplicable(rep, "requires m >= d");
      if (r > *m) return inapplicable(rep, "requires r <= m");
      rep.coefficient = 1 - falling_ratio(d, r, *m);
      break;
    case BoundKind::GeneralRefined:
      if (!need_m()) return inapplicable(rep, "requires m");
      if (*m < d) return inapplicable(rep, "requires m >= d");
      if (r > *m) return inapplicable(rep, "requires r <= m");
      rep.coefficient = (1 - falling_ratio(d, r, *m)) * bernstein_range_constant(d);
      break;
    case BoundKind::CubicRho: {
      if (d != 3) return inapplicable(rep, "requires d = 3");
      if (!need_m()) return inapplicable(rep, "requires m");
      if (*m < 3) return inapplicable(rep, "requires m >= 3");
      const Rational mm = *m;
      rep.coefficient = r <= *m ? Rational(mm * mm / (rr * rr * (mm - 2))) : Rational(6 * mm / (rr * rr));
      break;
    }
    case BoundKind::GeneralRho: {
      if (d < 2) return inapplicable(rep, "requires d >= 2");
      if (!need_m()) return inapplicable(rep, "requires m");
      if (*m < d) return inapplicable(rep, "requires m >= d");
      const auto fp = combin::falling_poly_coeffs(d);
      rep.coefficient = Rational(*m) / (rr * rr) * fp.c_d * bernstein_range_constant(d);
      break;
    }
  }
  rep.coefficient.canonicalize();
  rep.applicable = true;
  return rep;
}

void write_csv(std::ostream& out, const std::vector<BoundReport>& rows, bool header) {
  if (header) out << "kind,d,r,m,k,coefficient,applicable,reason\n";
  for (const auto& row : rows) {
    out << name(row.kind) << ',' << row.d << ',' << row.r << ',';
    if (row.m) out << *row.m;
    out << ',';
    if (row.k) out << *row.k;
    out << ',' << (row.applicable ? to_string(row.coefficient) : std::string()) << ','
        << (row.applicable ? "true" : "false") << ',' << row.reason << '\n';
  }
}

BoundContext::BoundContext(HomogeneousPolynomial f, EnclosureParams params)
    : f_(std::move(f)), params_(std::move(params)), square_free_(is_square_free(f_)) {}

const Rational& BoundContext::grid_min(unsigned r) {
  auto it = min_cache_.find(r);
  if (it == min_cache_.end()) it = min_cache_.emplace(r, grid::grid_minimize(f_, r, params_.grid).value).first;
  return it->second;
}

const Rational& BoundContext::grid_max(unsigned r) {
  auto it = max_cache_.find(r);
  if (it == max_cache_.end()) it = max_cache_.emplace(r, grid::grid_maximize(f_, r, params_.grid).value).first;
  return it->second;
}

const BernsteinBounds& BoundContext::bernstein() {
  if (!bernstein_) bernstein_ = bernstein_enclosure(f_, params_.elevation);
  return *bernstein_;
}

grid::RangeEnclosures BoundContext::enclosures(unsigned r) {
  const BernsteinBounds& bern = bernstein();
  const Rational gmin = grid_min(r);
  const Rational gmax = grid_max(r);
  grid::RangeEnclosures enc;

  if (params_.known_min) {
    const Rational& v = *params_.known_min;
    if (v > gmin || v < bern.lower)
      throw std::invalid_argument("known minimum " + to_string(v) + " contradicts certified enclosure [" +
                                  to_string(bern.lower) + ", " + to_string(gmin) + "]");
    enc.min = {v, v};
  } else if (params_.min_denominator) {
    const Rational v = grid_min(*params_.min_denominator);
    if (v > gmin)
      throw std::invalid_argument("minimizer-denominator hypothesis m=" + std::to_string(*params_.min_denominator) +
                                  " contradicted: f_Delta(n," + std::to_string(r) + ") < f_Delta(n,m)");
    enc.min = {v, v};
  } else {
    enc.min = {bern.lower, gmin};
  }

  if (params_.known_max) {
    const Rational& v = *params_.known_max;
    if (v < gmax || v > bern.upper)
      throw std::invalid_argument("known maximum " + to_string(v) + " contradicts certified enclosure [" +
                                  to_string(gmax) + ", " + to_string(bern.upper) + "]");
    enc.max = {v, v};
  } else {
    enc.max = {gmax, bern.upper};
  }
  return enc;
}

RhoInterval BoundContext::rho(unsigned r) {
  const auto enc = enclosures(r);
  if (enc.max.lo <= enc.min.hi)
    throw DegenerateRange("degenerate range: cannot certify f_max > f_min (f_max >= " + to_string(enc.max.lo) +
                          ", f_min <= " + to_string(enc.min.hi) + ")");
  RhoInterval out;
  out.r = r;
  out.grid_value = grid_min(r);
  out.fmin = enc.min;
  out.fmax = enc.max;
  // rho decreases in both f_min and f_max on the feasible region.
  out.lo = (out.grid_value - enc.min.hi) / (enc.max.hi - enc.min.hi);
  out.hi = (out.grid_value - enc.min.lo) / (enc.max.lo - enc.min.lo);
  return out;
}

BoundWitness BoundContext::check(BoundKind kind, unsigned r, unsigned m) {
  BoundWitness w;
  w.kind = kind;
  w.r = r;
  w.m = m;
  const BoundReport rep = bound_coefficient(kind, f_.degree(), r, m);
  w.applicable = rep.applicable;
  w.reason = rep.reason;
  if (w.applicable && requires_square_free(kind) && !square_free_) {
    w.applicable = false;
    w.reason = "polynomial is not square-free";
  }
  w.lhs = grid_min(r) - grid_min(m);
  if (!w.applicable) return w;
  const auto enc = enclosures(std::max(r, m));
  w.coefficient = rep.coefficient;
  w.range_upper = enc.max.hi - enc.min.lo;
  w.rhs = w.coefficient * w.range_upper;
  w.holds = w.lhs <= w.rhs;
  return w;
}

RhoInterval rho_interval(const HomogeneousPolynomial& f, unsigned r, const EnclosureParams& params) {
  BoundContext ctx(f, params);
  return ctx.rho(r);
}

BoundWitness check_bound(const HomogeneousPolynomial& f, BoundKind kind, unsigned r, unsigned m,
                         const EnclosureParams& params) {
  BoundContext ctx(f, params);
  return ctx.check(kind, r, m);
}

HomogeneousPolynomial random_polynomial(std::uint64_t seed, unsigned max_n, unsigned max_d, int coef_bound) {
  std::mt19937_64 rng(seed);
  auto pick = [&](std::uint64_t lo, std::uint64_t hi) { return lo + rng() % (hi - lo + 1); };
  const auto n = static_cast<std::size_t>(pick(std::min(2u, max_n), max_n));
  const auto d = static_cast<unsigned>(pick(1, max_d));
  HomogeneousPolynomial f(n, d);
  const auto span = static_cast<std::uint64_t>(2 * coef_bound);
  for (const auto& beta : compositions(n, d)) {
    const long c = static_cast<long>(pick(0, span)) - coef_bound;
    f.add_term(beta, c);
  }
  return f;
}

std::vector<WitnessRecord> random_witness_sweep(const WitnessSweep& cfg) {
  std::vector<std::vector<WitnessRecord>> per_poly(cfg.polynomials);
  const int threads = cfg.threads > 0 ? cfg.threads : omp_get_max_threads();

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(cfg.polynomials); ++i) {
    const auto idx = static_cast<unsigned>(i);
    EnclosureParams params;
    params.elevation = cfg.elevation;
    params.grid.threads = 1;
    BoundContext ctx(random_polynomial(cfg.seed + idx, cfg.max_n, cfg.max_d, cfg.coef_bound), params);
    auto& out = per_poly[idx];
    for (unsigned m = 1; m <= cfg.max_m; ++m)
      for (unsigned r = 1; r <= m; ++r)
        for (BoundKind kind : kAllKinds) {
          BoundWitness w = ctx.check(kind, r, m);
          if (w.applicable) out.push_back({idx, ctx.polynomial(), std::move(w)});
        }
  }

  std::vector<WitnessRecord> all;
  for (auto& v : per_poly)
    for (auto& rec : v) all.push_back(std::move(rec));
  return all;
}

}  // namespace sgo::bounds
