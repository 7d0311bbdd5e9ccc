#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "sgo/bounds.hpp"
#include "sgo/grid.hpp"
#include "sgo/hypergeom.hpp"
#include "sgo/identities.hpp"
#include "sgo/poly_io.hpp"
#include "sgo/stableset.hpp"

namespace sgo::cli {

namespace {

using nlohmann::json;

constexpr const char* kVersionLine = "# simplex-grid-opt v1";
constexpr const char* kDecimalNote = "# *_decimal columns are advisory: 20 significant digits, round half to even";
constexpr unsigned long long kDefaultMaxGrid = 100'000'000ULL;

struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Config {
  std::string poly;
  std::string graph;
  std::string r;
  std::string m;
  unsigned d = 0;
  std::string counts;
  std::string x;
  unsigned elevation = 4;
  std::string format;
  int threads = 0;
  bool force = false;
  bool homogenize = false;
  bool bernstein = false;
  bool all = false;
  std::string fmin;
  std::string fmax;
  // verify
  std::vector<std::string> only;
  std::vector<std::string> sweep;
  bool inject_fault = false;
  bool failures_only = false;
};

// ---- parsing helpers ----

unsigned parse_uint(std::string_view text, std::string_view what) {
  unsigned v = 0;
  const auto* end = text.data() + text.size();
  auto [p, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || p != end || text.empty())
    throw ConfigError(std::string(what) + ": expected a nonnegative integer, got '" + std::string(text) + "'");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  return parts;
}

struct Range {
  unsigned lo = 0;
  unsigned hi = 0;
};

// "a" or "a:b", both ends inclusive and >= 1.
Range parse_range(const std::string& text, std::string_view what) {
  if (text.empty()) throw ConfigError(std::string(what) + " is required");
  const auto colon = text.find(':');
  Range rg;
  if (colon == std::string::npos) {
    rg.lo = rg.hi = parse_uint(text, what);
  } else {
    rg.lo = parse_uint(std::string_view(text).substr(0, colon), what);
    rg.hi = parse_uint(std::string_view(text).substr(colon + 1), what);
  }
  if (rg.lo == 0) throw ConfigError(std::string(what) + " must be >= 1");
  if (rg.lo > rg.hi) throw ConfigError(std::string(what) + ": empty range " + text);
  return rg;
}

unsigned parse_single(const std::string& text, std::string_view what) {
  const Range rg = parse_range(text, what);
  if (rg.lo != rg.hi) throw ConfigError(std::string(what) + " takes a single value here");
  return rg.lo;
}

std::optional<Rational> parse_optional_rational(const std::string& text, std::string_view what) {
  if (text.empty()) return std::nullopt;
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string(what) + ": " + e.what());
  }
}

HomogeneousPolynomial load_poly(const Config& c) {
  if (c.poly.empty()) throw ConfigError("--poly is required");
  io::PolynomialDocument doc = [&] {
    if (c.poly == "-") return io::read_polynomial(std::cin);
    std::ifstream in(c.poly);
    if (!in) throw ConfigError("cannot open polynomial file '" + c.poly + "'");
    return io::read_polynomial(in);
  }();
  if (c.d) doc.degree = c.d;
  return io::to_homogeneous(doc, c.homogenize);
}

unsigned long long max_grid() {
  const char* env = std::getenv("SGO_MAX_GRID");
  if (!env || !*env) return kDefaultMaxGrid;
  unsigned long long v = 0;
  const std::string_view s(env);
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) throw ConfigError("SGO_MAX_GRID must be a nonnegative integer");
  return v;
}

void guard(const Config& c, std::size_t n, unsigned r) {
  const Integer size = grid::grid_size({n, r});
  if (c.force) return;
  const Integer limit(std::to_string(max_grid()));
  if (size > limit)
    throw grid::GridTooLarge("|Delta(" + std::to_string(n) + "," + std::to_string(r) + ")| = " + to_string(size) +
                             " exceeds the limit " + to_string(limit) + "; pass --force or raise SGO_MAX_GRID");
}

std::string format_of(const Config& c, const char* fallback) {
  const std::string f = c.format.empty() ? fallback : c.format;
  if (f != "csv" && f != "json") throw ConfigError("--format must be csv or json");
  return f;
}

// ---- output helpers ----

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

void csv_row(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << csv_field(fields[i]);
  out << '\n';
}

void csv_preamble(std::ostream& out, bool decimals) {
  out << kVersionLine << '\n';
  if (decimals) out << kDecimalNote << '\n';
}

std::string point_string(const ExponentTuple& alpha, unsigned r) {
  std::string s;
  for (std::size_t i = 0; i < alpha.size(); ++i)
    s += (i ? "," : "") + to_string(make_rational(alpha[i], r));
  return s;
}

json exponent_json(const ExponentTuple& alpha) { return json(alpha.values()); }

void emit_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

grid::GridOptions grid_options(const Config& c) { return {16, c.threads}; }

bounds::EnclosureParams enclosure_params(const Config& c) {
  bounds::EnclosureParams p;
  p.elevation = c.elevation;
  p.known_min = parse_optional_rational(c.fmin, "--fmin");
  p.known_max = parse_optional_rational(c.fmax, "--fmax");
  if (!c.m.empty()) p.min_denominator = parse_single(c.m, "--m");
  p.grid = grid_options(c);
  return p;
}

// ---- verbs ----

int cmd_grid(const Config& c, bool maximize, std::ostream& out) {
  const auto f = load_poly(c);
  const unsigned r = parse_single(c.r, "--r");
  const std::string fmt = format_of(c, "csv");
  guard(c, f.variables(), r);
  const auto res = maximize ? grid::grid_maximize(f, r, grid_options(c)) : grid::grid_minimize(f, r, grid_options(c));

  if (fmt == "json") {
    json pts = json::array();
    for (const auto& a : res.minimizers) pts.push_back({{"alpha", exponent_json(a)}, {"x", split(point_string(a, r), ',')}});
    emit_json(out, {{"verb", maximize ? "grid-max" : "grid-min"},
                    {"n", f.variables()},
                    {"d", f.degree()},
                    {"r", r},
                    {"value", to_string(res.value)},
                    {"value_decimal", to_decimal(res.value)},
                    {"evaluations", res.evaluations},
                    {"tie_count", res.tie_count},
                    {maximize ? "maximizers" : "minimizers", pts}});
    return kOk;
  }
  csv_preamble(out, true);
  out << "# tie_count counts every optimal grid point; at most 16 are listed, lexicographically\n";
  csv_row(out, {"n", "d", "r", "value", "value_decimal", "evaluations", "tie_count", "alpha", "x"});
  for (const auto& a : res.minimizers)
    csv_row(out, {std::to_string(f.variables()), std::to_string(f.degree()), std::to_string(r), to_string(res.value),
                  to_decimal(res.value), std::to_string(res.evaluations), std::to_string(res.tie_count),
                  a.to_string(','), point_string(a, r)});
  return kOk;
}

int cmd_expect(const Config& c, std::ostream& out) {
  const auto f = load_poly(c);
  const unsigned r = parse_single(c.r, "--r");
  const std::string fmt = format_of(c, "csv");
  const std::size_t n = f.variables();
  guard(c, n, r);
  const Rational grid_value = grid::grid_minimize(f, r, grid_options(c)).value;

  if (c.bernstein) {
    if (c.x.empty()) throw ConfigError("--bernstein needs --x");
    Point x;
    for (const auto& part : split(c.x, ',')) x.push_back(*parse_optional_rational(part, "--x"));
    if (x.size() != n) throw ConfigError("--x has " + std::to_string(x.size()) + " coordinates, polynomial has " + std::to_string(n));
    const Rational value = hypergeom::bernstein_approximation(f, x, r);
    std::string xs;
    for (std::size_t i = 0; i < n; ++i) xs += (i ? "," : "") + to_string(x[i]);
    if (fmt == "json") {
      emit_json(out, {{"verb", "expect"}, {"mode", "bernstein"}, {"n", n}, {"d", f.degree()}, {"r", r},
                      {"x", split(xs, ',')}, {"value", to_string(value)}, {"value_decimal", to_decimal(value)},
                      {"grid_value", to_string(grid_value)}, {"grid_value_decimal", to_decimal(grid_value)}});
      return kOk;
    }
    csv_preamble(out, true);
    csv_row(out, {"mode", "n", "d", "r", "x", "value", "value_decimal", "grid_value", "grid_value_decimal"});
    csv_row(out, {"bernstein", std::to_string(n), std::to_string(f.degree()), std::to_string(r), xs, to_string(value),
                  to_decimal(value), to_string(grid_value), to_decimal(grid_value)});
    return kOk;
  }

  if (c.counts.empty()) throw ConfigError("expect needs --counts (or --bernstein with --x)");
  std::vector<unsigned> counts;
  for (const auto& part : split(c.counts, ',')) counts.push_back(parse_uint(part, "--counts"));
  if (counts.size() != n)
    throw ConfigError("--counts has " + std::to_string(counts.size()) + " entries, polynomial has " + std::to_string(n));
  const hypergeom::Params p(counts, r);
  if (!c.m.empty() && parse_single(c.m, "--m") != p.m())
    throw ConfigError("--m does not equal the sum of --counts (" + std::to_string(p.m()) + ")");
  const Rational value = hypergeom::expectation(f, p);
  std::string cs;
  for (std::size_t i = 0; i < n; ++i) cs += (i ? "," : "") + std::to_string(counts[i]);
  if (fmt == "json") {
    emit_json(out, {{"verb", "expect"}, {"mode", "hypergeometric"}, {"n", n}, {"d", f.degree()}, {"m", p.m()},
                    {"r", r}, {"counts", counts}, {"value", to_string(value)}, {"value_decimal", to_decimal(value)},
                    {"grid_value", to_string(grid_value)}, {"grid_value_decimal", to_decimal(grid_value)}});
    return kOk;
  }
  csv_preamble(out, true);
  csv_row(out, {"mode", "n", "d", "m", "r", "counts", "value", "value_decimal", "grid_value", "grid_value_decimal"});
  csv_row(out, {"hypergeometric", std::to_string(n), std::to_string(f.degree()), std::to_string(p.m()), std::to_string(r),
                cs, to_string(value), to_decimal(value), to_string(grid_value), to_decimal(grid_value)});
  return kOk;
}

int cmd_bounds(const Config& c, std::ostream& out) {
  const std::string fmt = format_of(c, "csv");
  unsigned d = c.d;
  std::optional<bool> square_free;
  if (!c.poly.empty()) {
    const auto f = load_poly(c);
    d = f.degree();
    square_free = is_square_free(f);
  }
  if (d == 0) throw ConfigError("bounds needs --d or --poly");
  const Range rr = parse_range(c.r, "--r");
  std::vector<std::optional<unsigned>> ms;
  if (c.m.empty()) {
    ms.push_back(std::nullopt);
  } else {
    const Range mr = parse_range(c.m, "--m");
    for (unsigned m = mr.lo; m <= mr.hi; ++m) ms.push_back(m);
  }

  std::vector<bounds::BoundReport> rows;
  for (unsigned r = rr.lo; r <= rr.hi; ++r)
    for (const auto& m : ms)
      for (auto kind : bounds::kAllKinds) {
        auto rep = bounds::bound_coefficient(kind, d, r, m);
        if (rep.applicable && square_free == false && bounds::requires_square_free(kind)) {
          rep.applicable = false;
          rep.coefficient = 0;
          rep.reason = "polynomial is not square-free";
        }
        if (rep.applicable || c.all) rows.push_back(std::move(rep));
      }

  if (fmt == "json") {
    json arr = json::array();
    for (const auto& row : rows) {
      json j = {{"kind", bounds::name(row.kind)}, {"d", row.d}, {"r", row.r}, {"applicable", row.applicable}};
      j["m"] = row.m ? json(*row.m) : json(nullptr);
      j["k"] = row.k ? json(*row.k) : json(nullptr);
      j["coefficient"] = row.applicable ? json(to_string(row.coefficient)) : json(nullptr);
      j["coefficient_decimal"] = row.applicable ? json(to_decimal(row.coefficient)) : json(nullptr);
      j["reason"] = row.reason;
      arr.push_back(std::move(j));
    }
    emit_json(out, arr);
    return kOk;
  }
  csv_preamble(out, false);
  bounds::write_csv(out, rows);
  return kOk;
}

int cmd_converge(const Config& c, std::ostream& out) {
  const auto f = load_poly(c);
  const Range rr = parse_range(c.r, "--r");
  const std::string fmt = format_of(c, "csv");
  const auto params = enclosure_params(c);
  const std::optional<unsigned> m = params.min_denominator;
  const bool sqfree = is_square_free(f);
  const std::size_t n = f.variables();
  if (m) guard(c, n, *m);
  bounds::BoundContext ctx(f, params);

  std::vector<std::string> header = {"r", "grid_value", "grid_value_decimal", "rho_lo", "rho_hi", "rho_hi_decimal",
                                     "rho_hi_times_r2"};
  for (auto kind : bounds::kAllKinds) header.emplace_back(bounds::name(kind));

  json arr = json::array();
  std::vector<std::vector<std::string>> rows;
  for (unsigned r = rr.lo; r <= rr.hi; ++r) {
    guard(c, n, r);
    std::vector<std::string> row = {std::to_string(r)};
    const Rational& g = ctx.grid_min(r);
    row.push_back(to_string(g));
    row.push_back(to_decimal(g));
    json j = {{"r", r}, {"grid_value", to_string(g)}, {"grid_value_decimal", to_decimal(g)}};
    try {
      const auto rho = ctx.rho(r);
      const Rational scaled = rho.hi * r * r;
      row.insert(row.end(), {to_string(rho.lo), to_string(rho.hi), to_decimal(rho.hi), to_string(scaled)});
      j["rho_lo"] = to_string(rho.lo);
      j["rho_hi"] = to_string(rho.hi);
      j["rho_hi_decimal"] = to_decimal(rho.hi);
      j["rho_hi_times_r2"] = to_string(scaled);
    } catch (const bounds::DegenerateRange&) {
      row.insert(row.end(), {"NA", "NA", "NA", "NA"});
      j["rho_lo"] = j["rho_hi"] = j["rho_hi_decimal"] = j["rho_hi_times_r2"] = nullptr;
    }
    json coeffs = json::object();
    for (auto kind : bounds::kAllKinds) {
      const auto rep = bounds::bound_coefficient(kind, f.degree(), r, m);
      const bool ok = rep.applicable && (sqfree || !bounds::requires_square_free(kind));
      row.push_back(ok ? to_string(rep.coefficient) : "");
      coeffs[std::string(bounds::name(kind))] = ok ? json(to_string(rep.coefficient)) : json(nullptr);
    }
    j["coefficients"] = std::move(coeffs);
    rows.push_back(std::move(row));
    arr.push_back(std::move(j));
  }

  if (fmt == "json") {
    emit_json(out, arr);
    return kOk;
  }
  csv_preamble(out, true);
  out << "# rho_lo/rho_hi enclose (f_Delta(n,r) - f_min)/(f_max - f_min); NA when the range is not certified positive\n";
  csv_row(out, header);
  for (const auto& row : rows) csv_row(out, row);
  return kOk;
}

int cmd_enclose(const Config& c, std::ostream& out) {
  const auto f = load_poly(c);
  const unsigned r = parse_single(c.r, "--r");
  const std::string fmt = format_of(c, "csv");
  const auto params = enclosure_params(c);
  guard(c, f.variables(), r);
  if (params.min_denominator) guard(c, f.variables(), *params.min_denominator);
  bounds::BoundContext ctx(f, params);
  const auto enc = ctx.enclosures(r);

  const std::pair<const char*, const grid::Enclosure*> items[] = {{"f_min", &enc.min}, {"f_max", &enc.max}};
  if (fmt == "json") {
    json j = {{"r", r}, {"elevation", params.elevation}};
    for (const auto& [label, e] : items)
      j[label] = {{"lo", to_string(e->lo)}, {"hi", to_string(e->hi)}, {"width", to_string(e->width())},
                  {"lo_decimal", to_decimal(e->lo)}, {"hi_decimal", to_decimal(e->hi)}};
    emit_json(out, j);
    return kOk;
  }
  csv_preamble(out, true);
  csv_row(out, {"quantity", "r", "elevation", "lo", "hi", "width", "lo_decimal", "hi_decimal"});
  for (const auto& [label, e] : items)
    csv_row(out, {label, std::to_string(r), std::to_string(params.elevation), to_string(e->lo), to_string(e->hi),
                  to_string(e->width()), to_decimal(e->lo), to_decimal(e->hi)});
  return kOk;
}

struct VerifyRow {
  std::string name;
  std::string params;
  Rational lhs;
  std::string relation;
  Rational rhs;
  bool holds = false;
};

int cmd_verify(const Config& c, std::ostream& out, std::ostream& err) {
  const std::string fmt = format_of(c, "csv");
  identities::SweepConfig sweep;
  sweep.threads = c.threads;
  bounds::WitnessSweep witness;
  witness.threads = c.threads;

  std::map<std::string, std::function<void(unsigned)>> knobs = {
      {"stirling_max_d", [&](unsigned v) { sweep.stirling_max_d = v; }},
      {"stirling_max_r", [&](unsigned v) { sweep.stirling_max_r = v; }},
      {"multi_max_n", [&](unsigned v) { sweep.multi_max_n = v; }},
      {"multi_max_d", [&](unsigned v) { sweep.multi_max_d = v; }},
      {"random_points", [&](unsigned v) { sweep.random_points = v; }},
      {"random_max_n", [&](unsigned v) { sweep.random_max_n = v; }},
      {"random_max_d", [&](unsigned v) { sweep.random_max_d = v; }},
      {"abeta_max_n", [&](unsigned v) { sweep.abeta_max_n = v; }},
      {"abeta_max_d", [&](unsigned v) { sweep.abeta_max_d = v; }},
      {"abeta_max_m", [&](unsigned v) { sweep.abeta_max_m = v; }},
      {"kmr_max", [&](unsigned v) { sweep.kmr_max = v; }},
      {"sigma_max_d", [&](unsigned v) { sweep.sigma_max_d = v; }},
      {"sigma_max_m", [&](unsigned v) { sweep.sigma_max_m = v; }},
      {"sigma_max_k", [&](unsigned v) { sweep.sigma_max_k = v; }},
      {"phi_max_k", [&](unsigned v) { sweep.phi_max_k = v; }},
      {"phi_max_m", [&](unsigned v) { sweep.phi_max_m = v; }},
      {"threshold_max_m", [&](unsigned v) { sweep.threshold_max_m = v; }},
      {"seed", [&](unsigned v) { sweep.seed = witness.seed = v; }},
      {"polys", [&](unsigned v) { witness.polynomials = v; }},
      {"witness_max_n", [&](unsigned v) { witness.max_n = v; }},
      {"witness_max_d", [&](unsigned v) { witness.max_d = v; }},
      {"witness_max_m", [&](unsigned v) { witness.max_m = v; }},
      {"witness_elevation", [&](unsigned v) { witness.elevation = v; }},
  };
  for (const auto& kv : c.sweep) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw ConfigError("--sweep expects key=value, got '" + kv + "'");
    const auto it = knobs.find(kv.substr(0, eq));
    if (it == knobs.end()) throw ConfigError("unknown sweep key '" + kv.substr(0, eq) + "'");
    it->second(parse_uint(std::string_view(kv).substr(eq + 1), "--sweep " + it->first));
  }

  bool want_bounds = c.only.empty();
  std::vector<identities::Identity> wanted;
  for (const auto& name : c.only) {
    if (name == "BOUNDS") {
      want_bounds = true;
    } else if (auto id = identities::parse_identity(name)) {
      wanted.push_back(*id);
    } else {
      throw ConfigError("unknown check '" + name + "'");
    }
  }
  const bool want_identities = c.only.empty() || !wanted.empty();

  std::vector<VerifyRow> rows;
  if (want_identities) {
    for (auto& chk : identities::run_sweeps(sweep)) {
      if (!wanted.empty() && std::find(wanted.begin(), wanted.end(), chk.name) == wanted.end()) continue;
      rows.push_back({std::string(identities::name(chk.name)), chk.params, chk.lhs, identities::relation_symbol(chk.relation),
                      chk.rhs, chk.holds});
    }
  }
  if (want_bounds) {
    for (auto& rec : bounds::random_witness_sweep(witness)) {
      const auto& w = rec.witness;
      rows.push_back({"BOUND_" + std::string(bounds::name(w.kind)),
                      "poly=" + std::to_string(rec.poly_index) + ";n=" + std::to_string(rec.f.variables()) +
                          ";d=" + std::to_string(rec.f.degree()) + ";r=" + std::to_string(w.r) + ";m=" + std::to_string(w.m),
                      w.lhs, "<=", w.rhs, w.holds});
    }
  }
  if (c.inject_fault) {
    // Harness self-test: a Stirling-sum check with a corrupted right-hand side.
    auto chk = identities::stirling_sum(3, 4);
    rows.push_back({std::string(identities::name(chk.name)), chk.params + ";fault=injected", chk.lhs,
                    identities::relation_symbol(chk.relation), chk.rhs + 1, chk.lhs == chk.rhs + 1});
  }
  if (rows.empty()) {
    err << "verify: no checks run (the selected sweep ranges are empty)\n";
    return kInvalidConfig;
  }

  std::size_t failures = 0;
  for (const auto& row : rows) failures += row.holds ? 0 : 1;

  if (fmt == "json") {
    json arr = json::array();
    for (const auto& row : rows) {
      if (c.failures_only && row.holds) continue;
      arr.push_back({{"check", row.name}, {"params", row.params}, {"lhs", to_string(row.lhs)},
                     {"relation", row.relation}, {"rhs", to_string(row.rhs)}, {"holds", row.holds}});
    }
    emit_json(out, {{"checks", rows.size()}, {"failures", failures}, {"results", arr}});
  } else {
    csv_preamble(out, false);
    csv_row(out, {"check", "params", "lhs", "relation", "rhs", "holds"});
    for (const auto& row : rows) {
      if (c.failures_only && row.holds) continue;
      csv_row(out, {row.name, row.params, to_string(row.lhs), row.relation, to_string(row.rhs), row.holds ? "true" : "false"});
    }
  }
  err << "verify: " << rows.size() << " checks, " << failures << " failures\n";
  return failures ? kVerificationFailed : kOk;
}

int cmd_stable_set(const Config& c, std::ostream& out) {
  if (c.graph.empty()) throw ConfigError("--graph is required");
  const unsigned r = parse_single(c.r, "--r");
  const std::string fmt = format_of(c, "json");
  std::ifstream in(c.graph);
  if (!in) throw ConfigError("cannot open graph file '" + c.graph + "'");
  const auto g = stableset::parse_edge_list(in);
  guard(c, g.vertices(), r);
  const auto res = stableset::alpha_lower_bound(g, r, grid_options(c));
  if (fmt == "json") {
    emit_json(out, {{"vertices", g.vertices()}, {"edges", g.edges().size()}, {"r", r},
                    {"grid_value", to_string(res.grid_value)}, {"grid_value_decimal", to_decimal(res.grid_value)},
                    {"alpha_lb", res.alpha_lb}, {"evaluations", res.evaluations}});
    return kOk;
  }
  csv_preamble(out, true);
  csv_row(out, {"vertices", "edges", "r", "grid_value", "grid_value_decimal", "alpha_lb", "evaluations"});
  csv_row(out, {std::to_string(g.vertices()), std::to_string(g.edges().size()), std::to_string(r), to_string(res.grid_value),
                to_decimal(res.grid_value), std::to_string(res.alpha_lb), std::to_string(res.evaluations)});
  return kOk;
}

// ---- option wiring ----

void add_poly_options(CLI::App* sub, Config& c) {
  sub->add_option("--poly", c.poly, "Polynomial JSON file ('-' for stdin)");
  sub->add_flag("--homogenize", c.homogenize, "Homogenize a non-homogeneous input to degree --d (or its top degree)");
  sub->add_option("--d", c.d, "Degree");
}

void add_common(CLI::App* sub, Config& c) {
  sub->add_option("--format", c.format, "Output format: csv or json");
  sub->add_option("--threads", c.threads, "Worker threads (0 = runtime default); never changes output");
  sub->add_flag("--force", c.force, "Ignore the grid-size guard (SGO_MAX_GRID, default 1e8)");
}

void add_enclosure_options(CLI::App* sub, Config& c) {
  sub->add_option("--elevation", c.elevation, "Bernstein degree elevations for the range enclosure");
  sub->add_option("--fmin", c.fmin, "Known exact minimum over the simplex");
  sub->add_option("--fmax", c.fmax, "Known exact maximum over the simplex");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Polynomial minimization over the simplex by regular grids, with exact error bounds", "sgo"};
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", "sgo 1.0");

  auto* grid_min = app.add_subcommand("grid-min", "Minimum over the grid Delta(n,r)");
  auto* grid_max = app.add_subcommand("grid-max", "Maximum over the grid Delta(n,r)");
  for (auto* sub : {grid_min, grid_max}) {
    add_poly_options(sub, c);
    add_common(sub, c);
    sub->add_option("--r", c.r, "Grid denominator")->required();
  }

  auto* expect = app.add_subcommand("expect", "E[f(X)] under the hypergeometric (or multinomial) distribution");
  add_poly_options(expect, c);
  add_common(expect, c);
  expect->add_option("--r", c.r, "Number of draws")->required();
  expect->add_option("--counts", c.counts, "Urn counts m_1,...,m_n");
  expect->add_option("--m", c.m, "Total ball count (checked against --counts)");
  expect->add_flag("--bernstein", c.bernstein, "Bernstein approximation of order r at --x instead");
  expect->add_option("--x", c.x, "Simplex point x_1,...,x_n (rationals)");

  auto* bnd = app.add_subcommand("bounds", "Bound coefficients of (f_max - f_min)");
  add_poly_options(bnd, c);
  add_common(bnd, c);
  bnd->add_option("--r", c.r, "r or lo:hi")->required();
  bnd->add_option("--m", c.m, "m or lo:hi");
  bnd->add_flag("--all", c.all, "Include inapplicable rows");

  auto* conv = app.add_subcommand("converge", "Grid values, rho enclosures and bound coefficients over a range of r");
  add_poly_options(conv, c);
  add_common(conv, c);
  add_enclosure_options(conv, c);
  conv->add_option("--r", c.r, "r or lo:hi")->required();
  conv->add_option("--m", c.m, "Denominator of a global minimizer (fixes f_min = f_Delta(n,m))");

  auto* encl = app.add_subcommand("enclose", "Certified enclosures of f_min and f_max");
  add_poly_options(encl, c);
  add_common(encl, c);
  add_enclosure_options(encl, c);
  encl->add_option("--r", c.r, "Grid denominator")->required();
  encl->add_option("--m", c.m, "Denominator of a global minimizer");

  auto* ver = app.add_subcommand("verify", "Identity sweeps and bound witnesses; exit 4 on any failure");
  add_common(ver, c);
  ver->add_option("--only", c.only, "Restrict to these checks (identity names or BOUNDS)")->delimiter(',');
  ver->add_option("--sweep", c.sweep, "Override a sweep bound, key=value (repeatable)");
  ver->add_flag("--inject-fault", c.inject_fault, "Append a deliberately false check");
  ver->add_flag("--failures-only", c.failures_only, "Print failing rows only");

  auto* ss = app.add_subcommand("stable-set", "Motzkin-Straus lower bound on the stability number");
  add_common(ss, c);
  ss->add_option("--graph", c.graph, "Edge-list file")->required();
  ss->add_option("--r", c.r, "Grid denominator")->required();

  std::vector<std::string> argv_store = {"sgo"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidConfig;
  }

  try {
    if (grid_min->parsed()) return cmd_grid(c, false, out);
    if (grid_max->parsed()) return cmd_grid(c, true, out);
    if (expect->parsed()) return cmd_expect(c, out);
    if (bnd->parsed()) return cmd_bounds(c, out);
    if (conv->parsed()) return cmd_converge(c, out);
    if (encl->parsed()) return cmd_enclose(c, out);
    if (ver->parsed()) return cmd_verify(c, out, err);
    if (ss->parsed()) return cmd_stable_set(c, out);
  } catch (const grid::GridTooLarge& e) {
    err << "error: " << e.what() << '\n';
    return kSizeGuard;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidConfig;
  }
  return kInvalidConfig;
}

}  // namespace sgo::cli
