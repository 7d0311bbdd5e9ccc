#include "sgo/stableset.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>
#include <string>

namespace sgo::stableset {

Graph::Graph(std::size_t vertices) : n_(vertices) {
  if (vertices == 0) throw std::invalid_argument("graph needs at least one vertex");
}

void Graph::add_edge(std::size_t u, std::size_t v) {
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  if (u < 1 || v < 1 || u > n_ || v > n_)
    throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
  if (!edges_.emplace(std::min(u, v), std::max(u, v)).second)
    throw std::invalid_argument("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
}

bool Graph::has_edge(std::size_t u, std::size_t v) const {
  return edges_.count({std::min(u, v), std::max(u, v)}) > 0;
}

Graph Graph::complete(std::size_t n) {
  Graph g(n);
  for (std::size_t u = 1; u <= n; ++u)
    for (std::size_t v = u + 1; v <= n; ++v) g.add_edge(u, v);
  return g;
}

Graph Graph::petersen() {
  Graph g(10);
  for (std::size_t i = 0; i < 5; ++i) {
    g.add_edge(i + 1, (i + 1) % 5 + 1);          // outer cycle
    g.add_edge(i + 1, i + 6);                    // spokes
    g.add_edge(i + 6, (i + 2) % 5 + 6);          // inner pentagram
  }
  return g;
}

Graph parse_edge_list(std::istream& in) {
  std::size_t declared = 0;
  std::size_t max_vertex = 0;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "c") continue;
    if (first == "p") {
      std::string kind;
      std::size_t nv = 0, ne = 0;
      if (!(ls >> kind >> nv >> ne)) throw std::invalid_argument("malformed header on line " + std::to_string(lineno));
      declared = nv;
      continue;
    }
    std::size_t u = 0, v = 0;
    try {
      if (first == "e") {
        if (!(ls >> u >> v)) throw std::invalid_argument("");
      } else {
        u = std::stoul(first);
        if (!(ls >> v)) throw std::invalid_argument("");
      }
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed edge on line " + std::to_string(lineno));
    }
    if (u == 0 || v == 0) throw std::invalid_argument("vertices are 1-indexed (line " + std::to_string(lineno) + ")");
    if (u == v) throw std::invalid_argument("self-loop on line " + std::to_string(lineno));
    max_vertex = std::max({max_vertex, u, v});
    pairs.emplace_back(std::min(u, v), std::max(u, v));
  }
  if (declared && max_vertex > declared)
    throw std::invalid_argument("edge endpoint exceeds declared vertex count");
  Graph g(std::max(declared, max_vertex));
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  for (const auto& [u, v] : pairs) g.add_edge(u, v);
  return g;
}

HomogeneousPolynomial motzkin_straus_form(const Graph& g) {
  const std::size_t n = g.vertices();
  HomogeneousPolynomial f(n, 2);
  for (std::size_t i = 0; i < n; ++i) f.add_term(ExponentTuple::unit(n, i, 2), 1);
  for (const auto& [u, v] : g.edges()) {
    ExponentTuple a(n);
    a[u - 1] = a[v - 1] = 1;
    f.add_term(a, 2);
  }
  return f;
}

AlphaBound alpha_lower_bound(const Graph& g, unsigned r, const grid::GridOptions& opts) {
  const auto res = grid::grid_minimize(motzkin_straus_form(g), r, opts);
  // f >= 1/alpha(G) > 0 on the simplex.
  const Integer lb = sgo::ceil(1 / res.value);
  return {res.value, lb.get_ui(), res.evaluations};
}

namespace {

using Mask = std::uint64_t;

void search(const std::vector<Mask>& adj, Mask candidates, std::size_t size, std::size_t& best) {
  if (candidates == 0) {
    best = std::max(best, size);
    return;
  }
  if (size + static_cast<std::size_t>(std::popcount(candidates)) <= best) return;
  const int v = std::countr_zero(candidates);
  const Mask bit = Mask{1} << v;
  search(adj, candidates & ~adj[static_cast<std::size_t>(v)] & ~bit, size + 1, best);
  search(adj, candidates & ~bit, size, best);
}

}  // namespace

std::size_t brute_force_alpha(const Graph& g) {
  const std::size_t n = g.vertices();
  if (n > 64) throw std::invalid_argument("brute_force_alpha supports at most 64 vertices");
  std::vector<Mask> adj(n, 0);
  for (const auto& [u, v] : g.edges()) {
    adj[u - 1] |= Mask{1} << (v - 1);
    adj[v - 1] |= Mask{1} << (u - 1);
  }
  const Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  std::size_t best = 0;
  search(adj, all, 0, best);
  return best;
}

std::vector<std::size_t> greedy_stable_set(const Graph& g) {
  const std::size_t n = g.vertices();
  std::vector<bool> alive(n + 1, true);
  std::vector<std::size_t> chosen;
  for (;;) {
    std::size_t pick = 0, best_deg = 0;
    for (std::size_t v = 1; v <= n; ++v) {
      if (!alive[v]) continue;
      std::size_t deg = 0;
      for (std::size_t u = 1; u <= n; ++u)
        if (u != v && alive[u] && g.has_edge(u, v)) ++deg;
      if (pick == 0 || deg < best_deg) {
        pick = v;
        best_deg = deg;
      }
    }
    if (pick == 0) break;
    chosen.push_back(pick);
    alive[pick] = false;
    for (std::size_t u = 1; u <= n; ++u)
      if (g.has_edge(u, pick)) alive[u] = false;
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

}  // namespace sgo::stableset
