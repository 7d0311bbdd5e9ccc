#pragma once

#include <cstdint>
#include <istream>
#include <set>
#include <utility>
#include <vector>

#include "sgo/grid.hpp"
#include "sgo/poly.hpp"

namespace sgo::stableset {

/// Simple undirected graph on vertices 1..n.
class Graph {
 public:
  explicit Graph(std::size_t vertices);

  /// Throws std::invalid_argument on self-loops, out-of-range vertices or a
  /// repeated edge.
  void add_edge(std::size_t u, std::size_t v);
  bool has_edge(std::size_t u, std::size_t v) const;

  std::size_t vertices() const { return n_; }
  const std::set<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }

  static Graph complete(std::size_t n);
  static Graph petersen();

 private:
  std::size_t n_;
  std::set<std::pair<std::size_t, std::size_t>> edges_;  // (u, v) with u < v
};

/// Edge-list text: one "u v" pair per line, 1-indexed. DIMACS "c" comments,
/// "p edge N M" headers and "e u v" lines are accepted; '#' starts a comment.
/// Repeated edges (in either orientation) are merged.
Graph parse_edge_list(std::istream& in);

/// x^T (I + A_G) x as a degree-2 form.
HomogeneousPolynomial motzkin_straus_form(const Graph& g);

struct AlphaBound {
  Rational grid_value;     // f_Delta(|V|, r) of the Motzkin-Straus form
  std::uint64_t alpha_lb;  // ceil(1 / grid_value) <= alpha(G)
  std::uint64_t evaluations;
};

AlphaBound alpha_lower_bound(const Graph& g, unsigned r, const grid::GridOptions& opts = {});

/// Exact stability number by branch-and-bound subset search. Exponential;
/// limited to 64 vertices and meant for small test graphs.
std::size_t brute_force_alpha(const Graph& g);

/// A maximal stable set by the min-degree greedy rule (1-indexed, sorted).
std::vector<std::size_t> greedy_stable_set(const Graph& g);

}  // namespace sgo::stableset
