#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "sgo/poly.hpp"

namespace sgo::grid {

/// Delta(n, r): simplex points with common denominator r.
struct GridSpec {
  std::size_t n = 1;
  unsigned r = 1;
};

/// |Delta(n, r)| = C(n + r - 1, r).
Integer grid_size(const GridSpec& spec);

/// Lexicographic successor iterator over I(n, r); constant memory. Starts at
/// (0, ..., 0, r) and ends after (r, 0, ..., 0). Single consumer.
class CompositionIterator {
 public:
  explicit CompositionIterator(const GridSpec& spec);
  /// Starts at the composition with the given lexicographic rank.
  CompositionIterator(const GridSpec& spec, std::uint64_t rank);

  const ExponentTuple& operator*() const { return cur_; }
  const ExponentTuple* operator->() const { return &cur_; }
  bool done() const { return done_; }

  /// Advances to the lexicographic successor; returns the index of the
  /// leftmost coordinate that changed (or n when iteration is finished).
  std::size_t advance();

 private:
  ExponentTuple cur_;
  bool done_ = false;
};

/// Lexicographic rank of alpha within I(n, |alpha|), and its inverse.
std::uint64_t rank(const ExponentTuple& alpha);
ExponentTuple unrank(const GridSpec& spec, std::uint64_t rank);

/// Calls fn(alpha) for each alpha in I(n, r), lexicographically.
template <class Fn>
void enumerate_grid(const GridSpec& spec, Fn&& fn) {
  for (CompositionIterator it(spec); !it.done(); it.advance()) fn(*it);
}

struct GridMinResult {
  unsigned r = 0;
  Rational value;
  /// Lexicographically least tied optimizers alpha (x = alpha / r), capped.
  std::vector<ExponentTuple> minimizers;
  /// Exact number of grid points attaining `value`.
  std::uint64_t tie_count = 0;
  std::uint64_t evaluations = 0;

  friend bool operator==(const GridMinResult&, const GridMinResult&) = default;
};

struct GridOptions {
  std::size_t tie_cap = 16;
  /// OpenMP thread count; 0 uses the runtime default.
  int threads = 0;
};

class GridTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// f_Delta(n,r) by exhaustive evaluation. The polynomial is scaled to integer
/// coefficients and evaluated at alpha (rather than alpha/r) in __int128 when
/// the magnitude bound allows, otherwise with GMP. Contiguous lexicographic
/// chunks are reduced in order, so the result does not depend on threads.
GridMinResult grid_minimize(const HomogeneousPolynomial& f, unsigned r, const GridOptions& opts = {});
GridMinResult grid_maximize(const HomogeneousPolynomial& f, unsigned r, const GridOptions& opts = {});

/// Serial reference: exact rational evaluation of f(alpha / r) at every point.
GridMinResult grid_minimize_reference(const HomogeneousPolynomial& f, unsigned r,
                                      std::size_t tie_cap = 16);

/// Certified interval [lo, hi] holding an unknown exact quantity.
struct Enclosure {
  Rational lo;
  Rational hi;

  bool contains(const Rational& q) const { return lo <= q && q <= hi; }
  Rational width() const { return hi - lo; }
  bool is_point() const { return lo == hi; }
};

struct RangeEnclosures {
  Enclosure min;  // holds f_min over the simplex
  Enclosure max;  // holds f_max over the simplex
};

/// f_min in [Bernstein lower bound after k elevations, f_Delta(n,r)];
/// f_max in [max over Delta(n,r), Bernstein upper bound].
RangeEnclosures range_enclosures(const HomogeneousPolynomial& f, unsigned r, unsigned elevation,
                                 const GridOptions& opts = {});

}  // namespace sgo::grid
