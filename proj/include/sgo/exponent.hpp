#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <string>
#include <vector>

namespace sgo {

/// A multi-index alpha in N^n. Ordered lexicographically.
class ExponentTuple {
 public:
  ExponentTuple() = default;
  explicit ExponentTuple(std::size_t n) : e_(n, 0) {}
  ExponentTuple(std::initializer_list<unsigned> il) : e_(il) {}
  explicit ExponentTuple(std::vector<unsigned> v) : e_(std::move(v)) {}

  static ExponentTuple unit(std::size_t n, std::size_t i, unsigned power = 1) {
    ExponentTuple a(n);
    a[i] = power;
    return a;
  }

  std::size_t size() const { return e_.size(); }
  unsigned degree() const { return std::accumulate(e_.begin(), e_.end(), 0u); }

  unsigned& operator[](std::size_t i) { return e_[i]; }
  unsigned operator[](std::size_t i) const { return e_[i]; }

  auto begin() const { return e_.begin(); }
  auto end() const { return e_.end(); }
  const std::vector<unsigned>& values() const { return e_; }

  /// Componentwise alpha <= beta.
  bool dominated_by(const ExponentTuple& other) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > other.e_[i]) return false;
    return true;
  }

  bool square_free() const {
    for (unsigned v : e_)
      if (v > 1) return false;
    return true;
  }

  std::string to_string(char sep = ',') const {
    std::string s;
    for (std::size_t i = 0; i < e_.size(); ++i) {
      if (i) s += sep;
      s += std::to_string(e_[i]);
    }
    return s;
  }

  friend auto operator<=>(const ExponentTuple&, const ExponentTuple&) = default;
  friend bool operator==(const ExponentTuple&, const ExponentTuple&) = default;

 private:
  std::vector<unsigned> e_;
};

ExponentTuple operator+(const ExponentTuple& a, const ExponentTuple& b);

/// All alpha in I(n,d) in ascending lexicographic order. Materializes the
/// set; use grid::CompositionIterator for large d.
std::vector<ExponentTuple> compositions(std::size_t n, unsigned d);

/// All alpha with alpha <= beta componentwise, lexicographic.
std::vector<ExponentTuple> dominated(const ExponentTuple& beta);

}  // namespace sgo
