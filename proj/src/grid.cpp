#include "sgo/grid.hpp"

#include <omp.h>

#include <algorithm>
#include <numeric>
#include <optional>

#include "sgo/combin.hpp"

namespace sgo::grid {

Integer grid_size(const GridSpec& spec) {
  return combin::binomial(static_cast<long>(spec.n + spec.r) - 1, static_cast<long>(spec.r));
}

namespace {

// Number of compositions of s into t >= 1 parts.
Integer count_compositions(unsigned s, std::size_t t) {
  return combin::binomial(static_cast<long>(s + t) - 1, static_cast<long>(t) - 1);
}

std::uint64_t to_u64(const Integer& z) {
  if (z < 0 || mpz_sizeinbase(z.get_mpz_t(), 2) > 64)
    throw GridTooLarge("grid size exceeds 64-bit range");
  std::uint64_t v = 0;
  mpz_export(&v, nullptr, -1, sizeof v, 0, 0, z.get_mpz_t());
  return v;
}

void check_spec(const GridSpec& spec) {
  if (spec.n == 0) throw std::invalid_argument("grid needs n >= 1");
  if (spec.r == 0) throw std::invalid_argument("grid needs r >= 1");
}

}  // namespace

CompositionIterator::CompositionIterator(const GridSpec& spec) : cur_(spec.n) {
  check_spec(spec);
  cur_[spec.n - 1] = spec.r;
}

CompositionIterator::CompositionIterator(const GridSpec& spec, std::uint64_t rank)
    : cur_(unrank(spec, rank)) {}

std::size_t CompositionIterator::advance() {
  const std::size_t n = cur_.size();
  unsigned suffix = 0;
  for (std::size_t j = n - 1; j-- > 0;) {
    suffix += cur_[j + 1];
    if (suffix > 0) {
      ++cur_[j];
      for (std::size_t i = j + 1; i + 1 < n; ++i) cur_[i] = 0;
      cur_[n - 1] = suffix - 1;
      return j;
    }
  }
  done_ = true;
  return n;
}

std::uint64_t rank(const ExponentTuple& alpha) {
  const std::size_t n = alpha.size();
  if (n == 0) throw std::invalid_argument("rank of empty tuple");
  unsigned left = alpha.degree();
  Integer r = 0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (unsigned v = 0; v < alpha[i]; ++v) r += count_compositions(left - v, n - i - 1);
    left -= alpha[i];
  }
  return to_u64(r);
}

ExponentTuple unrank(const GridSpec& spec, std::uint64_t rank) {
  check_spec(spec);
  const std::size_t n = spec.n;
  ExponentTuple alpha(n);
  Integer idx(std::to_string(rank));
  if (idx >= grid_size(spec)) throw std::out_of_range("composition rank out of range");
  unsigned left = spec.r;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    unsigned v = 0;
    for (;; ++v) {
      Integer cnt = count_compositions(left - v, n - i - 1);
      if (idx < cnt) break;
      idx -= cnt;
    }
    alpha[i] = v;
    left -= v;
  }
  alpha[n - 1] = left;
  return alpha;
}

namespace {

// Running optimum over a lexicographic stream of points.
template <class Value>
struct Reduction {
  std::optional<Value> best;
  std::uint64_t ties = 0;
  std::vector<ExponentTuple> argmin;

  void offer(const Value& v, const ExponentTuple& alpha, std::size_t cap) {
    if (!best || v < *best) {
      best = v;
      ties = 1;
      argmin.assign(1, alpha);
      if (cap == 0) argmin.clear();
    } else if (v == *best) {
      ++ties;
      if (argmin.size() < cap) argmin.push_back(alpha);
    }
  }

  // `later` covers lexicographically later points.
  void merge(Reduction&& later, std::size_t cap) {
    if (!later.best) return;
    if (!best || *later.best < *best) {
      *this = std::move(later);
    } else if (*later.best == *best) {
      ties += later.ties;
      for (auto& a : later.argmin) {
        if (argmin.size() >= cap) break;
        argmin.push_back(std::move(a));
      }
    }
  }
};

struct Monomial {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> factors;  // (variable, power)
};

// f scaled by the lcm L of its coefficient denominators: f(alpha/r) = F(alpha) / (L r^d).
struct IntegerForm {
  std::vector<Monomial> monomials;
  std::vector<Integer> coeffs;
  Integer scale;  // L
  Integer abs_sum;
};

IntegerForm integer_form(const HomogeneousPolynomial& f) {
  IntegerForm form;
  form.scale = 1;
  for (const auto& [alpha, c] : f.terms()) mpz_lcm(form.scale.get_mpz_t(), form.scale.get_mpz_t(), c.get_den().get_mpz_t());
  form.abs_sum = 0;
  for (const auto& [alpha, c] : f.terms()) {
    Monomial m;
    for (std::size_t i = 0; i < alpha.size(); ++i)
      if (alpha[i] > 0) m.factors.emplace_back(static_cast<std::uint32_t>(i), alpha[i]);
    form.monomials.push_back(std::move(m));
    Integer ci = c.get_num() * (form.scale / c.get_den());
    form.abs_sum += abs(ci);
    form.coeffs.push_back(std::move(ci));
  }
  return form;
}

using i128 = __int128;

i128 to_i128(const Integer& z) {
  Integer a = abs(z);
  unsigned __int128 mag = 0;
  std::uint64_t words[2] = {0, 0};
  std::size_t count = 0;
  mpz_export(words, &count, -1, sizeof(std::uint64_t), 0, 0, a.get_mpz_t());
  mag = (static_cast<unsigned __int128>(words[1]) << 64) | words[0];
  return z < 0 ? -static_cast<i128>(mag) : static_cast<i128>(mag);
}

Integer from_i128(i128 v) {
  const bool neg = v < 0;
  unsigned __int128 mag = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
  std::uint64_t words[2] = {static_cast<std::uint64_t>(mag), static_cast<std::uint64_t>(mag >> 64)};
  Integer z;
  mpz_import(z.get_mpz_t(), 2, -1, sizeof(std::uint64_t), 0, 0, words);
  return neg ? Integer(-z) : z;
}

template <class Value>
class Kernel {
 public:
  Kernel(const IntegerForm& form, std::size_t n, unsigned d, Value (*convert)(const Integer&))
      : form_(form), n_(n), d_(d) {
    for (const auto& c : form.coeffs) coeffs_.push_back(convert(c));
  }

  Reduction<Value> run(const GridSpec& spec, std::uint64_t first, std::uint64_t count,
                       std::size_t cap) const {
    Reduction<Value> red;
    if (count == 0) return red;
    std::vector<Value> pw(n_ * (d_ + 1));
    CompositionIterator it(spec, first);
    std::size_t dirty = 0;
    for (std::uint64_t k = 0; k < count; ++k) {
      const ExponentTuple& alpha = *it;
      // Only coordinates from the leftmost changed index onward need new powers.
      for (std::size_t i = dirty; i < n_; ++i) {
        Value* row = &pw[i * (d_ + 1)];
        row[0] = 1;
        for (unsigned e = 1; e <= d_; ++e) row[e] = row[e - 1] * static_cast<long>(alpha[i]);
      }
      Value v = 0;
      for (std::size_t t = 0; t < coeffs_.size(); ++t) {
        Value term = coeffs_[t];
        for (const auto& [var, pow] : form_.monomials[t].factors) term *= pw[var * (d_ + 1) + pow];
        v += term;
      }
      red.offer(v, alpha, cap);
      dirty = it.advance();
    }
    return red;
  }

 private:
  const IntegerForm& form_;
  std::size_t n_;
  unsigned d_;
  std::vector<Value> coeffs_;
};

template <class Value>
Reduction<Value> reduce_parallel(const Kernel<Value>& kernel, const GridSpec& spec,
                                 std::uint64_t total, const GridOptions& opts) {
  const int threads = opts.threads > 0 ? opts.threads : omp_get_max_threads();
  // Chunk count depends only on the grid size, never on the thread count.
  const std::uint64_t target = 1u << 14;
  std::uint64_t chunks = std::clamp<std::uint64_t>(total / target, 1, 4096);
  std::vector<Reduction<Value>> partial(chunks);

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::int64_t c = 0; c < static_cast<std::int64_t>(chunks); ++c) {
    const auto uc = static_cast<std::uint64_t>(c);
    const auto lo = static_cast<std::uint64_t>(static_cast<unsigned __int128>(total) * uc / chunks);
    const auto hi = static_cast<std::uint64_t>(static_cast<unsigned __int128>(total) * (uc + 1) / chunks);
    partial[uc] = kernel.run(spec, lo, hi - lo, opts.tie_cap);
  }

  Reduction<Value> red;
  for (auto& p : partial) red.merge(std::move(p), opts.tie_cap);
  return red;
}

}  // namespace

GridMinResult grid_minimize(const HomogeneousPolynomial& f, unsigned r, const GridOptions& opts) {
  const GridSpec spec{f.variables(), r};
  check_spec(spec);
  const std::uint64_t total = to_u64(grid_size(spec));
  const unsigned d = f.degree();
  const IntegerForm form = integer_form(f);

  GridMinResult out;
  out.r = r;
  out.evaluations = total;
  const Integer denom = form.scale * pow_int(Integer(r), d);

  auto finish = [&](auto&& red, auto to_integer) {
    out.value = Rational(to_integer(*red.best), denom);
    out.value.canonicalize();
    out.tie_count = red.ties;
    out.minimizers = std::move(red.argmin);
  };

  // |F(alpha)| <= sum |c_beta| * r^d.
  const Integer bound = form.abs_sum * pow_int(Integer(r), d);
  if (mpz_sizeinbase(bound.get_mpz_t(), 2) <= 125) {
    Kernel<i128> kernel(form, spec.n, d, &to_i128);
    finish(reduce_parallel(kernel, spec, total, opts), &from_i128);
  } else {
    Kernel<Integer> kernel(form, spec.n, d, [](const Integer& z) { return z; });
    finish(reduce_parallel(kernel, spec, total, opts), [](const Integer& z) { return z; });
  }
  return out;
}

GridMinResult grid_maximize(const HomogeneousPolynomial& f, unsigned r, const GridOptions& opts) {
  GridMinResult res = grid_minimize(-f, r, opts);
  res.value = -res.value;
  return res;
}

GridMinResult grid_minimize_reference(const HomogeneousPolynomial& f, unsigned r, std::size_t tie_cap) {
  const GridSpec spec{f.variables(), r};
  check_spec(spec);
  Reduction<Rational> red;
  std::uint64_t visited = 0;
  enumerate_grid(spec, [&](const ExponentTuple& alpha) {
    red.offer(f.evaluate_grid(alpha, r), alpha, tie_cap);
    ++visited;
  });
  GridMinResult out;
  out.r = r;
  out.value = *red.best;
  out.tie_count = red.ties;
  out.minimizers = std::move(red.argmin);
  out.evaluations = visited;
  return out;
}

RangeEnclosures range_enclosures(const HomogeneousPolynomial& f, unsigned r, unsigned elevation,
                                 const GridOptions& opts) {
  const BernsteinBounds bern = bernstein_enclosure(f, elevation);
  RangeEnclosures out;
  out.min = {bern.lower, grid_minimize(f, r, opts).value};
  out.max = {grid_maximize(f, r, opts).value, bern.upper};
  return out;
}

}  // namespace sgo::grid
