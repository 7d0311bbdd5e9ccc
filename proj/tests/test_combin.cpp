#include <doctest.h>

#include <omp.h>

#include <stdexcept>

#include "oracle.hpp"
#include "sgo/combin.hpp"

using namespace sgo;
using namespace sgo::combin;

TEST_CASE("stirling2 small values and edge cases") {
  CHECK(stirling2(3, 2) == 3);
  CHECK(stirling2(4, 2) == 7);
  for (unsigned d = 0; d <= 12; ++d) CHECK(stirling2(d, d) == 1);
  CHECK(stirling2(0, 0) == 1);
  CHECK(stirling2(5, 0) == 0);
  CHECK(stirling2(2, 5) == 0);
  CHECK(stirling2(10, 3) == 9330);
}

TEST_CASE("stirling2 matches set-partition enumeration") {
  for (unsigned a = 0; a <= 9; ++a)
    for (unsigned b = 0; b <= a + 1; ++b) CHECK_MESSAGE(stirling2(a, b) == oracle::stirling2(a, b), a << "," << b);
}

TEST_CASE("stirling2 is consistent under concurrent first use") {
  std::vector<Integer> par(40 * 40);
#pragma omp parallel for num_threads(8)
  for (int i = 0; i < 40 * 40; ++i) par[static_cast<std::size_t>(i)] = stirling2(static_cast<unsigned>(i / 40) + 20, static_cast<unsigned>(i % 40));
  for (unsigned i = 0; i < 40 * 40; ++i) {
    const unsigned a = i / 40 + 20, b = i % 40;
    // recurrence check against the serial table
    if (a > 0 && b > 0) CHECK(par[i] == b * stirling2(a - 1, b) + stirling2(a - 1, b - 1));
  }
}

TEST_CASE("falling factorials") {
  CHECK(falling(5L, 3) == 60);
  CHECK(falling(2L, 3) == 0);
  for (long r = 0; r < 10; ++r) CHECK(falling(r, 1) == r);
  CHECK(falling(7L, 0) == 1);
  CHECK(falling(-2L, 2) == 6);
  CHECK(falling(Rational(1, 2), 3) == oracle::falling(Rational(1, 2), 3));
  CHECK(falling(Rational(1, 2), 3) == Rational(3, 8));
  const std::vector<Integer> xs{5, 3};
  CHECK(falling(xs, ExponentTuple{2, 2}) == 20 * 6);
}

TEST_CASE("binomial and multinomial") {
  CHECK(binomial(6, 4) == 15);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(5, -1) == 0);
  for (unsigned n = 0; n <= 20; ++n)
    for (unsigned k = 0; k <= n; ++k) CHECK(binomial(n, k) == oracle::binomial(n, k));
  CHECK(multinomial(3, ExponentTuple{1, 1, 1}) == 6);
  CHECK(multinomial(2, ExponentTuple{2, 0}) == 1);
  CHECK(multinomial(4, ExponentTuple{2, 1, 1}) == 12);
  CHECK(multinomial(0, ExponentTuple{0, 0}) == 1);
  CHECK_THROWS_AS(multinomial(3, ExponentTuple{1, 1}), std::invalid_argument);
  CHECK(factorial(ExponentTuple{3, 2, 0}) == 12);
  CHECK(factorial(0u) == 1);
  CHECK(factorial(10u) == 3628800);
}

TEST_CASE("compositions and dominated sets") {
  auto c = compositions(2, 2);
  REQUIRE(c.size() == 3);
  CHECK(c[0] == ExponentTuple{0, 2});
  CHECK(c[1] == ExponentTuple{1, 1});
  CHECK(c[2] == ExponentTuple{2, 0});
  CHECK(compositions(3, 4).size() == 15);
  CHECK(compositions(1, 5) == std::vector<ExponentTuple>{ExponentTuple{5}});
  for (std::size_t n = 1; n <= 4; ++n)
    for (unsigned d = 0; d <= 6; ++d) {
      const auto cs = compositions(n, d);
      CHECK(cs.size() == oracle::binomial(static_cast<unsigned>(n) + d - 1, d).get_ui());
      CHECK(std::is_sorted(cs.begin(), cs.end()));
    }
  const ExponentTuple beta{2, 0, 1};
  const auto dom = dominated(beta);
  CHECK(dom.size() == 6);
  CHECK(std::is_sorted(dom.begin(), dom.end()));
  for (const auto& a : dom) CHECK(a.dominated_by(beta));
}

TEST_CASE("falling_poly_coeffs") {
  auto c2 = falling_poly_coeffs(2);
  CHECK(c2.a == std::vector<Integer>{1});
  CHECK(c2.c_d == 1);
  auto c3 = falling_poly_coeffs(3);
  CHECK(c3.a == std::vector<Integer>{2, 3});
  CHECK(c3.c_d == 10);
  auto c4 = falling_poly_coeffs(4);
  CHECK(c4.a == std::vector<Integer>{6, 11, 6});
  CHECK(c4.c_d == 69);
  CHECK(falling_poly_coeffs(5).c_d == 476);
  CHECK_THROWS_AS(falling_poly_coeffs(1), std::invalid_argument);
  CHECK_THROWS_AS(falling_poly_coeffs(0), std::invalid_argument);
}

TEST_CASE("falling_poly_coeffs reconstructs the product and vanishes at 1..d-1") {
  for (unsigned d = 2; d <= 12; ++d) {
    const auto fc = falling_poly_coeffs(d);
    const auto ref = oracle::falling_product_coeffs(d);
    REQUIRE(fc.a.size() == d - 1);
    Integer sum = 0;
    for (unsigned i = 0; i + 1 < d; ++i) {
      CHECK(fc.a[i] > 0);
      const long sign = ((d - 1 - i) % 2 == 0) ? 1 : -1;
      CHECK(Integer(sign) * fc.a[i] == ref[i]);
      sum += fc.a[i];
    }
    CHECK(fc.c_d == (d - 1) * sum);
    for (unsigned x = 1; x < d; ++x) CHECK(fc.evaluate(x) == 0);
    CHECK(fc.evaluate(d) == oracle::falling(Rational(d - 1), d - 1));
  }
}
