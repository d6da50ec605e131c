#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "gccaut/errors.hpp"
#include "gccaut/scalar.hpp"

using namespace gccaut;

TEST_CASE("rationals are kept in lowest terms with a positive denominator") {
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(6, 3).is_integer());
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(3, 4) * Rational(4, 3) == Rational(1));
  CHECK((Rational(1, 2) <=> Rational(2, 3)) == std::strong_ordering::less);
  CHECK(Rational(-3, 9).to_string() == "-1/3");
}

TEST_CASE("rational errors") {
  CHECK_THROWS_AS(Rational(1, 0), ArithmeticError);
  CHECK_THROWS_AS(Rational(1) / Rational(0), ArithmeticError);
  const Rational big(std::numeric_limits<std::int64_t>::max());
  CHECK_THROWS_AS(big * big, ArithmeticError);
}

TEST_CASE("golden ratio arithmetic is exact") {
  const Scalar g = Scalar::golden();
  CHECK(g * g == g + Scalar(1));
  CHECK(g * (g - Scalar(1)) == Scalar(1));
  CHECK((g - Scalar(2)).sign() == -1);
  CHECK((g - Scalar(Rational(3, 2))).sign() == 1);
  CHECK(Scalar(1) / g == g - Scalar(1));
  CHECK(g.to_string() == "1/2+1/2√5");
  CHECK(g.to_label() == "1/2+1/2√5");
  CHECK(Scalar(Rational(0), Rational(1), 1) == Scalar(1));  // √1 folds into the rational part
}

TEST_CASE("mixing quadratic fields is rejected") {
  const Scalar r2(Rational(0), Rational(1), 2);
  const Scalar r3(Rational(0), Rational(1), 3);
  CHECK_THROWS_AS(r2 + r3, ArithmeticError);
  CHECK_NOTHROW(r2 + Scalar(Rational(5, 7)));
  CHECK_THROWS_AS(Scalar(Rational(1), Rational(1), 0), ArithmeticError);
  CHECK_THROWS_AS(Scalar::golden() / Scalar(0), ArithmeticError);
}

TEST_CASE("ordering agrees with the real embedding") {
  // Test-only floating point: the oracle for the exact comparison.
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(-20, 20), den(1, 9);
  std::vector<Scalar> xs;
  for (int i = 0; i < 200; ++i)
    xs.emplace_back(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)), 5);
  auto real = [](const Scalar& s) {
    auto f = [](const Rational& r) { return static_cast<double>(r.num()) / static_cast<double>(r.den()); };
    return f(s.rational_part()) + f(s.radical_part()) * std::sqrt(5.0);
  };
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    const double d = real(xs[i]) - real(xs[i + 1]);
    const auto c = xs[i] <=> xs[i + 1];
    if (d < -1e-9) CHECK(c == std::strong_ordering::less);
    if (d > 1e-9) CHECK(c == std::strong_ordering::greater);
    if (std::abs(d) <= 1e-9) CHECK(xs[i] == xs[i + 1]);
  }
}

TEST_CASE("matrix rank by exact elimination") {
  const Scalar g = Scalar::golden();
  CHECK(matrix_rank({{1, 0}, {0, 1}}) == 2);
  CHECK(matrix_rank({{1, 2}, {2, 4}}) == 1);
  CHECK(matrix_rank({{g, 1}, {1, g - Scalar(1)}}) == 1);  // rows proportional by g
  CHECK(matrix_rank({{0, 0, 0}}) == 0);
}
