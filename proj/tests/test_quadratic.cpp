#include <doctest.h>

#include <cmath>
#include <random>

#include "ulrich_lab/error.hpp"
#include "ulrich_lab/quadratic.hpp"

using namespace ulrich_lab;

namespace {

QuadraticNumber q(long a, long b, long d) { return QuadraticNumber(a, b, d); }

}  // namespace

TEST_CASE("field arithmetic") {
  const auto root5 = QuadraticNumber::sqrt_of(5);
  CHECK(root5 * root5 == QuadraticNumber::rational(5, 5));
  CHECK((q(1, 1, 5) * q(1, -1, 5)) == QuadraticNumber::rational(-4, 5));
  CHECK(q(3, 2, 5).norm() == 9 - 20);
  CHECK(q(3, 2, 5).conjugate() == q(3, -2, 5));
  CHECK((q(3, 2, 5) + q(1, -2, 5)).is_rational());
  CHECK(q(3, 2, 5) - q(3, 2, 5) == q(0, 0, 5));

  // golden ratio phi satisfies phi^2 = phi + 1
  const QuadraticNumber phi(Rational(1, 2), Rational(1, 2), 5);
  CHECK(phi * phi == phi + QuadraticNumber::rational(1, 5));
  CHECK(phi.inverse() == phi - QuadraticNumber::rational(1, 5));
  CHECK(phi.pow(-3) * phi.pow(3) == QuadraticNumber::rational(1, 5));
  CHECK(phi.pow(0) == QuadraticNumber::rational(1, 5));
}

TEST_CASE("pow agrees with repeated products") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coef(-9, 9), rad(2, 40), ex(0, 12);
  for (int i = 0; i < 300; ++i) {
    QuadraticNumber x(Rational(coef(rng), 1 + std::abs(coef(rng))), coef(rng), rad(rng));
    const int n = ex(rng);
    QuadraticNumber acc = QuadraticNumber::rational(1, x.radicand());
    for (int j = 0; j < n; ++j) acc *= x;
    CHECK(x.pow(n) == acc);
    if (x.norm() != 0) {
      CHECK(x * x.inverse() == QuadraticNumber::rational(1, x.radicand()));
      CHECK(x.pow(-n) * acc == QuadraticNumber::rational(1, x.radicand()));
    }
  }
}

TEST_CASE("display and errors") {
  CHECK(q(1, 1, 5).to_double() == doctest::Approx(1 + std::sqrt(5.0)));
  CHECK_THROWS_AS(QuadraticNumber(1, 1, 0), Error);
  CHECK_THROWS_AS(q(0, 0, 5).inverse(), Error);
  CHECK_THROWS_AS(q(1, 1, 5) + q(1, 1, 12), Error);
  // 1 - sqrt(1) is a zero divisor when D is a perfect square
  CHECK_THROWS_AS(q(1, 1, 1).inverse(), Error);
}
