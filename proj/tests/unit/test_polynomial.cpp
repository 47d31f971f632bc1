#include "doctest.h"
#include "umbral/errors.hpp"
#include "umbral/polynomial.hpp"

using umbral::Polynomial;
using umbral::Rational;

TEST_CASE("zero polynomial has degree -1 and trims leading zeros") {
  CHECK(Polynomial().degree() == -1);
  CHECK(Polynomial({Rational(0), Rational(0)}).is_zero());
  CHECK(Polynomial({Rational(1), Rational(2), Rational(0)}).degree() == 1);
  CHECK((Polynomial::monomial(3) - Polynomial::monomial(3)).degree() == -1);
}

TEST_CASE("exact evaluation and arithmetic") {
  const Polynomial p({Rational(-1), Rational(0), Rational(1)});  // x^2 - 1
  CHECK(p(Rational(1, 3)) == Rational(-8, 9));
  CHECK(p.evaluate(3.0) == 8.0);
  CHECK(p * Polynomial({Rational(1), Rational(1)}) == Polynomial({Rational(-1), Rational(-1), Rational(1), Rational(1)}));
  CHECK(p.times_x() == Polynomial({Rational(0), Rational(-1), Rational(0), Rational(1)}));
  CHECK(p.to_string() == "x^2 - 1");
  CHECK(Polynomial({Rational(1, 8), Rational(3, 4), Rational(3, 2), Rational(1)}).to_string() ==
        "x^3 + 3/2*x^2 + 3/4*x + 1/8");
}

TEST_CASE("rational parsing") {
  CHECK(umbral::parse_rational("1/3") == Rational(1, 3));
  CHECK(umbral::parse_rational("0.2") == Rational(1, 5));
  CHECK(umbral::parse_rational("-1.5e-2") == Rational(-3, 200));
  CHECK(umbral::parse_rational("7") == 7);
  CHECK_THROWS_AS(umbral::parse_rational("abc"), umbral::DomainError);
  CHECK_THROWS_AS(umbral::parse_rational("1/0"), umbral::DomainError);
}
