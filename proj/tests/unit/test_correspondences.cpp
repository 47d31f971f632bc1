#include <cmath>

#include "doctest.h"
#include "oracles/oracles.hpp"
#include "umbral/basic_sequence.hpp"
#include "umbral/errors.hpp"
#include "umbral/operator_algebra.hpp"

using namespace umbral;

TEST_CASE("basic_polynomial coefficient forms") {
  for (Kind kind : kAllKinds) CHECK(basic_polynomial({kind, 1}, 0) == Polynomial::constant(1));
  CHECK(basic_polynomial({Kind::Right, 1}, 2) == Polynomial({Rational(0), Rational(-1), Rational(1)}));
  CHECK(basic_polynomial({Kind::Symmetric, 1}, 3) == Polynomial({Rational(0), Rational(-1), Rational(0), Rational(1)}));
  CHECK_THROWS_AS(basic_polynomial({Kind::Right, 1}, -1), DomainError);
}

TEST_CASE("basic_polynomial matches the product formulas") {
  for (Kind kind : kAllKinds) {
    for (const Rational& sigma : {Rational(1), Rational(1, 3), Rational(5, 2)}) {
      for (int n = 0; n <= 14; ++n) {
        CHECK(basic_polynomial({kind, sigma}, n) == oracle::direct_product_polynomial(kind, n, sigma));
      }
    }
  }
}

TEST_CASE("basic_polynomial_value branches") {
  const Correspondence right{Kind::Right, 1.0}, sym{Kind::Symmetric, 1.0};
  CHECK(basic_polynomial_value(right, 2, 3) == 6.0);
  CHECK(basic_polynomial_value(right, 2, 1) == 0.0);
  CHECK(basic_polynomial_value(right, 2, -1) == 2.0);
  CHECK(basic_polynomial_value(sym, 3, 1) == 0.0);
  CHECK(basic_polynomial_value(sym, 4, 1) == -3.0);
  // third symmetric branch at negative m keeps the parity of n
  CHECK(basic_polynomial_value(sym, 2, -1) == 1.0);
  CHECK(basic_polynomial_value(sym, 3, -2) == -6.0);
  CHECK(basic_polynomial_value(ExactCorrespondence{Kind::Left, Rational(1, 3)}, 3, 2) == Rational(2 * 3 * 4, 27));
}

TEST_CASE("lowering property and vanishing at the origin, n <= 32") {
  for (Kind kind : kAllKinds) {
    for (const Rational& sigma : {Rational(1), Rational(1, 3)}) {
      const ExactCorrespondence c{kind, sigma};
      const DeltaOperator delta = delta_of(c);
      Polynomial previous = basic_polynomial(c, 0);
      for (int n = 1; n <= 32; ++n) {
        const Polynomial current = basic_polynomial(c, n);
        CHECK(apply_delta(delta, current) == Rational(n) * previous);
        CHECK(current(0) == 0);
        CHECK(basic_polynomial_value(c, n, 0) == 0);
        previous = current;
      }
    }
  }
}

TEST_CASE("closed form agrees with coefficient form and direct product") {
  for (Kind kind : kAllKinds) {
    const ExactCorrespondence exact{kind, Rational(1, 3)};
    const Correspondence fl{kind, 0.3};
    for (int n = 0; n <= 20; ++n) {
      const Polynomial p = basic_polynomial(exact, n);
      for (Index m = -20; m <= 20; ++m) {
        const Rational closed = basic_polynomial_value(exact, n, m);
        CHECK(closed == p(Rational(m) * exact.sigma));
        CHECK(closed == oracle::direct_product_value(kind, n, m, exact.sigma));
        const double expected = oracle::direct_product_value(kind, n, m, fl.sigma);
        const double got = basic_polynomial_value(fl, n, m);
        CHECK(std::abs(got - expected) <= 1e-12 * std::abs(expected));
      }
    }
  }
}

TEST_CASE("mirror symmetry and symmetric parity") {
  for (int n = 0; n <= 20; ++n) {
    const Rational sign = n % 2 == 0 ? 1 : -1;
    for (Index m = -20; m <= 20; ++m) {
      CHECK(basic_polynomial_value(ExactCorrespondence{Kind::Left, 1}, n, m) ==
            sign * basic_polynomial_value(ExactCorrespondence{Kind::Right, 1}, n, -m));
      CHECK(basic_polynomial_value(ExactCorrespondence{Kind::Symmetric, 1}, n, -m) ==
            sign * basic_polynomial_value(ExactCorrespondence{Kind::Symmetric, 1}, n, m));
    }
  }
}

TEST_CASE("zeros_of_basic_polynomial") {
  CHECK(zeros_of_basic_polynomial(Kind::Right, 3) == std::vector<Index>{0, 1, 2});
  CHECK(zeros_of_basic_polynomial(Kind::Left, 3) == std::vector<Index>{-2, -1, 0});
  CHECK(zeros_of_basic_polynomial(Kind::Symmetric, 3) == std::vector<Index>{-1, 0, 1});
  CHECK(zeros_of_basic_polynomial(Kind::Symmetric, 4) == std::vector<Index>{-2, 0, 2});
  CHECK_THROWS_AS(zeros_of_basic_polynomial(Kind::Right, 0), DomainError);

  // every listed zero is a zero and every other point in (-2n, 2n) is not
  for (Kind kind : kAllKinds) {
    for (int n = 1; n <= 12; ++n) {
      const auto zeros = zeros_of_basic_polynomial(kind, n);
      for (Index m = -2 * n; m <= 2 * n; ++m) {
        const bool listed = std::find(zeros.begin(), zeros.end(), m) != zeros.end();
        CHECK(listed == (oracle::direct_product_value(kind, n, m, Rational(1)) == 0));
      }
    }
  }
}

TEST_CASE("overflow detection and the log-space path") {
  const Correspondence right{Kind::Right, 1.0};
  CHECK_THROWS_AS(basic_polynomial_value(right, 200, 1000), OverflowError);
  const SignedLog big = basic_polynomial_log_value(right, 200, 1000);
  CHECK(big.sign == 1);
  // log(1000! / 800!)
  CHECK(big.log_abs == doctest::Approx(std::lgamma(1001.0) - std::lgamma(801.0)).epsilon(1e-12));

  const Correspondence sym{Kind::Symmetric, 0.5};
  for (int n = 0; n <= 30; ++n) {
    for (Index m = -30; m <= 30; ++m) {
      const double v = basic_polynomial_value(sym, n, m);
      const SignedLog l = basic_polynomial_log_value(sym, n, m);
      if (v == 0.0) {
        CHECK(l.sign == 0);
      } else {
        CHECK(l.value() == doctest::Approx(v).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("continuum limit of the basic polynomials at x = 1") {
  const std::vector<double> sigmas{1.0 / 128, 1.0 / 256, 1.0 / 512, 1.0 / 1024};
  for (Kind kind : kAllKinds) {
    const int n_min = kind == Kind::Symmetric ? 3 : 2;  // lower orders are exact
    const double expected_order = kind == Kind::Symmetric ? 2.0 : 1.0;
    for (int n = n_min; n <= 6; ++n) {
      std::vector<double> errors;
      for (double sigma : sigmas) {
        const auto m = static_cast<Index>(std::llround(1.0 / sigma));
        errors.push_back(std::abs(basic_polynomial_value(Correspondence{kind, sigma}, n, m) - 1.0));
      }
      for (std::size_t i = 1; i < errors.size(); ++i) CHECK(errors[i] < errors[i - 1]);
      CHECK(oracle::log_log_slope(sigmas, errors) == doctest::Approx(expected_order).epsilon(0.2 / expected_order));
    }
  }
}
