#include <cmath>
#include <complex>
#include <numbers>

#include "doctest.h"
#include "oracles/oracles.hpp"
#include "umbral/errors.hpp"
#include "umbral/special_functions.hpp"

using namespace umbral;
using std::numbers::pi;

namespace {

double rel(std::complex<double> a, std::complex<double> b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("umbral_exp examples") {
  for (Kind kind : kAllKinds) {
    for (Index m : {-5, 0, 9}) CHECK(umbral_exp({kind, 0.4}, 0.0, m) == std::complex<double>(1.0));
  }
  CHECK(umbral_exp({Kind::Right, 1.0}, 0.5, 2).real() == doctest::Approx(2.25).epsilon(1e-15));
  CHECK(umbral_exp({Kind::Symmetric, 1.0}, 0.6, 1).real() == doctest::Approx(1.7661903789690600942).epsilon(1e-15));
  CHECK(umbral_exp({Kind::Left, 1.0}, 0.5, 2).real() == doctest::Approx(4.0));
  CHECK_THROWS_AS(umbral_exp({Kind::Right, 1.0}, -1.0, -2), DomainError);

  const auto r = umbral_exp_series({Kind::Right, 1.0}, 0.5, -1, 1e-12);
  CHECK(r.status == SeriesStatus::Converged);
  CHECK(r.value.real() == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(umbral_exp({Kind::Right, 1.0}, 0.5, -1).real() == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("umbral_exp_series examples") {
  const auto cut = umbral_exp_series({Kind::Right, 1.0}, 0.5, 3, 1e-12);
  CHECK(cut.status == SeriesStatus::ExactCutoff);
  CHECK(cut.value.real() == doctest::Approx(3.375).epsilon(1e-15));

  const auto div = umbral_exp_series({Kind::Right, 1.0}, 1.5, -2, 1e-12);
  CHECK(div.status == SeriesStatus::Diverged);
  CHECK(exp_series_status({Kind::Right, 1.0}, 1.5, -2) == SeriesStatus::Diverged);

  for (Kind kind : kAllKinds) {
    const auto zero = umbral_exp_series({kind, 1.0}, 0.0, 5, 1e-12);
    CHECK(zero.status == SeriesStatus::ExactCutoff);
    CHECK(zero.value == std::complex<double>(1.0));
  }
}

TEST_CASE("series and closed form agree inside the disk") {
  for (Kind kind : kAllKinds) {
    for (double ks : {-0.9, -0.5, -0.2, 0.2, 0.5, 0.9}) {
      for (Index m = -20; m <= 20; ++m) {
        const Correspondence c{kind, 0.25};
        const double k = ks / c.sigma;
        const auto series = umbral_exp_series(c, k, m, 1e-13);
        CHECK(series.status != SeriesStatus::Diverged);
        CHECK(rel(series.value, umbral_exp(c, k, m)) <= 1e-10);
      }
    }
  }
}

TEST_CASE("series outside the disk reports Diverged") {
  for (Kind kind : kAllKinds) {
    for (double ks : {-1.5, -1.0, 1.0, 1.2}) {
      for (Index m : {-6, -1, 1, 6}) {
        const Correspondence c{kind, 1.0};
        if (basic_sequence_cutoff(kind, m)) continue;
        CHECK(umbral_exp_series(c, ks, m, 1e-12).status == SeriesStatus::Diverged);
      }
    }
  }
}

TEST_CASE("translation multiplicativity and the two-constant law") {
  for (Kind kind : kAllKinds) {
    for (double ks : {-0.6, 0.3, 0.8}) {
      for (Index m = -6; m <= 6; m += 3) {
        for (Index n = -5; n <= 5; n += 2) {
          const auto report = addition_law_check({kind, 1.0}, ks, 0.0, m, n);
          CHECK(report.translation_holds);
          CHECK(report.two_constant_holds);
          const auto e = umbral_exp({kind, 1.0}, ks, m + n);
          CHECK(report.translation_residual <= 1e-12 * std::abs(e));
        }
      }
    }
  }
  const auto exact = addition_law_check({Kind::Right, 1.0}, 0.5, 0.4, 2, 3);
  CHECK(exact.translation_residual == 0.0);

  const auto fail = addition_law_check({Kind::Right, 1.0}, 0.3, 0.4, 2, 1);
  CHECK_FALSE(fail.two_constant_holds);
  CHECK(fail.two_constant_residual == doctest::Approx(3.3124 - 2.89).epsilon(1e-12));
  CHECK_THROWS_AS(addition_law_check({Kind::Right, 1.0}, 1.3, 0.4, 2, 1), DomainError);
}

TEST_CASE("mirror identity exp+(k, m) = exp-(-k, -m)") {
  for (double ks : {-0.9, -0.4, 0.1, 0.7, 2.5}) {
    for (Index m = -15; m <= 15; ++m) {
      const auto a = umbral_exp({Kind::Right, 1.0}, ks, m);
      const auto b = umbral_exp({Kind::Left, 1.0}, -ks, -m);
      CHECK(std::abs(a - b) <= 1e-14 * std::abs(a));
    }
  }
}

TEST_CASE("umbral_trig examples") {
  for (Kind kind : kAllKinds) CHECK(umbral_trig({kind, 1.0}, 0.37, 0, Trig::Sin) == 0.0);
  CHECK(umbral_trig({Kind::Symmetric, 1.0}, std::sin(pi / 6), 3, Trig::Sin) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(umbral_trig({Kind::Right, 1.0}, 1.0, 2, Trig::Sin) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(umbral_trig({Kind::Symmetric, 1.0}, 0.0, 4, Trig::Cos) == 1.0);
  // cosh^2 - sinh^2 is not 1 off the continuum, but cosh +- sinh recovers E(+-k)
  const Correspondence c{Kind::Symmetric, 1.0};
  const double ch = umbral_trig(c, 0.4, 5, Trig::Cosh), sh = umbral_trig(c, 0.4, 5, Trig::Sinh);
  CHECK(ch + sh == doctest::Approx(umbral_exp(c, 0.4, 5).real()).epsilon(1e-14));
  CHECK_THROWS_AS(umbral_trig(c, 1.2, 3, Trig::Sin), DomainError);
  CHECK_THROWS_AS(umbral_trig(c, 1.0, 3, Trig::Sinh), DomainError);
  CHECK(parse_trig("cosh") == Trig::Cosh);
  CHECK_THROWS_AS(parse_trig("tan"), DomainError);
}

TEST_CASE("wavelength and momentum") {
  const auto s4 = wavelength_to_momentum({Kind::Symmetric, 0.5}, 4);
  CHECK(s4.minimal);
  CHECK(s4.k * 0.5 == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(s4.lambda == 2.0);
  const auto r8 = wavelength_to_momentum({Kind::Right, 1.0}, 8);
  CHECK(r8.minimal);
  CHECK(r8.k == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(wavelength_to_momentum({Kind::Symmetric, 1.0}, 12).k == doctest::Approx(0.5).epsilon(1e-15));
  CHECK_FALSE(wavelength_to_momentum({Kind::Symmetric, 1.0}, 12).minimal);
  CHECK_THROWS_AS(wavelength_to_momentum({Kind::Symmetric, 1.0}, 3.9), DomainError);
  CHECK_THROWS_AS(wavelength_to_momentum({Kind::Left, 1.0}, 7.5), DomainError);

  CHECK(momentum_to_wavelength({Kind::Symmetric, 0.3}, 1.0 / 0.3) == doctest::Approx(4 * 0.3).epsilon(1e-15));
  CHECK(momentum_to_wavelength({Kind::Right, 1.0}, 1.0) == doctest::Approx(8.0).epsilon(1e-15));
  CHECK(momentum_to_wavelength({Kind::Symmetric, 1.0}, 0.5) == doctest::Approx(12.0).epsilon(1e-14));
  CHECK_THROWS_AS(momentum_to_wavelength({Kind::Symmetric, 1.0}, 1.5), DomainError);
  CHECK_THROWS_AS(momentum_to_wavelength({Kind::Symmetric, 1.0}, 0.0), DomainError);

  for (Kind kind : kAllKinds) {
    for (double l : {minimum_wavelength_points(kind), 9.5, 12.0, 40.0, 1000.0}) {
      const Correspondence c{kind, 0.3};
      const auto spec = wavelength_to_momentum(c, l);
      CHECK(std::abs(momentum_to_wavelength(c, spec.k) / c.sigma - l) <= 1e-10 * l);
    }
  }
}

TEST_CASE("amplitude growth") {
  CHECK(amplitude_growth(8, 1) == doctest::Approx(16.0).epsilon(1e-14));
  CHECK(amplitude_growth(8, 2) == doctest::Approx(256.0).epsilon(1e-14));
  CHECK(amplitude_growth(33.3, 0) == 1.0);
  CHECK(amplitude_growth(100, 1) == doctest::Approx(1.2183799953837782465).epsilon(1e-14));
  CHECK_THROWS_AS(amplitude_growth(4, 1), DomainError);
}

TEST_CASE("symmetric sine is periodic and matches sin(2 pi m / l)") {
  for (double l : {6.0, 8.0, 12.0}) {
    const Correspondence c{Kind::Symmetric, 0.3};
    const double k = wavelength_to_momentum(c, l).k;
    for (Index m = -50; m <= 50; ++m) {
      const double s = umbral_trig(c, k, m, Trig::Sin);
      CHECK(std::abs(umbral_trig(c, k, m + static_cast<Index>(l), Trig::Sin) - s) <= 1e-10);
      CHECK(std::abs(s - std::sin(2 * pi * static_cast<double>(m) / l)) <= 1e-10);
    }
  }
}

TEST_CASE("right sine: periodic zeros and the amplitude envelope") {
  for (double l : {8.0, 12.0}) {
    const Correspondence c{Kind::Right, 0.3};
    const double k = wavelength_to_momentum(c, l).k;
    const auto period = static_cast<Index>(l);
    const double a1 = amplitude_growth(l, 1);
    for (Index m = -20; m <= 20; ++m) {
      const double s = umbral_trig(c, k, m, Trig::Sin);
      const bool zero_expected = m % (period / 2) == 0;
      if (zero_expected) {
        CHECK(std::abs(s) <= 1e-12 * std::pow(a1, std::abs(static_cast<double>(m)) / l + 1));
      } else {
        const double envelope = std::pow(std::cos(2 * pi / l), -static_cast<double>(m));
        CHECK(std::abs(s) > 0.4 * envelope);
      }
      const double shifted = umbral_trig(c, k, m + period, Trig::Sin);
      CHECK(std::abs(shifted - a1 * s) <= 1e-10 * std::max(1.0, std::abs(shifted)));
    }
  }
}

TEST_CASE("continuum limit of the exponential") {
  const std::vector<double> sigmas{1.0 / 10, 1.0 / 20, 1.0 / 40};
  for (Kind kind : kAllKinds) {
    for (double k : {1.0, -0.7}) {
      std::vector<double> errors;
      for (double sigma : sigmas) {
        const auto m = static_cast<Index>(std::llround(1.0 / sigma));
        errors.push_back(std::abs(umbral_exp({kind, sigma}, k, m).real() - std::exp(k)));
      }
      CHECK(errors[1] < errors[0]);
      CHECK(errors[2] < errors[1]);
      const double expected = kind == Kind::Symmetric ? 2.0 : 1.0;
      CHECK(std::abs(oracle::log_log_slope(sigmas, errors) - expected) <= 0.2);
    }
  }
}

TEST_CASE("tabulate_exp tags each sample") {
  const auto table = tabulate_exp({Kind::Right, 0.2}, 1.0, -10, 10);
  CHECK(table.size() == 21);
  CHECK(table.first == -10);
  CHECK(table.last() == 10);
  for (Index m = -10; m <= 10; ++m) {
    CHECK(std::abs(table.at(m).real() - std::pow(1.2, static_cast<double>(m))) <= 1e-14 * std::pow(1.2, double(m)));
    CHECK(table.status[static_cast<std::size_t>(m + 10)] ==
          (m >= 0 ? SeriesStatus::ExactCutoff : SeriesStatus::Converged));
  }
  CHECK_THROWS_AS(table.at(11), DomainError);
}
