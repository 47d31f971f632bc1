#include "umbral/invariants.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "umbral/basic_sequence.hpp"
#include "umbral/operator_algebra.hpp"
#include "umbral/schrodinger.hpp"
#include "umbral/special_functions.hpp"

namespace umbral {
namespace {

CheckResult check(std::string name, bool passed, const std::string& detail) {
  return {std::move(name), passed, detail};
}

CheckResult heisenberg() {
  Rational worst = 0;
  for (Kind kind : kAllKinds) {
    for (const Rational& sigma : {Rational(1), Rational(1, 3)}) {
      worst = std::max(worst, commutator_residual({kind, sigma}, 16));
    }
  }
  return check("[Delta, xi] x^n == x^n (n <= 16, sigma in {1, 1/3})", worst == 0, "max residual " + worst.str());
}

CheckResult lowering() {
  bool ok = true;
  for (Kind kind : kAllKinds) {
    const ExactCorrespondence c{kind, Rational(1, 3)};
    const DeltaOperator delta = delta_of(c);
    Polynomial previous = basic_polynomial(c, 0);
    for (int n = 1; n <= 16 && ok; ++n) {
      Polynomial current = basic_polynomial(c, n);
      ok = apply_delta(delta, current) == Rational(n) * previous && current(0) == 0;
      previous = std::move(current);
    }
  }
  return check("Delta x^(n) == n x^(n-1), x^(n)(0) == 0 (n <= 16)", ok, ok ? "exact" : "mismatch");
}

CheckResult closed_form_agreement() {
  bool ok = true;
  for (Kind kind : kAllKinds) {
    const ExactCorrespondence c{kind, Rational(1, 3)};
    for (int n = 0; n <= 12 && ok; ++n) {
      const Polynomial p = basic_polynomial(c, n);
      for (Index m = -12; m <= 12 && ok; ++m) ok = p(Rational(m) * c.sigma) == basic_polynomial_value(c, n, m);
    }
  }
  return check("closed form == coefficient form (n, |m| <= 12)", ok, ok ? "exact" : "mismatch");
}

CheckResult mirror() {
  bool ok = true;
  const ExactCorrespondence right{Kind::Right, 1}, left{Kind::Left, 1};
  for (int n = 0; n <= 20 && ok; ++n) {
    for (Index m = -20; m <= 20 && ok; ++m) {
      const Rational sign = n % 2 == 0 ? 1 : -1;
      ok = basic_polynomial_value(left, n, m) == sign * basic_polynomial_value(right, n, -m);
    }
  }
  return check("x_-^(n)(m) == (-1)^n x_+^(n)(-m)", ok, ok ? "exact" : "mismatch");
}

CheckResult exp_series() {
  double worst = 0.0;
  for (Kind kind : kAllKinds) {
    const Correspondence c{kind, 1.0};
    for (double ks : {-0.5, 0.5}) {
      for (Index m = -10; m <= 10; ++m) {
        const auto closed = umbral_exp(c, ks, m);
        const auto series = umbral_exp_series(c, ks, m, 1e-13);
        worst = std::max(worst, std::abs(series.value - closed) / std::abs(closed));
      }
    }
  }
  std::ostringstream detail;
  detail << "max relative deviation " << worst;
  return check("exp series == closed form (k sigma = +-0.5, |m| <= 10)", worst <= 1e-10, detail.str());
}

CheckResult symmetric_period() {
  const Correspondence c{Kind::Symmetric, 1.0};
  const double k = wavelength_to_momentum(c, 12).k;
  double worst = 0.0;
  for (Index m = -24; m <= 24; ++m) {
    worst = std::max(worst, std::abs(umbral_trig(c, k, m, Trig::Sin) - std::sin(2.0 * std::numbers::pi * m / 12.0)));
  }
  std::ostringstream detail;
  detail << "max deviation " << worst;
  return check("sin_s(k(l = 12), m) == sin(2 pi m / 12)", worst <= 1e-10, detail.str());
}

CheckResult right_envelope() {
  const Correspondence c{Kind::Right, 1.0};
  const double k = wavelength_to_momentum(c, 8).k;
  const double growth = amplitude_growth(8, 1);
  double worst = std::abs(growth - 16.0) / 16.0;
  for (Index m = 0; m <= 16; ++m) {
    const double here = umbral_trig(c, k, m, Trig::Sin);
    const double later = umbral_trig(c, k, m + 8, Trig::Sin);
    worst = std::max(worst, std::abs(later - growth * here) / std::max(1.0, std::abs(later)));
  }
  std::ostringstream detail;
  detail << "A_1(8) = " << growth << ", max deviation " << worst;
  return check("sin_+(m + l) == A_1(l) sin_+(m), A_1(8) == 16", worst <= 1e-10, detail.str());
}

CheckResult plane_wave() {
  double worst = 0.0;
  for (Kind kind : kAllKinds) {
    for (double ks : {0.2, 0.5, 0.9}) {
      PlaneWaveState state;
      state.k = ks;
      state.correspondence = {kind, 1.0};
      state.b = 0.5;
      const auto psi = plane_wave_samples(state, -12, 12);
      const auto h = apply_hamiltonian(state.correspondence, 2.0, psi);
      const double e = plane_wave_energy(state, 2.0);
      for (Index m = h.first; m <= h.last(); ++m) {
        worst = std::max(worst, std::abs(h.at(m) - e * psi.at(m)) / psi.max_abs());
      }
    }
  }
  std::ostringstream detail;
  detail << "max relative residual " << worst;
  return check("H psi == (k^2 + V0) psi for plane waves", worst <= 1e-10, detail.str());
}

CheckResult well() {
  bool ok = true;
  for (Kind kind : kAllKinds) {
    const Correspondence c{kind, 1.0};
    for (int points : {8, 9, 16}) {
      const auto spectrum = infinite_well_spectrum(c, points);
      ok = ok && static_cast<int>(spectrum.levels.size()) == points / 2;
      for (const auto& level : spectrum.levels) {
        const double partner = well_momentum(c, points, level.partner);
        ok = ok && partner * partner == level.energy;
        if (kind == Kind::Symmetric) ok = ok && level.energy <= 1.0;
      }
    }
  }
  return check("well: floor(M/2) levels, E_n == E_(M-n), symmetric E <= 1/sigma^2", ok, ok ? "exact" : "mismatch");
}

}  // namespace

std::vector<CheckResult> run_invariant_checks() {
  return {heisenberg(), lowering(), closed_form_agreement(), mirror(), exp_series(),
          symmetric_period(), right_envelope(), plane_wave(), well()};
}

}  // namespace umbral
