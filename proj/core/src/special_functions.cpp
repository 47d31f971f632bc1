#include "umbral/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "umbral/errors.hpp"

namespace umbral {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
// Slack for k sigma landing one rounding step past the boundary wave.
constexpr double kBoundarySlack = 1e-12;
constexpr double kImaginaryResidue = 1e-12;

std::complex<double> integer_power(std::complex<double> base, Index e) {
  if (e < 0) {
    if (base == std::complex<double>(0.0, 0.0)) throw DomainError("zero base raised to a negative power");
    return 1.0 / integer_power(base, -e);
  }
  std::complex<double> result(1.0, 0.0);
  auto bits = static_cast<std::uint64_t>(e);
  while (bits != 0) {
    if (bits & 1U) result *= base;
    base *= base;
    bits >>= 1U;
  }
  return result;
}

void require_positive_sigma(const Correspondence& c) {
  if (!(c.sigma > 0.0) || !std::isfinite(c.sigma)) throw DomainError("lattice spacing must be positive");
}

}  // namespace

const std::complex<double>& DiscreteFunction::at(Index m) const {
  if (!contains(m)) throw DomainError("lattice index " + std::to_string(m) + " outside the sampled window");
  return values[static_cast<std::size_t>(m - first)];
}

double DiscreteFunction::max_abs() const {
  double best = 0.0;
  for (const auto& v : values) best = std::max(best, std::abs(v));
  return best;
}

std::complex<double> umbral_exp(const Correspondence& c, std::complex<double> k, Index m) {
  require_positive_sigma(c);
  const std::complex<double> ks = k * c.sigma;
  switch (c.kind) {
    case Kind::Right:
      return integer_power(1.0 + ks, m);
    case Kind::Left:
      return integer_power(1.0 - ks, -m);
    case Kind::Symmetric:
      return integer_power(ks + std::sqrt(ks * ks + 1.0), m);
  }
  throw DomainError("unknown correspondence");
}

SeriesStatus exp_series_status(const Correspondence& c, std::complex<double> k, Index m) {
  if (basic_sequence_cutoff(c.kind, m) || k == std::complex<double>(0.0, 0.0)) return SeriesStatus::ExactCutoff;
  return std::abs(k * c.sigma) < 1.0 ? SeriesStatus::Converged : SeriesStatus::Diverged;
}

SeriesResult umbral_exp_series(const Correspondence& c, std::complex<double> k, Index m, double tol,
                               const SeriesOptions& options) {
  require_positive_sigma(c);
  if (exp_series_status(c, k, m) == SeriesStatus::Diverged) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    return {{nan, nan}, SeriesStatus::Diverged, 0};
  }
  return umbral_transform(TaylorSeries::exponential(k), c, m, tol, options);
}

DiscreteFunction tabulate_exp(const Correspondence& c, std::complex<double> k, Index m_min, Index m_max) {
  if (m_min > m_max) throw DomainError("empty lattice window");
  DiscreteFunction f;
  f.sigma = c.sigma;
  f.first = m_min;
  for (Index m = m_min; m <= m_max; ++m) {
    f.values.push_back(umbral_exp(c, k, m));
    f.status.push_back(exp_series_status(c, k, m));
  }
  return f;
}

std::string_view to_string(Trig which) {
  switch (which) {
    case Trig::Sin:
      return "sin";
    case Trig::Cos:
      return "cos";
    case Trig::Sinh:
      return "sinh";
    case Trig::Cosh:
      return "cosh";
  }
  return "?";
}

Trig parse_trig(std::string_view text) {
  if (text == "sin") return Trig::Sin;
  if (text == "cos") return Trig::Cos;
  if (text == "sinh") return Trig::Sinh;
  if (text == "cosh") return Trig::Cosh;
  throw DomainError("unknown function '" + std::string(text) + "'");
}

double trig_closed_form(const Correspondence& c, double k, Index m, Trig which) {
  const bool circular = which == Trig::Sin || which == Trig::Cos;
  const std::complex<double> arg = circular ? std::complex<double>(0.0, k) : std::complex<double>(k, 0.0);
  const std::complex<double> plus = umbral_exp(c, arg, m);
  const std::complex<double> minus = umbral_exp(c, -arg, m);

  std::complex<double> value;
  switch (which) {
    case Trig::Sin:
      value = (plus - minus) / std::complex<double>(0.0, 2.0);
      break;
    case Trig::Cos:
    case Trig::Cosh:
      value = (plus + minus) / 2.0;
      break;
    case Trig::Sinh:
      value = (plus - minus) / 2.0;
      break;
  }
  const double scale = std::max({std::abs(plus), std::abs(minus), std::numeric_limits<double>::min()});
  if (std::abs(value.imag()) > kImaginaryResidue * scale) {
    throw ConsistencyError(std::string(to_string(which)) + " kept an imaginary part " + std::to_string(value.imag()) +
                           " at m = " + std::to_string(m));
  }
  return value.real();
}

double umbral_trig(const Correspondence& c, double k, Index m, Trig which) {
  require_positive_sigma(c);
  const double ks = std::abs(k * c.sigma);
  const bool circular = which == Trig::Sin || which == Trig::Cos;
  if (circular ? ks > 1.0 + kBoundarySlack : ks >= 1.0) {
    throw DomainError(std::string(to_string(which)) + " needs |k sigma| " + (circular ? "<= 1" : "< 1") + ", got " +
                      std::to_string(ks));
  }
  return trig_closed_form(c, k, m, which);
}

double minimum_wavelength_points(Kind kind) { return kind == Kind::Symmetric ? 4.0 : 8.0; }

WaveSpec wavelength_to_momentum(const Correspondence& c, double l) {
  require_positive_sigma(c);
  const double l_min = minimum_wavelength_points(c.kind);
  if (!std::isfinite(l) || l < l_min) {
    throw DomainError("wavelength of " + std::to_string(l) + " points is below the minimum " + std::to_string(l_min));
  }
  const double angle = kTwoPi / l;
  const double ks = c.kind == Kind::Symmetric ? std::sin(angle) : std::tan(angle);
  return {ks / c.sigma, l, l * c.sigma, l == l_min, c.kind};
}

double momentum_to_wavelength(const Correspondence& c, double k) {
  require_positive_sigma(c);
  double ks = k * c.sigma;
  if (!(ks > 0.0) || ks > 1.0 + kBoundarySlack) {
    throw DomainError("momentum_to_wavelength needs 0 < k sigma <= 1, got " + std::to_string(ks));
  }
  ks = std::min(ks, 1.0);
  const double angle = c.kind == Kind::Symmetric ? std::asin(ks) : std::atan(ks);
  return kTwoPi / angle * c.sigma;
}

double amplitude_growth(double l, int n) {
  if (!(l > 4.0) || !std::isfinite(l)) throw DomainError("amplitude growth needs l > 4, got " + std::to_string(l));
  const double cosine = std::cos(kTwoPi / l);
  if (!(cosine > 0.0)) throw DomainError("sec(2 pi / l) is not finite");
  return std::pow(1.0 / cosine, l * n);
}

AdditionLawReport addition_law_check(const Correspondence& c, double k, double k2, Index m, Index n) {
  require_positive_sigma(c);
  if (std::abs(k * c.sigma) >= 1.0 || std::abs(k2 * c.sigma) >= 1.0) {
    throw DomainError("addition law check needs both |k sigma| < 1");
  }
  auto e = [&](double kk, Index mm) { return umbral_exp(c, kk, mm); };
  const auto same_k = e(k, m + n);
  const auto two_k = e(k + k2, m);

  AdditionLawReport report;
  report.translation_residual = std::abs(e(k, m) * e(k, n) - same_k);
  report.two_constant_residual = std::abs(e(k, m) * e(k2, m) - two_k);
  report.translation_holds = report.translation_residual <= 1e-12 * std::max(1.0, std::abs(same_k));
  report.two_constant_holds = report.two_constant_residual <= 1e-12 * std::max(1.0, std::abs(two_k));
  return report;
}

}  // namespace umbral
