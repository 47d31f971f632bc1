#pragma once

#include <complex>
#include <string_view>
#include <vector>

#include "umbral/correspondence.hpp"
#include "umbral/series.hpp"

namespace umbral {

/// Lattice samples f(m sigma) on the contiguous window [first, first + size).
struct DiscreteFunction {
  double sigma = 1.0;
  Index first = 0;
  std::vector<std::complex<double>> values;
  std::vector<SeriesStatus> status;

  Index last() const { return first + static_cast<Index>(values.size()) - 1; }
  std::size_t size() const { return values.size(); }
  bool contains(Index m) const { return m >= first && m <= last(); }
  const std::complex<double>& at(Index m) const;
  double max_abs() const;
};

/// Closed-form discrete exponential.
///
///   Right:     (1 + k sigma)^m
///   Left:      (1 - k sigma)^-m
///   Symmetric: (k sigma + sqrt((k sigma)^2 + 1))^m, principal root
///
/// Throws DomainError for a zero base raised to a negative power.
std::complex<double> umbral_exp(const Correspondence& c, std::complex<double> k, Index m);

/// The defining series sum k^n/n! x^(n)(m sigma).
///
/// Truncating branches give ExactCutoff. On the infinite branches the series
/// converges only inside |k sigma| < 1; outside it Diverged is returned without
/// summing and `value` is NaN.
SeriesResult umbral_exp_series(const Correspondence& c, std::complex<double> k, Index m, double tol,
                               const SeriesOptions& options = {});

/// What the exponential series does at m: truncates, converges, or diverges.
SeriesStatus exp_series_status(const Correspondence& c, std::complex<double> k, Index m);

/// Tabulates the closed form over [m_min, m_max], tagging each sample with its series status.
DiscreteFunction tabulate_exp(const Correspondence& c, std::complex<double> k, Index m_min, Index m_max);

enum class Trig { Sin, Cos, Sinh, Cosh };

std::string_view to_string(Trig which);
Trig parse_trig(std::string_view text);

/// Discrete trig/hyperbolic function from the closed-form exponential, e.g.
/// sin = (E(ik) - E(-ik)) / 2i.
///
/// Requires |k sigma| <= 1 for sin/cos and |k sigma| < 1 for sinh/cosh.
double umbral_trig(const Correspondence& c, double k, Index m, Trig which);

/// umbral_trig without the convergence precondition; the closed form is
/// still evaluated (the right/left well uses it above the convergence limit).
double trig_closed_form(const Correspondence& c, double k, Index m, Trig which);

struct WaveSpec {
  double k = 0.0;       // momentum
  double l = 0.0;       // points per wavelength
  double lambda = 0.0;  // l * sigma
  bool minimal = false; // shortest wave allowed (k sigma == 1)
  Kind kind = Kind::Symmetric;
};

/// Points per wavelength of the shortest wave: 4 symmetric, 8 right/left.
double minimum_wavelength_points(Kind kind);

/// Symmetric: k = sin(2 pi / l) / sigma. Right/Left: k = tan(2 pi / l) / sigma.
/// Throws DomainError for l below the minimum.
WaveSpec wavelength_to_momentum(const Correspondence& c, double l);

/// Symmetric: 2 pi sigma / asin(k sigma). Right/Left: 2 pi sigma / atan(k sigma).
/// Requires 0 < k sigma <= 1.
double momentum_to_wavelength(const Correspondence& c, double k);

/// A_n(l) = (sec^l(2 pi / l))^n, the per-wavelength envelope of right/left trig functions.
double amplitude_growth(double l, int n);

struct AdditionLawReport {
  double translation_residual = 0.0;   // |E(k,m)E(k,n) - E(k,m+n)|
  double two_constant_residual = 0.0;  // |E(k,m)E(k',m) - E(k+k',m)|
  bool translation_holds = false;
  bool two_constant_holds = false;
};

/// Checks E(k,m)E(k,n) == E(k,m+n) and E(k,m)E(k',m) == E(k+k',m).
/// The first holds for every correspondence, the second generically fails.
AdditionLawReport addition_law_check(const Correspondence& c, double k, double k2, Index m, Index n);

}  // namespace umbral
