#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "umbral/correspondence.hpp"

namespace umbral {

enum class SeriesStatus { ExactCutoff, Converged, Diverged };

std::string_view to_string(SeriesStatus status);

/// Taylor coefficients f_n of a function f(x) = sum f_n x^n.
///
/// Either an explicit finite list, or a first coefficient plus a term ratio
/// f_{n+1} = f_n * multiplier(n) / divisor(n). The ratio form lets
/// coefficients such as k^n/n! run far past the double range, and the
/// quotient is formed in extended precision.
struct TermRatio {
  std::complex<double> multiplier{1.0, 0.0};
  double divisor = 1.0;
};

class TaylorSeries {
 public:
  using Ratio = std::function<TermRatio(std::size_t)>;

  static TaylorSeries from_coefficients(std::vector<std::complex<double>> coeffs);
  static TaylorSeries from_ratio(std::complex<double> first, Ratio ratio);
  /// k^n / n!
  static TaylorSeries exponential(std::complex<double> k);

  /// Only orders n <= order are summed.
  TaylorSeries& truncate(std::size_t order);

  bool is_explicit() const { return !ratio_; }
  const std::vector<std::complex<double>>& coefficients() const { return coeffs_; }
  std::complex<double> first() const { return first_; }
  const Ratio& ratio() const { return ratio_; }
  std::optional<std::size_t> truncation() const { return truncation_; }

 private:
  std::vector<std::complex<double>> coeffs_;
  std::complex<double> first_{1.0, 0.0};
  Ratio ratio_;
  std::optional<std::size_t> truncation_;
};

struct SeriesOptions {
  std::size_t max_terms = 100000;
  /// Diverged once |partial sum| grew for `blowup_run` consecutive nonzero terms
  /// and exceeds `blowup_factor` times the first nonzero term.
  std::size_t blowup_run = 50;
  double blowup_factor = 1e12;
  /// Consecutive nonzero terms whose tail bound must sit below tolerance.
  std::size_t confirmations = 3;
};

struct SeriesResult {
  std::complex<double> value;
  SeriesStatus status = SeriesStatus::ExactCutoff;
  std::size_t terms = 0;  // orders visited
};

/// Last order with a nonzero x^(n)(m) when the basic sequence truncates at m.
///
/// Right m >= 0 stops at n = m, Left m <= 0 at n = |m|, Symmetric only at m = 0
/// (one parity chain of the symmetric sequence never vanishes).
std::optional<std::size_t> basic_sequence_cutoff(Kind kind, Index m);

/// sum_n f_n x^(n)(m sigma).
///
/// Terms are formed in 50-digit arithmetic from the recurrences of the basic
/// sequences, so large alternating humps cancel correctly. `tol` is relative
/// to the partial sum.
SeriesResult umbral_transform(const TaylorSeries& f, const Correspondence& c, Index m, double tol,
                              const SeriesOptions& options = {});

}  // namespace umbral
