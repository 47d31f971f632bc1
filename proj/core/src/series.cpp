#include "umbral/series.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <deque>
#include <limits>

#include "extended.hpp"
#include "umbral/errors.hpp"

namespace umbral {

using detail::ComplexReal;
using detail::Real;

std::string_view to_string(SeriesStatus status) {
  switch (status) {
    case SeriesStatus::ExactCutoff:
      return "exact_cutoff";
    case SeriesStatus::Converged:
      return "converged";
    case SeriesStatus::Diverged:
      return "diverged";
  }
  return "?";
}

TaylorSeries TaylorSeries::from_coefficients(std::vector<std::complex<double>> coeffs) {
  TaylorSeries s;
  for (const auto& c : coeffs) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) throw DomainError("Taylor coefficients must be finite");
  }
  s.coeffs_ = std::move(coeffs);
  return s;
}

TaylorSeries TaylorSeries::from_ratio(std::complex<double> first, Ratio ratio) {
  if (!ratio) throw DomainError("ratio series needs a ratio function");
  TaylorSeries s;
  s.first_ = first;
  s.ratio_ = std::move(ratio);
  return s;
}

TaylorSeries TaylorSeries::exponential(std::complex<double> k) {
  return from_ratio(1.0, [k](std::size_t n) { return TermRatio{k, static_cast<double>(n + 1)}; });
}

TaylorSeries& TaylorSeries::truncate(std::size_t order) {
  truncation_ = order;
  return *this;
}

std::optional<std::size_t> basic_sequence_cutoff(Kind kind, Index m) {
  switch (kind) {
    case Kind::Right:
      if (m >= 0) return static_cast<std::size_t>(m);
      break;
    case Kind::Left:
      if (m <= 0) return static_cast<std::size_t>(-m);
      break;
    case Kind::Symmetric:
      if (m == 0) return 0;
      break;
  }
  return std::nullopt;
}

namespace {

// x^(n)(m sigma) for n = 0, 1, 2, ... from the product recurrences:
//   Right     x^(n+1) = x^(n) (m - n) sigma
//   Left      x^(n+1) = x^(n) (m + n) sigma
//   Symmetric x^(n+2) = x^(n) (m - n)(m + n) sigma^2, x^(0) = 1, x^(1) = m sigma
class BasicSequenceWalker {
 public:
  BasicSequenceWalker(const Correspondence& c, Index m) : kind_(c.kind), m_(m), sigma_(c.sigma) {
    chain_[0] = 1;
    chain_[1] = Real(m) * sigma_;
  }

  const Real& current() const { return kind_ == Kind::Symmetric ? chain_[n_ % 2] : chain_[0]; }

  void advance() {
    const Real n(static_cast<long long>(n_));
    const Real m(static_cast<long long>(m_));
    switch (kind_) {
      case Kind::Right:
        chain_[0] *= (m - n) * sigma_;
        break;
      case Kind::Left:
        chain_[0] *= (m + n) * sigma_;
        break;
      case Kind::Symmetric:
        // the step to n + 1 lifts the other parity chain from n - 1
        if (n_ >= 1) chain_[(n_ + 1) % 2] *= (m - n + 1) * (m + n - 1) * sigma_ * sigma_;
        break;
    }
    ++n_;
  }

 private:
  Kind kind_;
  Index m_;
  Real sigma_;
  std::size_t n_ = 0;
  std::array<Real, 2> chain_;
};

class CoefficientWalker {
 public:
  explicit CoefficientWalker(const TaylorSeries& f) : f_(f), value_(f.is_explicit() ? ComplexReal() : ComplexReal(f.first())) {
    if (f_.is_explicit() && !f_.coefficients().empty()) value_ = ComplexReal(f_.coefficients().front());
  }

  const ComplexReal& current() const { return value_; }

  void advance() {
    if (f_.is_explicit()) {
      ++n_;
      value_ = n_ < f_.coefficients().size() ? ComplexReal(f_.coefficients()[n_]) : ComplexReal();
      return;
    }
    const TermRatio r = f_.ratio()(n_);
    if (r.divisor == 0.0) throw DomainError("Taylor ratio divisor is zero");
    value_ *= ComplexReal(r.multiplier);
    value_ /= Real(r.divisor);
    ++n_;
  }

  /// Every later coefficient is zero.
  bool exhausted() const {
    if (f_.is_explicit()) return n_ >= f_.coefficients().size();
    return value_.is_zero();
  }

 private:
  const TaylorSeries& f_;
  ComplexReal value_;
  std::size_t n_ = 0;
};

// Term ratios of a series behaving like rho + b/j are extrapolated to rho.
class RatioTracker {
 public:
  void push(double ratio) {
    ++count_;
    if (count_ >= 2) extrapolated_ = static_cast<double>(count_) * ratio - static_cast<double>(count_ - 1) * last_;
    last_ = ratio;
    recent_.push_back(ratio);
    if (recent_.size() > 3) recent_.pop_front();
  }

  bool warmed_up() const { return recent_.size() == 3; }
  double recent_max() const { return *std::max_element(recent_.begin(), recent_.end()); }
  double extrapolated() const { return count_ >= 2 ? extrapolated_ : last_; }

 private:
  std::deque<double> recent_;
  std::size_t count_ = 0;
  double last_ = 0.0;
  double extrapolated_ = 0.0;
};

}  // namespace

SeriesResult umbral_transform(const TaylorSeries& f, const Correspondence& c, Index m, double tol,
                              const SeriesOptions& options) {
  if (!(tol > 0.0)) throw DomainError("series tolerance must be positive");
  if (!(c.sigma > 0.0)) throw DomainError("lattice spacing must be positive");

  std::optional<std::size_t> last = basic_sequence_cutoff(c.kind, m);
  if (f.is_explicit()) {
    const std::size_t list_last = f.coefficients().empty() ? 0 : f.coefficients().size() - 1;
    last = last ? std::min(*last, list_last) : list_last;
  }
  if (f.truncation()) last = last ? std::min(*last, *f.truncation()) : *f.truncation();

  BasicSequenceWalker basis(c, m);
  CoefficientWalker coeff(f);
  ComplexReal sum;

  if (last) {
    for (std::size_t n = 0; n <= *last; ++n) {
      if (n > 0) {
        basis.advance();
        coeff.advance();
      }
      ComplexReal term = coeff.current();
      term *= basis.current();
      sum += term;
    }
    return {sum.to_complex(), SeriesStatus::ExactCutoff, *last + 1};
  }

  RatioTracker ratios;
  Real first_magnitude = 0;
  Real previous_magnitude = 0;
  Real previous_sum_magnitude = 0;
  std::size_t growth_run = 0;
  std::size_t confirmations = 0;

  for (std::size_t n = 0; n < options.max_terms; ++n) {
    if (n > 0) {
      basis.advance();
      coeff.advance();
    }
    if (coeff.exhausted()) {
      return {sum.to_complex(), SeriesStatus::ExactCutoff, n + 1};
    }
    ComplexReal term = coeff.current();
    term *= basis.current();
    if (term.is_zero()) continue;

    sum += term;
    const Real magnitude = term.abs();
    const Real sum_magnitude = sum.abs();
    if (first_magnitude == 0) first_magnitude = magnitude;
    if (previous_magnitude > 0) ratios.push(Real(magnitude / previous_magnitude).convert_to<double>());
    previous_magnitude = magnitude;

    if (ratios.warmed_up()) {
      const double rho = ratios.recent_max();
      if (rho < 1.0) {
        const Real tail = magnitude * rho / (1.0 - rho);
        const Real scale = std::max(sum_magnitude, Real(first_magnitude * 1e-30));
        confirmations = tail <= scale * tol ? confirmations + 1 : 0;
        if (confirmations >= options.confirmations) {
          return {sum.to_complex(), SeriesStatus::Converged, n + 1};
        }
      } else {
        confirmations = 0;
      }
    }

    growth_run = sum_magnitude > previous_sum_magnitude ? growth_run + 1 : 0;
    previous_sum_magnitude = sum_magnitude;
    // A convergent series can climb a long hump before its terms turn over;
    // only call it divergent when the extrapolated term ratio is not below 1.
    if (growth_run >= options.blowup_run && sum_magnitude > first_magnitude * options.blowup_factor &&
        ratios.extrapolated() >= 1.0) {
      return {sum.to_complex(), SeriesStatus::Diverged, n + 1};
    }
  }
  return {sum.to_complex(), SeriesStatus::Diverged, options.max_terms};
}

}  // namespace umbral
