#include "umbral/basic_sequence.hpp"

#include <array>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>

#include "umbral/errors.hpp"
#include "umbral/operator_algebra.hpp"

namespace umbral {
namespace {

// Inclusive arithmetic run of positive integers; empty when from > to.
struct Run {
  Index from = 1;
  Index to = 0;
  Index step = 1;
};

// x^(n)(m sigma) = sign * leading * prod(runs) * sigma^n.
struct ClosedForm {
  int sign = 1;  // 0 for an exact zero
  Index leading = 1;
  std::array<Run, 2> runs{};
};

// k!! as a run; (-1)!! = 0!! = 1.
Run double_factorial(Index k) {
  if (k <= 0) return {};
  return {k % 2 == 0 ? 2 : 1, k, 2};
}

ClosedForm right_form(int n, Index m) {
  if (m < 0) {
    // (-sigma)^n (-m + n - 1)! / (-m - 1)!
    return {n % 2 == 0 ? 1 : -1, 1, {Run{-m, -m + n - 1, 1}, Run{}}};
  }
  if (m < n) return {0, 1, {}};
  // sigma^n m! / (m - n)!
  return {1, 1, {Run{m - n + 1, m, 1}, Run{}}};
}

ClosedForm left_form(int n, Index m) {
  if (m > 0) return {1, 1, {Run{m, m + n - 1, 1}, Run{}}};
  const Index a = -m;
  if (a < n) return {0, 1, {}};
  return {n % 2 == 0 ? 1 : -1, 1, {Run{a - n + 1, a, 1}, Run{}}};
}

ClosedForm symmetric_form(int n, Index m) {
  if (m == 0) return {0, 1, {}};
  const Index a = std::llabs(m);
  const int sign_pow = (m < 0 && n % 2 != 0) ? -1 : 1;  // sign(m)^n
  if (n <= a) {
    // (sign(m) sigma)^n |m| (|m| + n - 2)!! / (|m| - n)!!
    return {sign_pow, a, {Run{a - n + 2, a + n - 2, 2}, Run{}}};
  }
  if ((n - m) % 2 == 0) return {0, 1, {}};
  // (-1)^((n - |m| - 1)/2) (sign(m) sigma)^n |m| (|m| + n - 2)!! (n - |m| - 2)!!
  const Index half = (n - a - 1) / 2;
  const int sign = (half % 2 == 0 ? 1 : -1) * sign_pow;
  return {sign, a, {double_factorial(a + n - 2), double_factorial(n - a - 2)}};
}

ClosedForm closed_form(Kind kind, int n, Index m) {
  if (n < 0) throw DomainError("basic polynomial order must be >= 0, got " + std::to_string(n));
  if (n == 0) return {1, 1, {}};
  switch (kind) {
    case Kind::Right:
      return right_form(n, m);
    case Kind::Left:
      return left_form(n, m);
    case Kind::Symmetric:
      return symmetric_form(n, m);
  }
  throw DomainError("unknown correspondence");
}

template <typename F>
void for_each_factor(const ClosedForm& form, F&& f) {
  if (form.leading != 1) f(form.leading);
  for (const Run& run : form.runs) {
    for (Index j = run.from; j <= run.to; j += run.step) f(j);
  }
}

[[noreturn]] void throw_overflow(Kind kind, int n, Index m) {
  throw OverflowError("x^(" + std::to_string(n) + ") at m = " + std::to_string(m) + " (" +
                      std::string(to_string(kind)) + ") leaves the double range; use the log-space path");
}

}  // namespace

double SignedLog::value() const { return sign == 0 ? 0.0 : sign * std::exp(log_abs); }

double basic_polynomial_value(const Correspondence& c, int n, Index m) {
  const ClosedForm form = closed_form(c.kind, n, m);
  if (form.sign == 0) return 0.0;

  double value = form.sign;
  int sigma_left = n;
  auto multiply = [&](double factor) {
    value *= factor;
    if (!std::isfinite(value) || value == 0.0) throw_overflow(c.kind, n, m);
  };
  // Pair each integer factor with one sigma so the running product stays near the result's scale.
  for_each_factor(form, [&](Index j) {
    if (sigma_left > 0) {
      --sigma_left;
      multiply(static_cast<double>(j) * c.sigma);
    } else {
      multiply(static_cast<double>(j));
    }
  });
  for (; sigma_left > 0; --sigma_left) multiply(c.sigma);
  return value;
}

Rational basic_polynomial_value(const ExactCorrespondence& c, int n, Index m) {
  const ClosedForm form = closed_form(c.kind, n, m);
  if (form.sign == 0) return 0;
  Rational value = form.sign;
  for_each_factor(form, [&](Index j) { value *= j; });
  for (int i = 0; i < n; ++i) value *= c.sigma;
  return value;
}

SignedLog basic_polynomial_log_value(const Correspondence& c, int n, Index m) {
  const ClosedForm form = closed_form(c.kind, n, m);
  if (form.sign == 0) return {0, -std::numeric_limits<double>::infinity()};
  double log_abs = n * std::log(c.sigma);
  for_each_factor(form, [&](Index j) { log_abs += std::log(static_cast<double>(j)); });
  return {form.sign, log_abs};
}

Polynomial basic_polynomial(const ExactCorrespondence& c, int n) {
  if (n < 0) throw DomainError("basic polynomial order must be >= 0, got " + std::to_string(n));
  Polynomial p = Polynomial::constant(1);
  for (int i = 0; i < n; ++i) p = apply_xi(c, p);
  return p;
}

std::vector<Index> zeros_of_basic_polynomial(Kind kind, int n) {
  if (n < 1) throw DomainError("zeros need n >= 1, got " + std::to_string(n));
  std::vector<Index> zeros;
  switch (kind) {
    case Kind::Right:
      for (Index m = 0; m < n; ++m) zeros.push_back(m);
      break;
    case Kind::Left:
      for (Index m = -(n - 1); m <= 0; ++m) zeros.push_back(m);
      break;
    case Kind::Symmetric:
      // Cut-off points |m| < n with n - m even, plus the factor x at the origin.
      for (Index m = -(n - 1); m <= n - 1; ++m) {
        if ((n - m) % 2 == 0 || m == 0) zeros.push_back(m);
      }
      break;
  }
  return zeros;
}

}  // namespace umbral
