#pragma once

// Independent reference computations for the tests. Nothing here goes
// through the library's xi/beta operators, closed-form case analysis, or
// series recurrences.

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <complex>

#include "umbral/correspondence.hpp"
#include "umbral/polynomial.hpp"
#include "umbral/rational.hpp"

namespace oracle {

using umbral::Index;
using umbral::Kind;
using umbral::Polynomial;
using umbral::Rational;

/// Offsets c_i with x^(n) = prod_i (x + c_i sigma), straight from the product formulas.
template <typename F>
void for_each_root_offset(Kind kind, int n, F&& f) {
  switch (kind) {
    case Kind::Right:
      for (int i = 0; i < n; ++i) f(-i);
      break;
    case Kind::Left:
      for (int i = 0; i < n; ++i) f(i);
      break;
    case Kind::Symmetric:
      if (n == 0) return;
      f(0);
      for (int i = 0; i <= n - 2; ++i) f(2 * i - (n - 2));
      break;
  }
}

inline Rational direct_product_value(Kind kind, int n, Index m, const Rational& sigma) {
  Rational value = 1;
  const Rational x = Rational(m) * sigma;
  for_each_root_offset(kind, n, [&](int c) { value *= x + Rational(c) * sigma; });
  return value;
}

inline double direct_product_value(Kind kind, int n, Index m, double sigma) {
  long double value = 1;
  const long double x = static_cast<long double>(m) * sigma;
  for_each_root_offset(kind, n, [&](int c) { value *= x + static_cast<long double>(c) * sigma; });
  return static_cast<double>(value);
}

inline Polynomial direct_product_polynomial(Kind kind, int n, const Rational& sigma) {
  Polynomial p = Polynomial::constant(1);
  for_each_root_offset(kind, n, [&](int c) { p *= Polynomial({Rational(c) * sigma, Rational(1)}); });
  return p;
}

using Wide = boost::multiprecision::cpp_bin_float_100;

/// sum_{n < terms} (k sigma)^n / n! * prod(m + c_i) with every term rebuilt
/// from scratch in 100-digit arithmetic.
inline std::complex<double> brute_force_exp_series(Kind kind, std::complex<double> ks, Index m, int terms) {
  Wide re = 0, im = 0;
  for (int n = 0; n < terms; ++n) {
    Wide prod = 1;
    for_each_root_offset(kind, n, [&](int c) { prod *= Wide(m + c); });
    if (prod == 0) continue;
    Wide factorial = 1;
    for (int j = 2; j <= n; ++j) factorial *= j;
    // (a + ib)^n by repeated multiplication
    Wide pr = 1, pi = 0;
    for (int j = 0; j < n; ++j) {
      Wide nr = pr * ks.real() - pi * ks.imag();
      pi = pr * ks.imag() + pi * ks.real();
      pr = nr;
    }
    re += pr * prod / factorial;
    im += pi * prod / factorial;
  }
  return {re.convert_to<double>(), im.convert_to<double>()};
}

/// Least-squares slope of log(err) against log(h).
template <typename Range>
double log_log_slope(const Range& h, const Range& err) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double count = static_cast<double>(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) {
    const double x = std::log(h[i]);
    const double y = std::log(err[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (count * sxy - sx * sy) / (count * sxx - sx * sx);
}

}  // namespace oracle
