#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <complex>

namespace umbral::detail {

/// 50 significant digits; the exponent range covers k^n/n! and n! alike.
using Real = boost::multiprecision::cpp_bin_float_50;

struct ComplexReal {
  Real re = 0;
  Real im = 0;

  ComplexReal() = default;
  ComplexReal(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  explicit ComplexReal(std::complex<double> z) : re(z.real()), im(z.imag()) {}

  bool is_zero() const { return re == 0 && im == 0; }
  Real norm() const { return re * re + im * im; }
  Real abs() const { return boost::multiprecision::sqrt(norm()); }
  std::complex<double> to_complex() const { return {re.convert_to<double>(), im.convert_to<double>()}; }

  ComplexReal& operator+=(const ComplexReal& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  ComplexReal& operator*=(const ComplexReal& o) {
    Real r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  ComplexReal& operator*=(const Real& s) {
    re *= s;
    im *= s;
    return *this;
  }
  ComplexReal& operator/=(const Real& s) {
    re /= s;
    im /= s;
    return *this;
  }
};

inline ComplexReal operator*(ComplexReal a, const Real& s) { return a *= s; }

}  // namespace umbral::detail
