#pragma once

#include <vector>

#include "umbral/correspondence.hpp"
#include "umbral/polynomial.hpp"
#include "umbral/rational.hpp"

namespace umbral {

/// Exact coefficient form of x^(n) = xi^n . 1.
Polynomial basic_polynomial(const ExactCorrespondence& c, int n);

/// x^(n) at x = m sigma from the factorial / double-factorial case analysis.
///
/// The product is accumulated left to right in double precision and throws
/// OverflowError as soon as it leaves the finite range.
double basic_polynomial_value(const Correspondence& c, int n, Index m);

/// Same case analysis in exact arithmetic.
Rational basic_polynomial_value(const ExactCorrespondence& c, int n, Index m);

/// sign * exp(log_abs); sign is 0 for an exact zero.
struct SignedLog {
  int sign = 0;
  double log_abs = 0.0;

  double value() const;
};

/// Log-space evaluation for large n or |m| (past kLogSpaceThreshold the plain product overflows).
SignedLog basic_polynomial_log_value(const Correspondence& c, int n, Index m);

inline constexpr int kLogSpaceThreshold = 150;

/// Lattice indices where x^(n) vanishes, in ascending order.
///
/// Right: 0..n-1. Left: -(n-1)..0. Symmetric: |m| < n with n - m even.
std::vector<Index> zeros_of_basic_polynomial(Kind kind, int n);

}  // namespace umbral
