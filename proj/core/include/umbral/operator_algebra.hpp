#pragma once

#include <map>
#include <string>
#include <variant>

#include "umbral/correspondence.hpp"
#include "umbral/polynomial.hpp"
#include "umbral/rational.hpp"

namespace umbral {

/// General difference operator (1/(N sigma)) * sum_n a_n T^n.
///
/// `terms` maps the shift exponent n to a_n. A valid delta operator has
/// sum a_n == 0 and sum n a_n == N, which is exactly Delta x == 1.
struct DeltaOperator {
  std::map<int, Rational> terms;
  int normalizer = 1;
  Rational sigma = 1;
};

DeltaOperator right_delta(const Rational& sigma);
DeltaOperator left_delta(const Rational& sigma);
DeltaOperator symmetric_delta(const Rational& sigma);
DeltaOperator delta_of(const ExactCorrespondence& c);

struct DeltaReport {
  Rational coefficient_sum;  // sum a_n, must be 0
  Rational weighted_sum;     // sum n a_n, must equal N
  int normalizer = 0;
  bool sums_to_zero = false;
  bool normalized = false;
  bool well_formed = false;  // N > 0, sigma > 0, at least one term

  bool passed() const { return sums_to_zero && normalized && well_formed; }
  std::string describe() const;
};

DeltaReport check_delta_conditions(const DeltaOperator& d);

/// p(x + s), expanded with binomial coefficients.
Polynomial apply_shift(const Polynomial& p, const Rational& s);
/// x * p(x)
Polynomial apply_coordinate(const Polynomial& p);
/// (1/(N sigma)) sum a_n p(x + n sigma). Throws InvalidDelta on a bad operator.
Polynomial apply_delta(const DeltaOperator& d, const Polynomial& p);

/// Right: p(x - sigma). Left: p(x + sigma). Symmetric: the unique q with
/// ((T + T^-1)/2) q == p, found by back-substitution from the top degree.
Polynomial apply_beta(const ExactCorrespondence& c, const Polynomial& p);
/// xi = X beta
Polynomial apply_xi(const ExactCorrespondence& c, const Polynomial& p);

namespace ops {
struct Shift {
  Rational amount;
};
struct Coordinate {};
struct Delta {
  DeltaOperator op;
};
struct Beta {
  ExactCorrespondence c;
};
struct Xi {
  ExactCorrespondence c;
};
}  // namespace ops

using OperatorKind = std::variant<ops::Shift, ops::Coordinate, ops::Delta, ops::Beta, ops::Xi>;

Polynomial apply_operator(const OperatorKind& op, const Polynomial& p);

/// Pincherle derivative O' = [O, X] applied to p.
Polynomial pincherle_derivative(const OperatorKind& op, const Polynomial& p);

/// op(T_s p) - T_s(op p); zero for shift-invariant operators.
Polynomial shift_commutator(const OperatorKind& op, const Polynomial& p, const Rational& s);

/// max over n <= degree_max of the largest |coefficient| of [Delta, xi] x^n - x^n.
/// Exact arithmetic, so any correct correspondence gives exactly zero.
Rational commutator_residual(const ExactCorrespondence& c, int degree_max);

}  // namespace umbral
