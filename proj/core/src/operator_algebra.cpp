#include "umbral/operator_algebra.hpp"

#include <algorithm>
#include <sstream>

#include "umbral/errors.hpp"

namespace umbral {
namespace {

// Row j holds C(j, 0..j).
std::vector<std::vector<Rational>> binomial_table(int n) {
  std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(n + 1));
  for (int j = 0; j <= n; ++j) {
    auto& row = rows[static_cast<std::size_t>(j)];
    row.assign(static_cast<std::size_t>(j + 1), Rational(1));
    for (int i = 1; i < j; ++i) {
      const auto& prev = rows[static_cast<std::size_t>(j - 1)];
      row[static_cast<std::size_t>(i)] = prev[static_cast<std::size_t>(i - 1)] + prev[static_cast<std::size_t>(i)];
    }
  }
  return rows;
}

Polynomial symmetric_beta(const Rational& sigma, const Polynomial& p) {
  const int d = p.degree();
  if (d < 0) return {};
  const auto binom = binomial_table(d);
  std::vector<Rational> sigma_pow(static_cast<std::size_t>(d + 1));
  sigma_pow[0] = 1;
  for (int i = 1; i <= d; ++i) sigma_pow[static_cast<std::size_t>(i)] = sigma_pow[static_cast<std::size_t>(i - 1)] * sigma;

  // ((T + T^-1)/2) x^j = sum_{i even} C(j, i) sigma^i x^(j-i): unit diagonal, so
  // the coefficients of q follow from the top degree down.
  std::vector<Rational> q(static_cast<std::size_t>(d + 1));
  for (int j = d; j >= 0; --j) {
    Rational acc = p.coeff(static_cast<std::size_t>(j));
    for (int i = 2; j + i <= d; i += 2) {
      const auto hi = static_cast<std::size_t>(j + i);
      acc -= binom[hi][static_cast<std::size_t>(i)] * sigma_pow[static_cast<std::size_t>(i)] * q[hi];
    }
    q[static_cast<std::size_t>(j)] = acc;
  }
  return Polynomial(std::move(q));
}

}  // namespace

DeltaOperator right_delta(const Rational& sigma) { return {{{1, Rational(1)}, {0, Rational(-1)}}, 1, sigma}; }

DeltaOperator left_delta(const Rational& sigma) { return {{{0, Rational(1)}, {-1, Rational(-1)}}, 1, sigma}; }

DeltaOperator symmetric_delta(const Rational& sigma) { return {{{1, Rational(1)}, {-1, Rational(-1)}}, 2, sigma}; }

DeltaOperator delta_of(const ExactCorrespondence& c) {
  switch (c.kind) {
    case Kind::Right:
      return right_delta(c.sigma);
    case Kind::Left:
      return left_delta(c.sigma);
    case Kind::Symmetric:
      return symmetric_delta(c.sigma);
  }
  throw DomainError("unknown correspondence");
}

std::string DeltaReport::describe() const {
  std::ostringstream out;
  out << "sum a_n = " << coefficient_sum.str() << (sums_to_zero ? " (ok)" : " (expected 0)") << ", sum n a_n = "
      << weighted_sum.str() << (normalized ? " (ok)" : " (expected " + std::to_string(normalizer) + ")");
  if (!well_formed) out << ", need N > 0, sigma > 0 and at least one term";
  return out.str();
}

DeltaReport check_delta_conditions(const DeltaOperator& d) {
  DeltaReport report;
  report.normalizer = d.normalizer;
  for (const auto& [n, a] : d.terms) {
    report.coefficient_sum += a;
    report.weighted_sum += Rational(n) * a;
  }
  report.sums_to_zero = report.coefficient_sum == 0;
  report.normalized = report.weighted_sum == d.normalizer;
  report.well_formed = d.normalizer > 0 && d.sigma > 0 && !d.terms.empty();
  return report;
}

Polynomial apply_shift(const Polynomial& p, const Rational& s) {
  // Horner in (x + s).
  const Polynomial x_plus_s({s, Rational(1)});
  Polynomial result;
  for (int j = p.degree(); j >= 0; --j) {
    result *= x_plus_s;
    result += Polynomial::constant(p.coeff(static_cast<std::size_t>(j)));
  }
  return result;
}

Polynomial apply_coordinate(const Polynomial& p) { return p.times_x(); }

Polynomial apply_delta(const DeltaOperator& d, const Polynomial& p) {
  const DeltaReport report = check_delta_conditions(d);
  if (!report.passed()) throw InvalidDelta("invalid delta operator: " + report.describe());
  Polynomial sum;
  for (const auto& [n, a] : d.terms) {
    if (a == 0) continue;
    sum += a * apply_shift(p, Rational(n) * d.sigma);
  }
  return sum * Rational(1 / (Rational(d.normalizer) * d.sigma));
}

Polynomial apply_beta(const ExactCorrespondence& c, const Polynomial& p) {
  switch (c.kind) {
    case Kind::Right:
      return apply_shift(p, -c.sigma);
    case Kind::Left:
      return apply_shift(p, c.sigma);
    case Kind::Symmetric:
      return symmetric_beta(c.sigma, p);
  }
  throw DomainError("unknown correspondence");
}

Polynomial apply_xi(const ExactCorrespondence& c, const Polynomial& p) { return apply_beta(c, p).times_x(); }

Polynomial apply_operator(const OperatorKind& op, const Polynomial& p) {
  struct Visitor {
    const Polynomial& p;
    Polynomial operator()(const ops::Shift& s) const { return apply_shift(p, s.amount); }
    Polynomial operator()(const ops::Coordinate&) const { return apply_coordinate(p); }
    Polynomial operator()(const ops::Delta& d) const { return apply_delta(d.op, p); }
    Polynomial operator()(const ops::Beta& b) const { return apply_beta(b.c, p); }
    Polynomial operator()(const ops::Xi& x) const { return apply_xi(x.c, p); }
  };
  return std::visit(Visitor{p}, op);
}

Polynomial pincherle_derivative(const OperatorKind& op, const Polynomial& p) {
  return apply_operator(op, p.times_x()) - apply_operator(op, p).times_x();
}

Polynomial shift_commutator(const OperatorKind& op, const Polynomial& p, const Rational& s) {
  return apply_operator(op, apply_shift(p, s)) - apply_shift(apply_operator(op, p), s);
}

Rational commutator_residual(const ExactCorrespondence& c, int degree_max) {
  if (degree_max < 1) throw DomainError("commutator_residual needs degree_max >= 1");
  const DeltaOperator delta = delta_of(c);
  Rational worst = 0;
  for (int n = 0; n <= degree_max; ++n) {
    const Polynomial p = Polynomial::monomial(static_cast<std::size_t>(n));
    const Polynomial bracket = apply_delta(delta, apply_xi(c, p)) - apply_xi(c, apply_delta(delta, p));
    worst = std::max(worst, max_abs_coefficient(bracket - p));
  }
  return worst;
}

}  // namespace umbral
