#pragma once

#include <array>
#include <string>
#include <string_view>

#include "umbral/rational.hpp"

namespace umbral {

/// The three low-order umbral correspondences.
///
///   Right:     Delta = (T - 1)/sigma,          beta = T^-1
///   Left:      Delta = (1 - T^-1)/sigma,       beta = T
///   Symmetric: Delta = (T - T^-1)/(2 sigma),   beta = 2 (T + T^-1)^-1
enum class Kind { Right, Left, Symmetric };

inline constexpr std::array<Kind, 3> kAllKinds = {Kind::Right, Kind::Left, Kind::Symmetric};

std::string_view to_string(Kind kind);
/// Accepts "right", "left", "symmetric" (also "+", "-", "s"); throws DomainError otherwise.
Kind parse_kind(std::string_view text);

/// A correspondence on the lattice x = m * sigma.
///
/// Scalar is double for tabulation and Rational for the exact operator algebra.
template <typename Scalar>
struct BasicCorrespondence {
  Kind kind = Kind::Symmetric;
  Scalar sigma = Scalar(1);
};

using Correspondence = BasicCorrespondence<double>;
using ExactCorrespondence = BasicCorrespondence<Rational>;

inline Correspondence to_float(const ExactCorrespondence& c) { return {c.kind, to_double(c.sigma)}; }

/// A point of the lattice field; x == m * sigma.
struct LatticePoint {
  Index m = 0;
  double x = 0.0;
};

inline LatticePoint lattice_point(const Correspondence& c, Index m) {
  return {m, static_cast<double>(m) * c.sigma};
}

}  // namespace umbral
