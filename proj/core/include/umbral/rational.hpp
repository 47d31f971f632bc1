#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>

namespace umbral {

/// Exact rational scalar used by the operator algebra.
using Rational = boost::multiprecision::mpq_rational;

/// Lattice index m in x = m * sigma.
using Index = std::int64_t;

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

/// Parses "p", "p/q" or a finite decimal such as "0.25" or "-1.5e-2" into an exact rational.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& q);

}  // namespace umbral
