#include "umbral/rational.hpp"

#include <cctype>
#include <cstdlib>

#include "umbral/errors.hpp"

namespace umbral {
namespace {

using boost::multiprecision::mpz_int;

Rational parse_decimal(const std::string& text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) negative = text[i++] == '-';

  std::string digits;
  long scale = 0;
  bool any_digit = false;
  for (; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i) {
    digits += text[i];
    any_digit = true;
  }
  if (i < text.size() && text[i] == '.') {
    for (++i; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i) {
      digits += text[i];
      --scale;
      any_digit = true;
    }
  }
  if (!any_digit) throw DomainError("not a number: '" + text + "'");
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    const std::string exponent = text.substr(i + 1);
    char* end = nullptr;
    const long e = std::strtol(exponent.c_str(), &end, 10);
    if (exponent.empty() || *end != '\0') throw DomainError("bad exponent in '" + text + "'");
    scale += e;
    i = text.size();
  }
  if (i != text.size()) throw DomainError("trailing characters in '" + text + "'");

  Rational value{mpz_int(digits)};
  const mpz_int ten_power = boost::multiprecision::pow(mpz_int(10), static_cast<unsigned>(scale < 0 ? -scale : scale));
  if (scale < 0) {
    value /= Rational(ten_power);
  } else {
    value *= Rational(ten_power);
  }
  return negative ? Rational(-value) : value;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return parse_decimal(text);
  const Rational den = parse_decimal(text.substr(slash + 1));
  if (den == 0) throw DomainError("zero denominator in '" + text + "'");
  return parse_decimal(text.substr(0, slash)) / den;
}

std::string to_string(const Rational& q) { return q.str(); }

}  // namespace umbral
