#include "umbral/correspondence.hpp"

#include <string>

#include "umbral/errors.hpp"

namespace umbral {

std::string_view to_string(Kind kind) {
  switch (kind) {
    case Kind::Right:
      return "right";
    case Kind::Left:
      return "left";
    case Kind::Symmetric:
      return "symmetric";
  }
  return "?";
}

Kind parse_kind(std::string_view text) {
  if (text == "right" || text == "+") return Kind::Right;
  if (text == "left" || text == "-") return Kind::Left;
  if (text == "symmetric" || text == "s") return Kind::Symmetric;
  throw DomainError("unknown correspondence '" + std::string(text) + "'");
}

}  // namespace umbral
