#include "umbral/units.hpp"

namespace umbral {

PhysicalUnits planck_units(double mass) {
  PhysicalUnits units;
  units.mass = mass;
  return units;
}

}  // namespace umbral
