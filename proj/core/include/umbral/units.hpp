#pragma once

namespace umbral {

/// CODATA 2018 values (SI) and the Planck scales used for the energy limits.
namespace constants {
inline constexpr double hbar = 1.054571817e-34;         // J s
inline constexpr double elementary_charge = 1.602176634e-19;  // J per eV
inline constexpr double electron_mass = 9.1093837015e-31;     // kg
inline constexpr double proton_mass = 1.67262192369e-27;      // kg
inline constexpr double bohr_radius = 5.29177210903e-11;      // m
inline constexpr double planck_length = 1.62e-35;             // m
inline constexpr double planck_time = 5.39e-44;               // s
}  // namespace constants

struct PhysicalUnits {
  double hbar = constants::hbar;
  double mass = constants::electron_mass;
  double sigma_m = constants::planck_length;
  double tau_s = constants::planck_time;

  bool valid() const { return hbar > 0 && mass > 0 && sigma_m > 0 && tau_s > 0; }
};

/// Electron at the Planck lattice.
PhysicalUnits planck_units(double mass);

}  // namespace umbral
