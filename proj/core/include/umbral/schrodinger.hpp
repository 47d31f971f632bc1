#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "umbral/correspondence.hpp"
#include "umbral/special_functions.hpp"
#include "umbral/units.hpp"

namespace umbral {

// Natural units hbar = 1, 2m = 1 throughout: H = -Delta^2 + V and E = k^2 + V0
// for a plane wave. Only energy_bounds and the *_ev helpers use PhysicalUnits.

/// Time part phi(n tau) = C exp_U(i E, n tau) of a separated solution.
struct TimeEvolution {
  DiscreteFunction phi;
  std::vector<double> modulus;
};

/// `time` carries the time correspondence, with sigma playing the role of tau.
/// Throws DomainError when |E tau| >= 1.
TimeEvolution separate(const Correspondence& time, double energy, Index n_steps,
                       std::complex<double> amplitude = 1.0);

/// (-Delta_c^2 + V0) psi on the interior window the stencil allows.
///
/// Right loses two points on the right edge, Left two on the left,
/// Symmetric two on each side. Throws WindowTooSmall if nothing is left.
DiscreteFunction apply_hamiltonian(const Correspondence& c, double v0, const DiscreteFunction& psi);

/// psi = A exp_U(ik) + B exp_U(-ik) (oscillatory, E > V0) or
/// A exp_U(k) + B exp_U(-k) (E < V0).
struct PlaneWaveState {
  std::complex<double> a{1.0, 0.0};
  std::complex<double> b{0.0, 0.0};
  double k = 0.0;
  bool oscillatory = true;
  Correspondence correspondence;
};

DiscreteFunction plane_wave_samples(const PlaneWaveState& state, Index m_min, Index m_max);
/// V0 + k^2 when oscillatory, V0 - k^2 otherwise.
double plane_wave_energy(const PlaneWaveState& state, double v0);

struct EnergyBounds {
  double time_ev = 0.0;   // hbar / tau
  double space_ev = 0.0;  // hbar^2 / (2 m sigma^2)

  double binding_ev() const { return time_ev < space_ev ? time_ev : space_ev; }
  bool time_binds() const { return time_ev <= space_ev; }
};

EnergyBounds energy_bounds(const PhysicalUnits& units);

/// hbar^2 k^2 / (2m) in eV, for k in 1/m.
double kinetic_energy_ev(double k_per_m, const PhysicalUnits& units);

struct WellLevel {
  int n = 0;
  double k = 0.0;
  double energy = 0.0;
  bool physical = true;
  bool convergent = true;
  int partner = 0;  // M - n, same energy
};

struct WellSpectrum {
  Correspondence correspondence;
  int points = 0;  // M, with L = M sigma
  std::vector<WellLevel> levels;
  std::vector<std::pair<int, int>> degeneracy_pairs;
};

/// k_n from the quantum rule: tan(pi n / M)/sigma (right/left), sin(pi n / M)/sigma (symmetric).
///
/// n is reduced into (-M/2, M/2] first, so levels n and M - n share |k| bit for bit.
/// The right/left pole n = M/2 returns +infinity.
double well_momentum(const Correspondence& c, int points, int n);

/// Levels n = 1 .. floor(M/2) with E_n = k_n^2.
///
/// convergent means k_n sigma < 1 for right/left (4n < M) and k_n sigma <= 1 for
/// symmetric, which admits the boundary wave.
WellSpectrum infinite_well_spectrum(const Correspondence& c, int points);

struct WaveFunctionTable {
  int n = 0;
  double k = 0.0;
  std::vector<std::pair<Index, double>> samples;  // m = 0 .. M
  double left_residual = 0.0;   // |psi(0)|
  double right_residual = 0.0;  // |psi(M)|
  double max_abs = 0.0;
  Index argmax = 0;
};

/// psi_n(m sigma) = sin_c(k_n, m sigma) for m in [0, M].
/// Throws NonPhysicalState for n = M/2 under right/left.
WaveFunctionTable infinite_well_wavefunction(const Correspondence& c, int points, int n);

struct StateCount {
  int total = 0;
  int physical = 0;
  int convergent = 0;
};

StateCount well_state_count(const Correspondence& c, int points);

/// log10 of the largest finite right/left (or symmetric) well energy in eV.
///
/// The right/left level just below the tan pole is evaluated as
/// cot(pi / 2M)^2, so M can be as large as 1e27.
double well_max_energy_log10_ev(Kind kind, double points, const PhysicalUnits& units);

}  // namespace umbral
