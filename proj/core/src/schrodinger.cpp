#include "umbral/schrodinger.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "umbral/errors.hpp"

namespace umbral {
namespace {

// One application of Delta_c to the samples; the window shrinks by the stencil.
DiscreteFunction difference(const Correspondence& c, const DiscreteFunction& f) {
  Index lo = f.first;
  Index hi = f.last();
  switch (c.kind) {
    case Kind::Right:
      hi -= 1;
      break;
    case Kind::Left:
      lo += 1;
      break;
    case Kind::Symmetric:
      lo += 1;
      hi -= 1;
      break;
  }
  if (lo > hi) throw WindowTooSmall("window [" + std::to_string(f.first) + ", " + std::to_string(f.last()) +
                                    "] is too small for the " + std::string(to_string(c.kind)) + " stencil");
  DiscreteFunction d;
  d.sigma = f.sigma;
  d.first = lo;
  for (Index m = lo; m <= hi; ++m) {
    std::complex<double> v;
    switch (c.kind) {
      case Kind::Right:
        v = (f.at(m + 1) - f.at(m)) / c.sigma;
        break;
      case Kind::Left:
        v = (f.at(m) - f.at(m - 1)) / c.sigma;
        break;
      case Kind::Symmetric:
        v = (f.at(m + 1) - f.at(m - 1)) / (2.0 * c.sigma);
        break;
    }
    d.values.push_back(v);
    d.status.push_back(f.status.empty() ? SeriesStatus::ExactCutoff : f.status[static_cast<std::size_t>(m - f.first)]);
  }
  return d;
}

bool has_pole(Kind kind) { return kind != Kind::Symmetric; }

}  // namespace

TimeEvolution separate(const Correspondence& time, double energy, Index n_steps, std::complex<double> amplitude) {
  if (!(time.sigma > 0.0)) throw DomainError("time step must be positive");
  if (n_steps < 0) throw DomainError("number of time steps must be >= 0");
  if (std::abs(energy * time.sigma) >= 1.0) {
    throw DomainError("|E tau| = " + std::to_string(std::abs(energy * time.sigma)) +
                      " reaches the temporal energy bound hbar/tau");
  }
  TimeEvolution out;
  out.phi = tabulate_exp(time, std::complex<double>(0.0, energy), 0, n_steps);
  for (auto& v : out.phi.values) {
    v *= amplitude;
    out.modulus.push_back(std::abs(v));
  }
  return out;
}

DiscreteFunction apply_hamiltonian(const Correspondence& c, double v0, const DiscreteFunction& psi) {
  if (!(c.sigma > 0.0)) throw DomainError("lattice spacing must be positive");
  if (psi.values.empty()) throw WindowTooSmall("empty wave function");
  const DiscreteFunction second = difference(c, difference(c, psi));
  DiscreteFunction h = second;
  for (Index m = h.first; m <= h.last(); ++m) {
    auto& v = h.values[static_cast<std::size_t>(m - h.first)];
    v = -v + v0 * psi.at(m);
  }
  return h;
}

DiscreteFunction plane_wave_samples(const PlaneWaveState& state, Index m_min, Index m_max) {
  if (state.a == 0.0 && state.b == 0.0) throw DomainError("plane wave needs A or B nonzero");
  const std::complex<double> k =
      state.oscillatory ? std::complex<double>(0.0, state.k) : std::complex<double>(state.k, 0.0);
  DiscreteFunction up = tabulate_exp(state.correspondence, k, m_min, m_max);
  const DiscreteFunction down = tabulate_exp(state.correspondence, -k, m_min, m_max);
  for (std::size_t i = 0; i < up.values.size(); ++i) {
    up.values[i] = state.a * up.values[i] + state.b * down.values[i];
  }
  return up;
}

double plane_wave_energy(const PlaneWaveState& state, double v0) {
  return state.oscillatory ? v0 + state.k * state.k : v0 - state.k * state.k;
}

EnergyBounds energy_bounds(const PhysicalUnits& units) {
  if (!units.valid()) throw DomainError("physical units must all be positive");
  EnergyBounds bounds;
  bounds.time_ev = units.hbar / units.tau_s / constants::elementary_charge;
  bounds.space_ev = units.hbar * units.hbar / (2.0 * units.mass * units.sigma_m * units.sigma_m) /
                    constants::elementary_charge;
  return bounds;
}

double kinetic_energy_ev(double k_per_m, const PhysicalUnits& units) {
  return units.hbar * units.hbar * k_per_m * k_per_m / (2.0 * units.mass) / constants::elementary_charge;
}

double well_momentum(const Correspondence& c, int points, int n) {
  if (points < 2) throw DomainError("the well needs M >= 2 points");
  int r = ((n % points) + points) % points;
  if (2 * r > points) r -= points;
  if (has_pole(c.kind) && 2 * r == points) return std::numeric_limits<double>::infinity();
  const double angle = std::numbers::pi * std::abs(r) / points;
  const double ks = c.kind == Kind::Symmetric ? std::sin(angle) : std::tan(angle);
  return (r < 0 ? -ks : ks) / c.sigma;
}

WellSpectrum infinite_well_spectrum(const Correspondence& c, int points) {
  if (points < 2) throw DomainError("the well needs M >= 2 points");
  if (!(c.sigma > 0.0)) throw DomainError("lattice spacing must be positive");
  WellSpectrum spectrum;
  spectrum.correspondence = c;
  spectrum.points = points;
  for (int n = 1; 2 * n <= points; ++n) {
    WellLevel level;
    level.n = n;
    level.k = well_momentum(c, points, n);
    level.energy = level.k * level.k;
    level.physical = !(has_pole(c.kind) && 2 * n == points);
    level.convergent = has_pole(c.kind) ? 4 * n < points : true;
    level.partner = points - n;
    spectrum.levels.push_back(level);
    spectrum.degeneracy_pairs.emplace_back(n, points - n);
  }
  return spectrum;
}

WaveFunctionTable infinite_well_wavefunction(const Correspondence& c, int points, int n) {
  if (points < 2) throw DomainError("the well needs M >= 2 points");
  if (n < 1 || n >= points) {
    throw DomainError("level " + std::to_string(n) + " outside 1 <= n < " + std::to_string(points));
  }
  if (has_pole(c.kind) && 2 * n == points) {
    throw NonPhysicalState("level n = M/2 = " + std::to_string(n) + " sits on the tan pole (infinite energy)");
  }
  WaveFunctionTable table;
  table.n = n;
  table.k = well_momentum(c, points, n);
  for (Index m = 0; m <= points; ++m) {
    const double psi = trig_closed_form(c, table.k, m, Trig::Sin);
    table.samples.emplace_back(m, psi);
    if (std::abs(psi) > table.max_abs) {
      table.max_abs = std::abs(psi);
      table.argmax = m;
    }
  }
  table.left_residual = std::abs(table.samples.front().second);
  table.right_residual = std::abs(table.samples.back().second);
  return table;
}

StateCount well_state_count(const Correspondence& c, int points) {
  const WellSpectrum spectrum = infinite_well_spectrum(c, points);
  StateCount count;
  for (const auto& level : spectrum.levels) {
    ++count.total;
    if (level.physical) ++count.physical;
    if (level.convergent) ++count.convergent;
  }
  return count;
}

double well_max_energy_log10_ev(Kind kind, double points, const PhysicalUnits& units) {
  if (!(points >= 2.0)) throw DomainError("the well needs M >= 2 points");
  const double space = energy_bounds(units).space_ev;
  if (kind == Kind::Symmetric) {
    const double top = std::floor(points / 2.0);
    return std::log10(space) + 2.0 * std::log10(std::sin(std::numbers::pi * top / points));
  }
  // tan(pi (M - 1) / (2M)) == cot(pi / (2M)), which stays accurate for huge M.
  const double cot = 1.0 / std::tan(std::numbers::pi / (2.0 * points));
  return std::log10(space) + 2.0 * std::log10(cot);
}

}  // namespace umbral
