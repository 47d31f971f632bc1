#include "commands.hpp"

#include <cmath>
#include <numbers>

#include "umbral/basic_sequence.hpp"
#include "umbral/errors.hpp"
#include "umbral/invariants.hpp"
#include "umbral/schrodinger.hpp"

#ifndef UMBRALQM_VERSION
#define UMBRALQM_VERSION "unknown"
#endif

namespace umbralqm {
namespace {

using umbral::Correspondence;
using umbral::Index;
using umbral::Kind;

std::string kind_name(Kind kind) { return std::string(umbral::to_string(kind)); }

std::vector<Index> lattice(const Window& w) {
  std::vector<Index> m;
  for (Index i = w.min; i <= w.max; ++i) m.push_back(i);
  return m;
}

std::vector<double> positions(const std::vector<Index>& m, double sigma) {
  std::vector<double> x;
  for (Index i : m) x.push_back(static_cast<double>(i) * sigma);
  return x;
}

Table lattice_table(const std::vector<Index>& m, double sigma) {
  Table t;
  t.add("m", std::vector<std::int64_t>(m.begin(), m.end()));
  t.add("x", positions(m, sigma));
  return t;
}

void warn(Table& table, const std::string& text) {
  if (!table.meta.contains("warnings")) table.meta["warnings"] = Json::array();
  table.meta["warnings"].push_back(text);
}

double continuous_trig(umbral::Trig which, double arg) {
  switch (which) {
    case umbral::Trig::Sin: return std::sin(arg);
    case umbral::Trig::Cos: return std::cos(arg);
    case umbral::Trig::Sinh: return std::sinh(arg);
    case umbral::Trig::Cosh: return std::cosh(arg);
  }
  return std::nan("");
}

}  // namespace

Json run_meta(const RunConfig& config, const std::string& command) {
  return Json{{"tool", "umbralqm"},
              {"version", UMBRALQM_VERSION},
              {"command", command},
              {"config",
               {{"sigma", config.sigma},
                {"tau", config.tau},
                {"corr", config.corr_name()},
                {"window", {config.window.min, config.window.max}},
                {"tol", config.tol},
                {"format", config.format == Format::Csv ? "csv" : "json"}}}};
}

Table cmd_polys(const RunConfig& config, const std::vector<int>& orders) {
  config.validate();
  for (int n : orders) {
    if (n < 0) throw ValidationError("polys: order " + std::to_string(n) + " is negative");
    if (n > 100000) throw ValidationError("polys: order " + std::to_string(n) + " exceeds 100000");
  }
  const auto m = lattice(config.window);
  Table t = lattice_table(m, config.sigma);
  const std::vector<double> x = t.reals("x");
  for (int n : orders) {
    std::vector<double> continuous;
    for (double xi : x) continuous.push_back(std::pow(xi, n));
    t.add("continuous_n" + std::to_string(n), std::move(continuous));
    for (Kind kind : config.kinds) {
      const Correspondence c{kind, config.sigma};
      std::vector<double> values;
      for (Index i : m) {
        try {
          values.push_back(umbral::basic_polynomial_value(c, n, i));
        } catch (const umbral::OverflowError&) {
          values.push_back(umbral::basic_polynomial_log_value(c, n, i).value());
        }
      }
      t.add(kind_name(kind) + "_n" + std::to_string(n), std::move(values));
    }
  }
  return t;
}

Table cmd_exp(const RunConfig& config, double k, SeriesMode mode) {
  config.validate();
  if (!std::isfinite(k)) throw ValidationError("exp: k must be finite");
  const double ks = std::abs(k * config.sigma);
  bool series = mode != SeriesMode::Off;
  if (series && ks >= 1.0) {
    const std::string why = "|k sigma| = " + format_real(ks) + " is outside the convergence disk |k sigma| < 1";
    if (mode == SeriesMode::On) throw ValidationError("exp: series requested but " + why);
    series = false;
  }
  const auto m = lattice(config.window);
  Table t = lattice_table(m, config.sigma);
  if (mode == SeriesMode::Auto && !series) {
    warn(t, "series columns omitted (closed form only): |k sigma| = " + format_real(ks) + " >= 1");
  }
  std::vector<double> continuous;
  for (double xi : t.reals("x")) continuous.push_back(std::exp(k * xi));
  t.add("continuous", std::move(continuous));
  for (Kind kind : config.kinds) {
    const Correspondence c{kind, config.sigma};
    std::vector<double> closed, summed;
    std::vector<std::string> status;
    for (Index i : m) {
      try {
        closed.push_back(umbral::umbral_exp(c, k, i).real());
      } catch (const umbral::DomainError&) {
        closed.push_back(HUGE_VAL);  // zero base, negative power
      }
      if (series) {
        const auto r = umbral::umbral_exp_series(c, k, i, config.tol);
        summed.push_back(r.status == umbral::SeriesStatus::Diverged ? std::nan("") : r.value.real());
        status.emplace_back(umbral::to_string(r.status));
      } else {
        status.emplace_back(umbral::to_string(umbral::exp_series_status(c, k, i)));
      }
    }
    t.add(kind_name(kind) + "_closed", std::move(closed));
    if (series) t.add(kind_name(kind) + "_series", std::move(summed));
    t.add(kind_name(kind) + "_status", std::move(status));
  }
  t.meta["k"] = k;
  t.meta["series"] = series;
  return t;
}

Table cmd_trig(const RunConfig& config, const TrigRequest& request) {
  config.validate();
  if (request.k.has_value() == request.l.has_value()) throw ValidationError("trig: give exactly one of --k or --l");
  const bool oscillating = request.which == umbral::Trig::Sin || request.which == umbral::Trig::Cos;
  if (request.l && !oscillating) throw ValidationError("trig: --l only applies to sin and cos");
  if (request.k && !std::isfinite(*request.k)) throw ValidationError("trig: k must be finite");
  if (request.l && !(std::isfinite(*request.l) && *request.l > 0)) throw ValidationError("trig: l must be positive");

  const auto m = lattice(config.window);
  Table t = lattice_table(m, config.sigma);
  const std::vector<double> x = t.reals("x");
  std::vector<double> continuous;
  for (std::size_t i = 0; i < m.size(); ++i) {
    const double arg = request.l ? 2 * std::numbers::pi * static_cast<double>(m[i]) / *request.l : *request.k * x[i];
    continuous.push_back(continuous_trig(request.which, arg));
  }
  t.add("continuous", std::move(continuous));

  Json waves = Json::object();
  for (Kind kind : config.kinds) {
    const Correspondence c{kind, config.sigma};
    Json wave;
    double k = 0;
    if (request.l) {
      const auto spec = umbral::wavelength_to_momentum(c, *request.l);
      k = spec.k;
      wave = {{"k", spec.k}, {"l", spec.l}, {"lambda", spec.lambda}, {"minimal", spec.minimal}};
    } else {
      k = *request.k;
      wave = {{"k", k}};
      const double ks = std::abs(k * c.sigma);
      if (oscillating && ks > 0 && ks <= 1) {
        const double lambda = umbral::momentum_to_wavelength(c, std::abs(k));
        wave["l"] = lambda / c.sigma;
        wave["lambda"] = lambda;
      }
    }
    if (kind != Kind::Symmetric && oscillating && wave.contains("l")) {
      wave["amplitude_growth"] = umbral::amplitude_growth(wave["l"].get<double>(), 1);
    }
    std::vector<double> values;
    for (Index i : m) values.push_back(umbral::umbral_trig(c, k, i, request.which));
    t.add(kind_name(kind), std::move(values));
    waves[kind_name(kind)] = std::move(wave);
  }
  t.meta["function"] = std::string(umbral::to_string(request.which));
  t.meta["waves"] = std::move(waves);
  return t;
}

WellOutput cmd_well(const RunConfig& config, int points, const std::vector<int>& levels) {
  config.validate();
  if (points < 2) throw ValidationError("well: M must be >= 2");
  if (points > 1'000'000) throw ValidationError("well: M must be <= 1000000");
  for (int n : levels) {
    if (n < 1 || 2 * n > points) {
      throw ValidationError("well: level " + std::to_string(n) + " outside 1.." + std::to_string(points / 2));
    }
  }

  WellOutput out;
  std::vector<std::string> corr;
  std::vector<std::int64_t> n_col, partner;
  std::vector<double> k_col, energy, continuous;
  std::vector<bool> physical, convergent;
  const double width = points * config.sigma;
  for (Kind kind : config.kinds) {
    const auto spectrum = umbral::infinite_well_spectrum({kind, config.sigma}, points);
    for (const auto& level : spectrum.levels) {
      corr.push_back(kind_name(kind));
      n_col.push_back(level.n);
      k_col.push_back(level.k);
      energy.push_back(level.energy);
      const double kc = level.n * std::numbers::pi / width;
      continuous.push_back(kc * kc);
      physical.push_back(level.physical);
      convergent.push_back(level.convergent);
      partner.push_back(level.partner);
    }
  }
  out.spectrum.add("correspondence", std::move(corr))
      .add("n", std::move(n_col))
      .add("k", std::move(k_col))
      .add("energy", std::move(energy))
      .add("continuous_energy", std::move(continuous))
      .add("physical", std::move(physical))
      .add("convergent", std::move(convergent))
      .add("partner", std::move(partner));
  out.spectrum.meta["points"] = points;
  out.spectrum.meta["width"] = width;

  std::vector<Index> m;
  for (Index i = 0; i <= points; ++i) m.push_back(i);
  out.wavefunctions = lattice_table(m, config.sigma);
  out.wavefunctions.meta["points"] = points;
  for (Kind kind : config.kinds) {
    const Correspondence c{kind, config.sigma};
    std::vector<int> chosen = levels;
    if (chosen.empty()) {
      for (int n = 1; 2 * n <= points; ++n) {
        if (kind == Kind::Symmetric || 2 * n != points) chosen.push_back(n);
      }
    }
    for (int n : chosen) {
      const auto table = umbral::infinite_well_wavefunction(c, points, n);
      std::vector<double> psi;
      for (const auto& sample : table.samples) psi.push_back(sample.second);
      out.wavefunctions.add(kind_name(kind) + "_n" + std::to_string(n), std::move(psi));
    }
  }
  return out;
}

Table cmd_bounds(const RunConfig& config, const BoundsRequest& request) {
  config.validate();
  double mass = 0;
  if (request.particle == "electron") {
    mass = umbral::constants::electron_mass;
  } else if (request.particle == "proton") {
    mass = umbral::constants::proton_mass;
  } else if (request.particle != "custom") {
    throw ValidationError("bounds: particle must be electron, proton or custom");
  }
  if (request.particle == "custom") {
    if (!request.mass_kg) throw ValidationError("bounds: custom particle needs --mass");
    mass = *request.mass_kg;
  } else if (request.mass_kg) {
    throw ValidationError("bounds: --mass only applies to --particle custom");
  }
  if (!(mass > 0) || !std::isfinite(mass)) throw ValidationError("bounds: mass must be positive");

  umbral::PhysicalUnits units = umbral::planck_units(mass);
  if (config.sigma_set) units.sigma_m = config.sigma;
  if (config.tau_set) units.tau_s = config.tau;
  const auto b = umbral::energy_bounds(units);

  Table t;
  t.add("particle", std::vector<std::string>{request.particle})
      .add("mass_kg", std::vector<double>{mass})
      .add("sigma_m", std::vector<double>{units.sigma_m})
      .add("tau_s", std::vector<double>{units.tau_s})
      .add("time_bound_ev", std::vector<double>{b.time_ev})
      .add("space_bound_ev", std::vector<double>{b.space_ev})
      .add("binding_ev", std::vector<double>{b.binding_ev()})
      .add("binding", std::vector<std::string>{b.time_binds() ? "time" : "space"});
  return t;
}

Table cmd_check() {
  std::vector<std::string> names, details;
  std::vector<bool> passed;
  bool all = true;
  for (const auto& r : umbral::run_invariant_checks()) {
    names.push_back(r.name);
    passed.push_back(r.passed);
    details.push_back(r.detail);
    all = all && r.passed;
  }
  Table t;
  t.add("name", std::move(names)).add("passed", std::move(passed)).add("detail", std::move(details));
  t.meta["all_passed"] = all;
  return t;
}

}  // namespace umbralqm
