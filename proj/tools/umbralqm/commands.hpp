#pragma once

#include <optional>
#include <string>
#include <vector>

#include "config.hpp"
#include "table.hpp"
#include "umbral/special_functions.hpp"

namespace umbralqm {

/// m, x, then continuous_n<n> and <corr>_n<n> per requested order.
Table cmd_polys(const RunConfig& config, const std::vector<int>& orders);

enum class SeriesMode { Auto, On, Off };

/// m, x, continuous, <corr>_closed, <corr>_series, <corr>_status.
/// Auto drops the series columns with a warning once |k sigma| >= 1; On refuses instead.
Table cmd_exp(const RunConfig& config, double k, SeriesMode mode = SeriesMode::Auto);

struct TrigRequest {
  std::optional<double> k;
  std::optional<double> l;  // points per wavelength, converted per correspondence
  umbral::Trig which = umbral::Trig::Sin;
};

/// m, x, continuous, <corr>; wave parameters per correspondence go to meta.
Table cmd_trig(const RunConfig& config, const TrigRequest& request);

struct WellOutput {
  Table spectrum;       // one row per (correspondence, n)
  Table wavefunctions;  // m, x, <corr>_n<n>
};

/// Empty `levels` means every physical level.
WellOutput cmd_well(const RunConfig& config, int points, const std::vector<int>& levels);

struct BoundsRequest {
  std::string particle = "electron";  // electron, proton, custom
  std::optional<double> mass_kg;
};

/// sigma and tau default to the Planck length and time unless set explicitly.
Table cmd_bounds(const RunConfig& config, const BoundsRequest& request);

/// name, passed, detail; meta.all_passed.
Table cmd_check();

/// meta block shared by every command.
Json run_meta(const RunConfig& config, const std::string& command);

}  // namespace umbralqm
