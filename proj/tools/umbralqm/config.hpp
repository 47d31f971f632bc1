#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "umbral/correspondence.hpp"

namespace umbralqm {

/// Bad user input; maps to exit code 2.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { Csv, Json };

struct Window {
  umbral::Index min = -10;
  umbral::Index max = 10;
};

struct RunConfig {
  double sigma = 1.0;
  double tau = 1.0;
  bool sigma_set = false;  // bounds falls back to the Planck scales otherwise
  bool tau_set = false;
  std::vector<umbral::Kind> kinds{umbral::kAllKinds.begin(), umbral::kAllKinds.end()};
  Format format = Format::Csv;
  std::optional<std::filesystem::path> out;
  Window window;
  double tol = 1e-10;

  /// Sets one key from its text form ("sigma", "tau", "corr", "format", "out", "window", "tol").
  void set(std::string_view key, std::string_view value);
  void validate() const;
  std::string corr_name() const;
};

inline constexpr std::size_t kMaxWindowPoints = 1'000'000;

/// Flat key = value file; '#' starts a comment.
void apply_config_file(RunConfig& config, const std::filesystem::path& path);

double parse_real(std::string_view text, std::string_view what);
long long parse_integer(std::string_view text, std::string_view what);
Window parse_window(std::string_view text);
/// "1,2,5" or ranges "1-4".
std::vector<int> parse_int_list(std::string_view text, std::string_view what);

}  // namespace umbralqm
