#include "config.hpp"

#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>

#include "umbral/errors.hpp"

namespace umbralqm {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

double parse_real(std::string_view text, std::string_view what) {
  const std::string s(trim(text));
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || errno == ERANGE || !std::isfinite(v)) {
    throw ValidationError(std::string(what) + ": '" + s + "' is not a finite number");
  }
  return v;
}

long long parse_integer(std::string_view text, std::string_view what) {
  const std::string_view s = trim(text);
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ValidationError(std::string(what) + ": '" + std::string(s) + "' is not an integer");
  }
  return v;
}

Window parse_window(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ValidationError("window: expected MIN:MAX, got '" + std::string(text) + "'");
  Window w{parse_integer(text.substr(0, colon), "window min"), parse_integer(text.substr(colon + 1), "window max")};
  if (w.min > w.max) throw ValidationError("window: MIN must not exceed MAX");
  if (static_cast<double>(w.max) - static_cast<double>(w.min) + 1 > kMaxWindowPoints) {
    throw ValidationError("window: more than " + std::to_string(kMaxWindowPoints) + " points");
  }
  return w;
}

std::vector<int> parse_int_list(std::string_view text, std::string_view what) {
  std::vector<int> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view item = trim(text.substr(0, comma));
    // a dash after the first character is a range
    const auto dash = item.find('-', 1);
    if (dash != std::string_view::npos) {
      const long long lo = parse_integer(item.substr(0, dash), what);
      const long long hi = parse_integer(item.substr(dash + 1), what);
      if (lo > hi || hi - lo > 100000) throw ValidationError(std::string(what) + ": bad range '" + std::string(item) + "'");
      for (long long v = lo; v <= hi; ++v) out.push_back(static_cast<int>(v));
    } else {
      const long long v = parse_integer(item, what);
      if (v < -1'000'000'000 || v > 1'000'000'000) throw ValidationError(std::string(what) + ": value out of range");
      out.push_back(static_cast<int>(v));
    }
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  if (out.empty()) throw ValidationError(std::string(what) + ": empty list");
  return out;
}

void RunConfig::set(std::string_view key, std::string_view value) {
  value = trim(value);
  if (key == "sigma") {
    sigma = parse_real(value, "sigma");
    sigma_set = true;
  } else if (key == "tau") {
    tau = parse_real(value, "tau");
    tau_set = true;
  } else if (key == "corr") {
    if (value == "all") {
      kinds.assign(umbral::kAllKinds.begin(), umbral::kAllKinds.end());
    } else {
      try {
        kinds = {umbral::parse_kind(value)};
      } catch (const umbral::DomainError&) {
        throw ValidationError("corr: expected right, left, symmetric or all, got '" + std::string(value) + "'");
      }
    }
  } else if (key == "format") {
    if (value == "csv") {
      format = Format::Csv;
    } else if (value == "json") {
      format = Format::Json;
    } else {
      throw ValidationError("format: expected csv or json, got '" + std::string(value) + "'");
    }
  } else if (key == "out") {
    if (value.empty()) throw ValidationError("out: empty path");
    out = std::filesystem::path(std::string(value));
  } else if (key == "window") {
    window = parse_window(value);
  } else if (key == "tol") {
    tol = parse_real(value, "tol");
  } else {
    throw ValidationError("unknown configuration key '" + std::string(key) + "'");
  }
}

void RunConfig::validate() const {
  if (!(sigma > 0)) throw ValidationError("sigma must be > 0");
  if (!(tau > 0)) throw ValidationError("tau must be > 0");
  if (!(tol > 0)) throw ValidationError("tol must be > 0");
  if (window.min > window.max) throw ValidationError("window: MIN must not exceed MAX");
  if (kinds.empty()) throw ValidationError("no correspondence selected");
}

std::string RunConfig::corr_name() const {
  if (kinds.size() == umbral::kAllKinds.size()) return "all";
  return std::string(umbral::to_string(kinds.front()));
}

void apply_config_file(RunConfig& config, const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read config file " + path.string());
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::string_view view(line);
    if (const auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    view = trim(view);
    if (view.empty()) continue;
    const auto eq = view.find('=');
    if (eq == std::string_view::npos) {
      throw ValidationError(path.string() + ":" + std::to_string(number) + ": expected key = value");
    }
    try {
      config.set(trim(view.substr(0, eq)), view.substr(eq + 1));
    } catch (const ValidationError& e) {
      throw ValidationError(path.string() + ":" + std::to_string(number) + ": " + e.what());
    }
  }
}

}  // namespace umbralqm
