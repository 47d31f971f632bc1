#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "umbral/errors.hpp"

namespace {

using namespace umbralqm;

constexpr int kOk = 0;
constexpr int kInternal = 1;
constexpr int kValidation = 2;

struct Flags {
  std::optional<std::string> sigma, tau, corr, format, out, window, tol;
};

RunConfig resolve(const Flags& flags) {
  RunConfig config;
  if (const char* path = std::getenv("UMBRALQM_CONFIG"); path && *path) apply_config_file(config, path);
  const std::pair<const char*, const std::optional<std::string>*> table[] = {
      {"sigma", &flags.sigma}, {"tau", &flags.tau},       {"corr", &flags.corr}, {"format", &flags.format},
      {"out", &flags.out},     {"window", &flags.window}, {"tol", &flags.tol}};
  for (const auto& [key, value] : table) {
    if (*value) config.set(key, **value);
  }
  config.validate();
  return config;
}

void emit(const Table& table, const RunConfig& config, const std::string& command, std::ostream& out) {
  if (table.meta.contains("warnings")) {
    for (const auto& w : table.meta["warnings"]) std::cerr << "warning: " << w.get<std::string>() << '\n';
  }
  if (config.format == Format::Json) {
    out << table_to_json(table, run_meta(config, command)).dump(2) << '\n';
  } else {
    write_csv(out, table);
  }
  if (!out) throw std::runtime_error("failed writing " + command + " output");
}

void emit_to(const Table& table, const RunConfig& config, const std::string& command,
             const std::optional<std::filesystem::path>& path) {
  if (!path) {
    emit(table, config, command, std::cout);
    return;
  }
  std::ofstream file(*path, std::ios::binary);
  if (!file) throw ValidationError("cannot open output file " + path->string());
  emit(table, config, command, file);
}

void notes_for_csv(const Table& table, const RunConfig& config) {
  // CSV has no room for table-level values; JSON carries them in meta
  if (config.format != Format::Csv) return;
  for (const auto& [key, value] : table.meta.items()) {
    if (key != "warnings") std::cerr << "note: " << key << " = " << value.dump() << '\n';
  }
}

std::filesystem::path sibling(const std::filesystem::path& path, const std::string& suffix) {
  std::filesystem::path out = path;
  out.replace_filename(path.stem().string() + suffix + path.extension().string());
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tabulates umbral difference operators and discrete lattice models", "umbralqm"};
  app.set_version_flag("--version", std::string(UMBRALQM_VERSION));
  app.require_subcommand(1);
  app.fallthrough();

  Flags flags;
  app.add_option("--sigma", flags.sigma, "lattice spacing (bounds: metres, default Planck length)");
  app.add_option("--tau", flags.tau, "time step (bounds: seconds, default Planck time)");
  app.add_option("--corr", flags.corr, "right, left, symmetric or all");
  app.add_option("--format", flags.format, "csv or json");
  app.add_option("--out", flags.out, "output file (default stdout)");
  app.add_option("--window", flags.window, "lattice index range MIN:MAX");
  app.add_option("--tol", flags.tol, "relative series tolerance");

  auto* polys = app.add_subcommand("polys", "basic polynomials x^(n) on the lattice");
  std::string orders;
  polys->add_option("-n,--n,--orders", orders, "orders, e.g. 2,3 or 0-4")->required();

  auto* exp = app.add_subcommand("exp", "discrete exponential, closed form and series");
  double k_exp = 0;
  std::string series = "auto";
  exp->add_option("-k,--k,--momentum", k_exp, "k")->required();
  exp->add_option("--series", series, "auto, on or off")->check(CLI::IsMember({"auto", "on", "off"}));

  auto* trig = app.add_subcommand("trig", "discrete sin, cos, sinh, cosh");
  std::optional<double> k_trig, l_trig;
  std::string fn = "sin";
  auto* k_opt = trig->add_option("-k,--k,--momentum", k_trig, "momentum k");
  trig->add_option("-l,--l,--points-per-wave", l_trig, "points per wavelength l")->excludes(k_opt);
  trig->add_option("--fn", fn, "sin, cos, sinh or cosh");

  auto* well = app.add_subcommand("well", "infinite well spectrum and wave functions");
  int points = 0;
  std::string levels, table_choice = "spectrum";
  well->add_option("-M,--M,--points", points, "points in the well, L = M sigma")->required();
  well->add_option("--levels", levels, "levels to tabulate, e.g. 1-3");
  well->add_option("--table", table_choice, "table written to stdout without --out")
      ->check(CLI::IsMember({"spectrum", "wavefunctions"}));

  auto* bounds = app.add_subcommand("bounds", "upper energy limits from sigma and tau");
  std::string particle = "electron";
  std::optional<double> mass;
  bounds->add_option("--particle", particle, "electron, proton or custom");
  bounds->add_option("--mass", mass, "mass in kg for --particle custom");

  auto* check = app.add_subcommand("check", "run the invariant suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kValidation;
  }

  try {
    const RunConfig config = resolve(flags);
    if (polys->parsed()) {
      const Table t = cmd_polys(config, parse_int_list(orders, "orders"));
      emit_to(t, config, "polys", config.out);
    } else if (exp->parsed()) {
      const SeriesMode mode = series == "on" ? SeriesMode::On : series == "off" ? SeriesMode::Off : SeriesMode::Auto;
      const Table t = cmd_exp(config, k_exp, mode);
      notes_for_csv(t, config);
      emit_to(t, config, "exp", config.out);
    } else if (trig->parsed()) {
      TrigRequest request{k_trig, l_trig, umbral::Trig::Sin};
      try {
        request.which = umbral::parse_trig(fn);
      } catch (const umbral::DomainError&) {
        throw ValidationError("--fn: expected sin, cos, sinh or cosh");
      }
      const Table t = cmd_trig(config, request);
      notes_for_csv(t, config);
      emit_to(t, config, "trig", config.out);
    } else if (well->parsed()) {
      const WellOutput w = cmd_well(config, points, levels.empty() ? std::vector<int>{} : parse_int_list(levels, "levels"));
      if (config.out) {
        emit_to(w.spectrum, config, "well", config.out);
        emit_to(w.wavefunctions, config, "well", sibling(*config.out, "_wavefunctions"));
      } else {
        emit_to(table_choice == "spectrum" ? w.spectrum : w.wavefunctions, config, "well", std::nullopt);
      }
    } else if (bounds->parsed()) {
      emit_to(cmd_bounds(config, {particle, mass}), config, "bounds", config.out);
    } else if (check->parsed()) {
      const Table t = cmd_check();
      emit_to(t, config, "check", config.out);
      if (!t.meta["all_passed"].get<bool>()) {
        std::cerr << "error: invariant checks failed\n";
        return kInternal;
      }
    }
    return kOk;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kValidation;
  } catch (const umbral::ConsistencyError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const umbral::Error& e) {
    // domain, overflow, window and non-physical-state errors all stem from the input
    std::cerr << "error: " << e.what() << '\n';
    return kValidation;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}
