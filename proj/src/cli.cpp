#include "qeur/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "qeur/error.hpp"
#include "qeur/sweep.hpp"

namespace qeur::cli {

namespace {

namespace fs = std::filesystem;
using io::Json;

struct Options {
  std::string state;
  std::string x = "sigma_x";
  std::string z = "sigma_z";
  std::string format;  // empty: csv for sweep, json elsewhere
  std::string out;
  std::string preset;
  std::string spec;
  bool with_discord = false;
  bool echo_state = false;
  OptimizerConfig optimizer;
};

DensityMatrix load_state(const Options& opt) {
  if (opt.state.empty()) throw io::InputError("--state is required");
  return build(io::parse_state(io::load_json_argument(opt.state)));
}

void emit(const Json& report, const Options& opt, std::ostream& out) {
  if (opt.format == "table") {
    out << io::render_table(report);
  } else if (opt.format.empty() || opt.format == "json") {
    out << report.dump(2) << '\n';
  } else {
    throw io::InputError("--format " + opt.format + " is not available for this command");
  }
}

int cmd_bounds(const Options& opt, std::ostream& out) {
  const DensityMatrix rho = load_state(opt);
  const auto x = io::parse_observable(io::observable_argument(opt.x), rho);
  const auto z = io::parse_observable(io::observable_argument(opt.z), rho);
  std::optional<CorrelationReport> corr;
  if (opt.with_discord) corr = classical_correlation(rho, opt.optimizer);
  Json report = io::to_json(bounds_report(rho, x, z, corr));
  if (opt.echo_state) report["state"] = io::state_to_json(rho);
  emit(report, opt, out);
  return 0;
}

int cmd_discord(const Options& opt, std::ostream& out) {
  emit(io::to_json(classical_correlation(load_state(opt), opt.optimizer)), opt, out);
  return 0;
}

int cmd_apps(const Options& opt, std::ostream& out) {
  const DensityMatrix rho = load_state(opt);
  const auto x = io::parse_observable(io::observable_argument(opt.x), rho);
  const auto z = io::parse_observable(io::observable_argument(opt.z), rho);
  emit(io::to_json(applications_report(rho, x, z)), opt, out);
  return 0;
}

int cmd_validate(const Options& opt, std::ostream& out) {
  if (opt.state.empty()) throw io::InputError("--state is required");
  const auto spec = io::parse_state(io::load_json_argument(opt.state));
  ValidationReport report;
  if (const auto* e = std::get_if<family::Explicit>(&spec)) {
    report = validate(e->mat, e->dims);
  } else {
    report = validate(build(spec));
  }
  emit(io::to_json(report), opt, out);
  return report.ok() ? 0 : 2;
}

std::string sweep_output_path(const Options& opt, std::size_t index, std::size_t count) {
  fs::path base = opt.out.empty() ? fs::path((opt.preset.empty() ? "sweep" : opt.preset) +
                                             std::string(opt.format == "json" ? ".json" : ".csv"))
                                  : fs::path(opt.out);
  if (count == 1) return base.string();
  const auto ext = base.extension().string();
  base.replace_extension();
  return base.string() + "_" + std::to_string(index + 1) + ext;
}

int cmd_sweep(const Options& opt, std::ostream& out) {
  if (opt.preset.empty() == opt.spec.empty()) {
    throw io::InputError("sweep needs exactly one of --preset or --spec");
  }
  auto spec = opt.preset.empty() ? sweep::parse_spec(io::load_json_argument(opt.spec))
                                 : sweep::preset(opt.preset);
  if (!opt.preset.empty()) spec.optimizer = opt.optimizer;
  sweep::check(spec);
  const bool csv = opt.format.empty() || opt.format == "csv";
  if (!csv && opt.format != "json") {
    throw io::InputError("sweep writes csv or json, not " + opt.format);
  }
  if (opt.out == "-" && spec.pairs.size() != 1) {
    throw io::InputError("--out - needs a sweep with a single observable pair");
  }

  // Everything is computed before the first file is touched.
  std::vector<std::string> documents;
  for (const auto& pair : spec.pairs) {
    const auto rows = sweep::run(spec, pair);
    documents.push_back(csv ? sweep::to_csv(rows)
                                            : sweep::to_json(rows, spec.family, pair).dump(2) + "\n");
  }
  if (opt.out == "-") {
    out << documents.front();
    return 0;
  }
  std::vector<fs::path> written;
  try {
    for (std::size_t i = 0; i < documents.size(); ++i) {
      const fs::path target = sweep_output_path(opt, i, documents.size());
      const fs::path tmp = target.string() + ".tmp";
      {
        std::ofstream file(tmp, std::ios::binary | std::ios::trunc);
        if (!file) throw io::InputError("cannot write " + tmp.string());
        file << documents[i];
        if (!file.flush()) {
          fs::remove(tmp);
          throw io::InputError("failed writing " + tmp.string());
        }
      }
      fs::rename(tmp, target);
      written.push_back(target);
      out << target.string() << '\n';
    }
  } catch (...) {
    for (const auto& p : written) fs::remove(p);
    throw;
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Entropic uncertainty bounds in the presence of quantum memory", "qeur"};
  app.require_subcommand(1);
  Options opt;

  app.add_option("--state", opt.state, "State JSON file (or inline JSON)");
  app.add_option("--x", opt.x, "First observable: sigma_x|sigma_y|sigma_z|ranked1..3 or JSON")
      ->capture_default_str();
  app.add_option("--z", opt.z, "Second observable, same forms as --x")->capture_default_str();
  app.add_option("--format", opt.format, "json | table | csv (sweep defaults to csv, others to json)")
      ->check(CLI::IsMember({"json", "table", "csv"}));
  app.add_option("--out", opt.out, "Sweep output path ('-' for standard output)");
  app.add_flag("--with-discord", opt.with_discord, "Run the discord optimizer and fill bound_pati");
  app.add_flag("--echo-state", opt.echo_state, "Include the ingested state in the bounds report");
  app.add_option("--grid-theta", opt.optimizer.grid_theta, "Optimizer grid points in theta")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--grid-phi", opt.optimizer.grid_phi, "Optimizer grid points in phi")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--refine-tol", opt.optimizer.refine_tol, "Pattern-search step tolerance")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--preset", opt.preset, "Sweep preset: fig1a | fig1b | fig2")
      ->check(CLI::IsMember({"fig1a", "fig1b", "fig2"}));
  app.add_option("--spec", opt.spec, "Sweep specification JSON file (or inline JSON)");

  auto* bounds = app.add_subcommand("bounds", "All uncertainty bounds for one state and pair");
  auto* sweep_cmd = app.add_subcommand("sweep", "Bounds over a one-parameter family, as CSV");
  auto* discord = app.add_subcommand("discord", "Classical correlation and discord (qubit A)");
  auto* apps = app.add_subcommand("apps", "Entanglement witness, E_f and common-randomness bounds");
  auto* validate_cmd = app.add_subcommand("validate", "Check density-matrix invariants");
  for (auto* sub : {bounds, sweep_cmd, discord, apps, validate_cmd}) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (bounds->parsed()) return cmd_bounds(opt, out);
    if (sweep_cmd->parsed()) return cmd_sweep(opt, out);
    if (discord->parsed()) return cmd_discord(opt, out);
    if (apps->parsed()) return cmd_apps(opt, out);
    return cmd_validate(opt, out);
  } catch (const io::InputError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const DimensionError& e) {
    err << "error: dimension invariant violated: " << e.what() << '\n';
  } catch (const UnsupportedError& e) {
    err << "error: unsupported: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return 2;
}

}  // namespace qeur::cli
