// stancu: convergence experiments for Bernstein and randomized
// Bernstein–Stancu operators on the unit square.
//
// Exit codes: 0 success, 1 configuration error, 2 numeric failure in >= 1 cell.

#include <CLI11.hpp>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "stancu/errors.hpp"
#include "stancu/experiments.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitNumeric = 2;

struct CliOptions {
  std::vector<std::string> functions;
  std::string which = "dx1dx2";
  std::vector<int> n_list{12, 24, 48, 96};
  int grid = 128;
  int mc = 32;
  std::uint64_t seed = 7;
  double epsilon = 0.0;
  std::string eqle3_variant = "verbatim";
  std::string out;
  std::string format = "csv";
  unsigned threads = 0;
  bool timing = false;
  int n_max = 1024;
};

stancu::RunConfig to_config(const CliOptions& o, const CLI::App& sub) {
  stancu::RunConfig config;
  config.functions = o.functions;
  config.n_list = o.n_list;
  config.grid_m = o.grid;
  config.mc_samples = o.mc;
  config.seed = o.seed;
  config.threads = o.threads;
  config.timing = o.timing;
  if (const auto* eps = sub.get_option_no_throw("--epsilon"); eps != nullptr && eps->count() > 0) {
    config.epsilon = o.epsilon;
  }
  const auto which = stancu::parse_derivative(o.which);
  if (!which) {
    throw stancu::ConfigError("unknown --which '" + o.which + "'");
  }
  config.which = *which;
  const auto variant = stancu::parse_eqle3_variant(o.eqle3_variant);
  if (!variant) {
    throw stancu::ConfigError("unknown --eqle3-variant '" + o.eqle3_variant + "'");
  }
  config.eqle3_variant = *variant;
  return config;
}

/// Appends to `path`; the CSV header is written only when the file is new or empty.
int emit(const std::vector<stancu::ConvergenceRecord>& records, const CliOptions& o) {
  const auto format = o.format == "json" ? stancu::OutputFormat::json : stancu::OutputFormat::csv;
  std::ostringstream buffer;
  bool header = format == stancu::OutputFormat::csv;
  if (!o.out.empty()) {
    std::error_code ec;
    const auto size = std::filesystem::file_size(o.out, ec);
    header = header && (ec || size == 0);
  }
  if (header) {
    stancu::write_csv_header(buffer);
  }
  stancu::write_records(records, format, buffer);

  if (o.out.empty()) {
    std::cout << buffer.str() << std::flush;
  } else {
    std::ofstream file(o.out, std::ios::app | std::ios::binary);
    if (!file) {
      std::cerr << "error: cannot open output file '" << o.out << "'\n";
      return kExitConfig;
    }
    file << buffer.str();
  }

  int status = kExitOk;
  for (const auto& r : records) {
    if (r.failed()) {
      std::cerr << "numeric failure in " << r.experiment << '/' << r.function << "/n=" << r.n << ": " << r.failure
                << '\n';
      status = kExitNumeric;
    }
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bernstein and randomized Bernstein-Stancu convergence experiments"};
  app.require_subcommand(1);
  CliOptions o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", o.out, "Append results to this file (default: stdout)");
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--seed", o.seed, "Base seed of the sample substreams");
  };
  auto add_sweep = [&](CLI::App* sub) {
    add_common(sub);
    sub->add_option("--function", o.functions, "Comma-separated function names")->delimiter(',');
    sub->add_option("--n", o.n_list, "Strictly increasing comma-separated degrees")->delimiter(',');
    sub->add_option("--grid", o.grid, "Midpoint grid points per axis");
    sub->add_option("--threads", o.threads, "Worker threads (0 = all hardware threads)");
    sub->add_flag("--timing", o.timing, "Record wall_ms (otherwise 0, keeping output byte-stable)");
  };

  auto* theorem1 = app.add_subcommand("theorem1", "E of the L1 derivative error of the Stancu operator");
  add_sweep(theorem1);
  theorem1->add_option("--which", o.which, "Derivative to measure")->check(CLI::IsMember({"dx1", "dx1dx2"}));
  theorem1->add_option("--mc", o.mc, "Monte-Carlo samples of the shift");

  auto* lemma = app.add_subcommand("lemma", "L1 errors of the difference-quotient functionals");
  add_sweep(lemma);
  lemma->add_option("--epsilon", o.epsilon, "Also report the L1 distance to the mollified field");
  lemma->add_option("--eqle3-variant", o.eqle3_variant, "Third functional as printed or corrected")
      ->check(CLI::IsMember({"verbatim", "corrected"}));

  auto* mixed = app.add_subcommand("mixed-symmetry", "Compare the two mixed differencing orders");
  add_sweep(mixed);
  mixed->add_option("--mc", o.mc, "Monte-Carlo samples of the shift");

  auto* lorentz = app.add_subcommand("lorentz", "Pointwise error of the Lorentz integral polynomial");
  add_sweep(lorentz);

  auto* beta = app.add_subcommand("beta-check", "Sweep of the Beta weight identity");
  add_common(beta);
  beta->add_option("--n-max", o.n_max, "Largest degree covered");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*beta) {
      const auto report = stancu::run_beta_check(o.n_max, o.seed);
      return emit(stancu::beta_records(report, o.seed), o);
    }
    CLI::App* sub = app.get_subcommands().front();
    const stancu::RunConfig config = to_config(o, *sub);
    if (*theorem1) {
      return emit(stancu::run_theorem1(config), o);
    }
    if (*lemma) {
      return emit(stancu::run_lemma(config), o);
    }
    if (*mixed) {
      return emit(stancu::run_mixed_symmetry(config), o);
    }
    return emit(stancu::run_lorentz(config), o);
  } catch (const stancu::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumeric;
  }
}
