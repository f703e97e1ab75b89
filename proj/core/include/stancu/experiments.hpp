#pragma once

// Sweeps behind the command-line harness. Each run returns records sorted by
// (experiment, function, n); writers render them as CSV or JSON Lines.

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "stancu/calculus.hpp"
#include "stancu/field.hpp"

namespace stancu {

enum class OutputFormat { csv, json };

inline constexpr const char* kCsvHeader =
    "experiment,function,n,which,error_mean,error_stderr,grid_m,mc_samples,seed,wall_ms";

struct RunConfig {
  std::vector<std::string> functions;
  std::vector<int> n_list{12, 24, 48, 96};
  Derivative which = Derivative::dx1dx2;
  int grid_m = 128;
  int mc_samples = 32;
  std::uint64_t seed = 7;
  std::optional<double> epsilon;
  Eqle3Variant eqle3_variant = Eqle3Variant::verbatim;
  unsigned threads = 0;  // 0 = hardware concurrency
  bool timing = false;   // wall_ms stays 0 unless set, keeping output byte-stable

  /// Throws ConfigError: empty or non-increasing n_list, n outside
  /// [1, 4095], grid_m < 16, or mc_samples < 2 when `needs_mc`.
  void validate(bool needs_mc) const;
};

struct ConvergenceRecord {
  std::string experiment;
  std::string function;
  int n = 0;
  Derivative which = Derivative::value;
  /// Empty when the cell failed; `failure` then says why.
  std::optional<double> error_mean;
  std::optional<double> error_stderr;
  int grid_m = 0;
  int mc_samples = 0;
  std::uint64_t seed = 0;
  std::int64_t wall_ms = 0;
  bool in_hypothesis = true;
  std::string failure;

  [[nodiscard]] bool failed() const noexcept { return !error_mean.has_value(); }
};

/// E ∫∫ |∂B~_{α,n} f - ∂f| per (function, n); the derivative is config.which
/// (dx1 or dx1dx2). Functions default to {"osc"}.
[[nodiscard]] std::vector<ConvergenceRecord> run_theorem1(const RunConfig& config);

/// eqle1, eqle2, and the selected eqle3 variant per (function, n); with
/// config.epsilon also the mollifier distance ∫∫|f^ε - f| (recorded at n = 0).
/// Functions default to {"poly", "ridge", "osc"}.
[[nodiscard]] std::vector<ConvergenceRecord> run_lemma(const RunConfig& config);

/// Per (function, n): E of the L1 gap between the two mixed differencing
/// orders, and of each order's distance to the analytic f_x1x2.
[[nodiscard]] std::vector<ConvergenceRecord> run_mixed_symmetry(const RunConfig& config);

/// |P_n(f, x) - f(x)| at x ∈ {0.1, 0.25, 0.75, 0.9} for f in
/// {constant, identity, square, step}; function names read "<f>@<x>".
[[nodiscard]] std::vector<ConvergenceRecord> run_lorentz(const RunConfig& config);

[[nodiscard]] const std::vector<std::string>& lorentz_functions();
[[nodiscard]] const std::vector<double>& lorentz_probes();

struct BetaReport {
  int n_max = 0;
  int exhaustive_n_max = 0;
  std::int64_t exhaustive_cases = 0;
  double exhaustive_max_deviation = 0.0;
  std::int64_t sampled_cases = 0;
  double sampled_max_deviation = 0.0;
  int worst_n = 1;
  int worst_k1 = 0;
  int worst_k2 = 0;

  [[nodiscard]] double max_deviation() const noexcept {
    return exhaustive_max_deviation > sampled_max_deviation ? exhaustive_max_deviation : sampled_max_deviation;
  }
};

/// Exhaustive sweep over n <= min(n_max, 64) and, when n_max > 64, 1000
/// random triples (n, k1, k2) with 64 < n <= n_max drawn from `seed`.
[[nodiscard]] BetaReport run_beta_check(int n_max, std::uint64_t seed = 7);
[[nodiscard]] std::vector<ConvergenceRecord> beta_records(const BetaReport& report, std::uint64_t seed);

void sort_records(std::vector<ConvergenceRecord>& records);

/// 17 significant digits, "%.17g".
[[nodiscard]] std::string format_real(double value);

void write_csv_header(std::ostream& out);
void write_records(const std::vector<ConvergenceRecord>& records, OutputFormat format, std::ostream& out);

}  // namespace stancu
