#include "stancu/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <json.hpp>
#include <tuple>

#include "stancu/bernstein.hpp"
#include "stancu/corpus.hpp"
#include "stancu/errors.hpp"
#include "stancu/quadrature.hpp"
#include "stancu/rng.hpp"
#include "stancu/stancu.hpp"

namespace stancu {

void RunConfig::validate(bool needs_mc) const {
  if (n_list.empty()) {
    throw ConfigError("n list must not be empty");
  }
  for (std::size_t i = 0; i < n_list.size(); ++i) {
    if (n_list[i] < 1 || n_list[i] >= BasisCache::default_max_n) {
      throw ConfigError("n must lie in [1, " + std::to_string(BasisCache::default_max_n - 1) + "], got " +
                        std::to_string(n_list[i]));
    }
    if (i > 0 && n_list[i] <= n_list[i - 1]) {
      throw ConfigError("n list must be strictly increasing");
    }
  }
  if (grid_m < 16) {
    throw ConfigError("grid must have at least 16 points per axis, got " + std::to_string(grid_m));
  }
  if (needs_mc && mc_samples < 2) {
    throw ConfigError("Monte-Carlo estimates need at least 2 samples, got " + std::to_string(mc_samples));
  }
  if (epsilon) {
    MollifierSpec{*epsilon}.validate();
  }
}

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t elapsed_ms(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

std::vector<const CorpusEntry*> select_functions(const RunConfig& config, std::vector<std::string> defaults) {
  const auto& names = config.functions.empty() ? defaults : config.functions;
  std::vector<const CorpusEntry*> out;
  out.reserve(names.size());
  for (const auto& name : names) {
    out.push_back(&corpus_entry(name));
  }
  return out;
}

void require_partials(const CorpusEntry& entry, std::initializer_list<Derivative> partials) {
  for (Derivative which : partials) {
    if (which != Derivative::value && !entry.field.has(which)) {
      throw ConfigError("function '" + entry.name() + "' has no analytic " + std::string(to_string(which)) +
                        " partial");
    }
  }
}

/// Runs `body` and stores its result in the record, turning numeric and
/// domain failures into an empty cell.
void fill_cell(ConvergenceRecord& record, const RunConfig& config, const std::function<McEstimate()>& body) {
  const auto start = Clock::now();
  try {
    const McEstimate estimate = body();
    record.error_mean = estimate.mean;
    record.error_stderr = estimate.std_error;
  } catch (const NumericError& e) {
    record.failure = e.what();
  } catch (const DomainError& e) {
    record.failure = e.what();
  }
  record.wall_ms = config.timing ? elapsed_ms(start) : 0;
}

McEstimate exact(double value) { return {value, 0.0, 1, 0}; }

ConvergenceRecord make_record(std::string experiment, const CorpusEntry& entry, int n, Derivative which,
                              const RunConfig& config, bool monte_carlo) {
  ConvergenceRecord r;
  r.experiment = std::move(experiment);
  r.function = entry.name();
  r.n = n;
  r.which = which;
  r.grid_m = config.grid_m;
  r.mc_samples = monte_carlo ? config.mc_samples : 0;
  r.seed = monte_carlo ? config.seed : 0;
  r.in_hypothesis = entry.satisfies(which);
  return r;
}

int cache_size(const RunConfig& config) { return config.n_list.back() + 1; }

}  // namespace

std::vector<ConvergenceRecord> run_theorem1(const RunConfig& config) {
  config.validate(true);
  if (config.which != Derivative::dx1 && config.which != Derivative::dx1dx2) {
    throw ConfigError("theorem1 measures dx1 or dx1dx2, got " + std::string(to_string(config.which)));
  }
  const auto functions = select_functions(config, {"osc"});
  for (const auto* entry : functions) {
    require_partials(*entry, {config.which});
  }

  const BasisCache cache(cache_size(config));
  const GridSpec grid(config.grid_m);
  const ParallelOptions parallel{config.threads};
  const auto shifts = draw_shifts(config.seed, config.mc_samples);

  std::vector<ConvergenceRecord> records;
  for (const auto* entry : functions) {
    const PlaneFunction reference = entry->field.function(config.which);
    for (int n : config.n_list) {
      auto record = make_record("theorem1", *entry, n, config.which, config, true);
      fill_cell(record, config, [&] {
        const StancuL1Kernel kernel(cache, entry->field, reference, config.which, n, grid);
        return estimate_expectation(shifts, config.seed, std::cref(kernel), parallel);
      });
      records.push_back(std::move(record));
    }
  }
  sort_records(records);
  return records;
}

std::vector<ConvergenceRecord> run_lemma(const RunConfig& config) {
  config.validate(false);
  const auto functions = select_functions(config, {"poly", "ridge", "osc"});
  for (const auto* entry : functions) {
    require_partials(*entry, {Derivative::dx1, Derivative::dx2, Derivative::dx1dx2});
  }

  const GridSpec grid(config.grid_m);
  const std::string eqle3_tag = "lemma-eqle3-" + std::string(to_string(config.eqle3_variant));

  std::vector<ConvergenceRecord> records;
  for (const auto* entry : functions) {
    const ScalarField2& f = entry->field;
    for (int n : config.n_list) {
      auto eqle1 = make_record("lemma-eqle1", *entry, n, Derivative::dx1, config, false);
      fill_cell(eqle1, config, [&] { return exact(lemma_eqle1_error(f, n, grid)); });
      records.push_back(std::move(eqle1));

      auto eqle2 = make_record("lemma-eqle2", *entry, n, Derivative::dx1dx2, config, false);
      fill_cell(eqle2, config, [&] { return exact(lemma_eqle2_error(f, n, grid)); });
      records.push_back(std::move(eqle2));

      auto eqle3 = make_record(eqle3_tag, *entry, n, Derivative::dx1dx2, config, false);
      fill_cell(eqle3, config, [&] { return exact(lemma_eqle3_error(f, n, grid, config.eqle3_variant)); });
      records.push_back(std::move(eqle3));
    }
    if (config.epsilon) {
      auto mollifier = make_record("mollifier-l1", *entry, 0, Derivative::value, config, false);
      fill_cell(mollifier, config, [&] {
        const ScalarField2 smooth = mollify(f, MollifierSpec{*config.epsilon});
        return exact(l1_norm_2d([&](double x1, double x2) { return smooth.eval(x1, x2) - f.eval(x1, x2); }, grid));
      });
      records.push_back(std::move(mollifier));
    }
  }
  sort_records(records);
  return records;
}

std::vector<ConvergenceRecord> run_mixed_symmetry(const RunConfig& config) {
  config.validate(true);
  const auto functions = select_functions(config, {"osc"});
  for (const auto* entry : functions) {
    require_partials(*entry, {Derivative::dx1dx2});
  }

  const BasisCache cache(cache_size(config));
  const GridSpec grid(config.grid_m);
  const ParallelOptions parallel{config.threads};
  const auto shifts = draw_shifts(config.seed, config.mc_samples);
  const std::size_t samples = shifts.size();

  std::vector<ConvergenceRecord> records;
  for (const auto* entry : functions) {
    const PlaneFunction reference = entry->field.function(Derivative::dx1dx2);
    for (int n : config.n_list) {
      auto gap = make_record("mixed-symmetry-gap", *entry, n, Derivative::dx1dx2, config, true);
      auto first = make_record("mixed-symmetry-d1d2", *entry, n, Derivative::dx1dx2, config, true);
      auto second = make_record("mixed-symmetry-d2d1", *entry, n, Derivative::dx1dx2, config, true);

      // Columns per sample: gap, d1d2 distance, d2d1 distance.
      std::vector<double> gaps(samples), dist_first(samples), dist_second(samples);
      std::string failure;
      const auto start = Clock::now();
      try {
        const StancuL1Kernel k12(cache, entry->field, reference, Derivative::dx1dx2, n, grid,
                                 MixedOrder::delta1_of_delta2);
        const StancuL1Kernel k21(cache, entry->field, reference, Derivative::dx1dx2, n, grid,
                                 MixedOrder::delta2_of_delta1);
        const auto& ref = k12.reference_values();
        parallel_for(samples, parallel, [&](std::size_t s) {
          const auto a = k12.operator_values(shifts[s]);
          const auto b = k21.operator_values(shifts[s]);
          std::vector<double> diff(a.size());
          for (std::size_t i = 0; i < a.size(); ++i) {
            diff[i] = a[i] - b[i];
          }
          gaps[s] = l1_norm_values(diff, grid);
          for (std::size_t i = 0; i < a.size(); ++i) {
            diff[i] = a[i] - ref[i];
          }
          dist_first[s] = l1_norm_values(diff, grid);
          for (std::size_t i = 0; i < a.size(); ++i) {
            diff[i] = b[i] - ref[i];
          }
          dist_second[s] = l1_norm_values(diff, grid);
        });
      } catch (const NumericError& e) {
        failure = e.what();
      } catch (const DomainError& e) {
        failure = e.what();
      }
      const std::int64_t wall = config.timing ? elapsed_ms(start) : 0;
      for (auto [record, values] : {std::pair{&gap, &gaps}, std::pair{&first, &dist_first},
                                    std::pair{&second, &dist_second}}) {
        record->wall_ms = wall;
        if (failure.empty()) {
          const McEstimate estimate = summarize(*values, config.seed);
          record->error_mean = estimate.mean;
          record->error_stderr = estimate.std_error;
        } else {
          record->failure = failure;
        }
      }
      records.push_back(std::move(gap));
      records.push_back(std::move(first));
      records.push_back(std::move(second));
    }
  }
  sort_records(records);
  return records;
}

const std::vector<std::string>& lorentz_functions() {
  static const std::vector<std::string> names{"constant", "identity", "square", "step"};
  return names;
}

const std::vector<double>& lorentz_probes() {
  static const std::vector<double> probes{0.1, 0.25, 0.75, 0.9};
  return probes;
}

namespace {

LineFunction lorentz_function(const std::string& name) {
  if (name == "constant") {
    return [](double) { return 1.0; };
  }
  if (name == "identity") {
    return [](double t) { return t; };
  }
  if (name == "square") {
    return [](double t) { return t * t; };
  }
  if (name == "step") {
    return [](double t) { return t >= 0.5 ? 1.0 : 0.0; };
  }
  throw ConfigError("unknown Lorentz function '" + name + "' (expected constant|identity|square|step)");
}

std::string probe_label(const std::string& name, double x) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%s@%g", name.c_str(), x);
  return buffer;
}

}  // namespace

std::vector<ConvergenceRecord> run_lorentz(const RunConfig& config) {
  config.validate(false);
  const auto& names = config.functions.empty() ? lorentz_functions() : config.functions;
  std::vector<LineFunction> fns;
  for (const auto& name : names) {
    fns.push_back(lorentz_function(name));
  }
  const BasisCache cache(cache_size(config));

  std::vector<ConvergenceRecord> records;
  for (std::size_t f = 0; f < names.size(); ++f) {
    for (int n : config.n_list) {
      std::optional<LorentzPolynomial> pn;
      std::string failure;
      const auto start = Clock::now();
      try {
        pn.emplace(cache, fns[f], n);
      } catch (const NumericError& e) {
        failure = e.what();
      }
      const std::int64_t wall = config.timing ? elapsed_ms(start) : 0;
      for (double x : lorentz_probes()) {
        ConvergenceRecord r;
        r.experiment = "lorentz";
        r.function = probe_label(names[f], x);
        r.n = n;
        r.which = Derivative::value;
        r.grid_m = 0;
        r.wall_ms = wall;
        if (pn) {
          r.error_mean = std::abs((*pn)(x) - fns[f](x));
          r.error_stderr = 0.0;
        } else {
          r.failure = failure;
        }
        records.push_back(std::move(r));
      }
    }
  }
  sort_records(records);
  return records;
}

BetaReport run_beta_check(int n_max, std::uint64_t seed) {
  if (n_max < 1) {
    throw ConfigError("beta-check needs n_max >= 1");
  }
  if (n_max >= BasisCache::default_max_n) {
    throw ConfigError("beta-check n_max must be below " + std::to_string(BasisCache::default_max_n));
  }
  const BasisCache cache(n_max);
  BetaReport report;
  report.n_max = n_max;
  report.exhaustive_n_max = std::min(n_max, 64);

  auto consider = [&](int n, int k1, int k2, double& worst) {
    const double deviation = std::abs(beta_weight_identity(cache, n, k1, k2) - 1.0);
    if (deviation > worst) {
      worst = deviation;
    }
    if (deviation > report.max_deviation() || (report.exhaustive_cases + report.sampled_cases) == 0) {
      report.worst_n = n;
      report.worst_k1 = k1;
      report.worst_k2 = k2;
    }
  };

  for (int n = 1; n <= report.exhaustive_n_max; ++n) {
    for (int k1 = 0; k1 < n; ++k1) {
      for (int k2 = 0; k2 < n; ++k2) {
        consider(n, k1, k2, report.exhaustive_max_deviation);
        ++report.exhaustive_cases;
      }
    }
  }
  if (n_max > 64) {
    SplitMix64 rng(substream_seed(seed, 0));
    const auto span = static_cast<std::uint64_t>(n_max - 64);
    for (int i = 0; i < 1000; ++i) {
      const int n = 65 + static_cast<int>(rng() % span);
      const int k1 = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
      const int k2 = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
      consider(n, k1, k2, report.sampled_max_deviation);
      ++report.sampled_cases;
    }
  }
  return report;
}

std::vector<ConvergenceRecord> beta_records(const BetaReport& report, std::uint64_t seed) {
  std::vector<ConvergenceRecord> records;
  auto add = [&](std::string name, int n, double deviation) {
    ConvergenceRecord r;
    r.experiment = "beta-check";
    r.function = std::move(name);
    r.n = n;
    r.which = Derivative::value;
    r.error_mean = deviation;
    r.error_stderr = 0.0;
    r.seed = seed;
    records.push_back(std::move(r));
  };
  add("exhaustive", report.exhaustive_n_max, report.exhaustive_max_deviation);
  if (report.sampled_cases > 0) {
    add("sampled", report.n_max, report.sampled_max_deviation);
  }
  sort_records(records);
  return records;
}

void sort_records(std::vector<ConvergenceRecord>& records) {
  std::stable_sort(records.begin(), records.end(), [](const ConvergenceRecord& a, const ConvergenceRecord& b) {
    return std::tie(a.experiment, a.function, a.n) < std::tie(b.experiment, b.function, b.n);
  });
}

std::string format_real(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

void write_csv_header(std::ostream& out) { out << kCsvHeader << '\n'; }

namespace {

void write_csv_row(const ConvergenceRecord& r, std::ostream& out) {
  out << r.experiment << ',' << r.function << ',' << r.n << ',' << to_string(r.which) << ',';
  if (r.error_mean) {
    out << format_real(*r.error_mean);
  }
  out << ',';
  if (r.error_stderr) {
    out << format_real(*r.error_stderr);
  }
  out << ',' << r.grid_m << ',' << r.mc_samples << ',' << r.seed << ',' << r.wall_ms << '\n';
}

void write_json_row(const ConvergenceRecord& r, std::ostream& out) {
  nlohmann::ordered_json j;
  j["experiment"] = r.experiment;
  j["function"] = r.function;
  j["n"] = r.n;
  j["which"] = std::string(to_string(r.which));
  j["error_mean"] = r.error_mean ? nlohmann::ordered_json(*r.error_mean) : nlohmann::ordered_json(nullptr);
  j["error_stderr"] = r.error_stderr ? nlohmann::ordered_json(*r.error_stderr) : nlohmann::ordered_json(nullptr);
  j["grid_m"] = r.grid_m;
  j["mc_samples"] = r.mc_samples;
  j["seed"] = r.seed;
  j["wall_ms"] = r.wall_ms;
  j["in_hypothesis"] = r.in_hypothesis;
  out << j.dump() << '\n';
}

}  // namespace

void write_records(const std::vector<ConvergenceRecord>& records, OutputFormat format, std::ostream& out) {
  for (const auto& r : records) {
    if (format == OutputFormat::csv) {
      write_csv_row(r, out);
    } else {
      write_json_row(r, out);
    }
  }
}

}  // namespace stancu
