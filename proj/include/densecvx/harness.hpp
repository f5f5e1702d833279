#pragma once

#include "densecvx/approx.hpp"

#include <cstdint>
#include <istream>
#include <map>
#include <string>
#include <vector>

namespace densecvx {

inline constexpr int kCsvSchemaVersion = 1;

struct ExperimentConfig {
  std::vector<int> k_list{2, 3, 4};
  int reps = 5;
  std::uint64_t seed = 1;
  std::string generator = "perturbed-grid";  // perturbed-grid | random-ball | sparse-grid | grid
  double alpha = 0.5;
  double tau = 1.0 / 3.0;
  double accept_fraction = kDefaultAcceptFraction;
  int max_trials = 100;
  EngineKind engine = EngineKind::Brute;
  int threads = 1;
};

/// key=value lines (INI syntax, '#' or ';' comments). Unknown keys and bad
/// values throw std::invalid_argument naming the key.
ExperimentConfig parse_experiment_config(std::istream& in, ExperimentConfig base = {});
ExperimentConfig load_experiment_config(const std::string& path, ExperimentConfig base = {});

/// Raw key/value pairs of a config file, for callers that only need a few.
std::map<std::string, std::string> read_config_values(const std::string& path);

struct ExperimentRecord {
  int schema_version = kCsvSchemaVersion;
  std::string generator;
  int k = 0;
  std::size_t n = 0;
  double tau = 0, alpha = 0, accept_fraction = 0;
  std::uint64_t seed = 0;
  std::size_t subset_size = 0;
  double nonempty_fraction = 0;
  int trials_used = 0;
  std::size_t cap_count = 0;
  double opt_upper_bound = 0;
  bool accepted = false;
  bool convex_verified = false;
  std::int64_t wall_ms = 0;  // kept out of the main CSV
};

/// Seed of repetition i at size k: base ^ hash(k, i).
std::uint64_t trial_seed(std::uint64_t base, int k, int rep);

/// Cloud for one run of the given generator at size parameter k.
PointCloud generate_cloud(const std::string& generator, int k, double tau, std::uint64_t seed);

/// Records ordered by (k, repetition) regardless of thread count.
std::vector<ExperimentRecord> run_experiment(const ExperimentConfig& config);

/// Deterministic CSV without timings; timings go to `path + ".timings.csv"`
/// when `with_timings` is set.
void write_records_csv(const std::vector<ExperimentRecord>& records, const std::string& path, bool with_timings);
std::vector<ExperimentRecord> read_records_csv(const std::string& path);

enum class FitStatistic { Median, Mean };
FitStatistic fit_statistic_from_string(const std::string& name);

struct ScalingFit {
  std::vector<double> sizes;    // strictly increasing n
  std::vector<double> medians;  // per-size statistic (median or mean)
  double slope = 0, intercept = 0, r_squared = 0;
};

/// Least squares of log(statistic) on log(n). Throws std::invalid_argument
/// with fewer than 3 distinct n, fewer than 5 records at some n, or a
/// nonpositive statistic.
ScalingFit fit_scaling(const std::vector<ExperimentRecord>& records, FitStatistic statistic = FitStatistic::Median);

/// Writes `out_path` (markdown) and `out_path + ".csv"` (per-size table).
/// Throws std::runtime_error if either file cannot be written.
void report(const std::vector<ExperimentRecord>& records, const std::string& out_path);

}  // namespace densecvx
