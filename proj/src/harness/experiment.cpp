#include "densecvx/harness.hpp"

#include "densecvx/pointset_gen.hpp"
#include "densecvx/random.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace densecvx {

std::uint64_t trial_seed(std::uint64_t base, int k, int rep) {
  return base ^ hash_words({static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(rep)});
}

PointCloud generate_cloud(const std::string& generator, int k, double tau, std::uint64_t seed) {
  if (generator == "perturbed-grid") return perturbed_grid(PerturbationParams::with_default_epsilon(k, seed));
  if (generator == "grid") return plain_grid(k);
  if (generator == "random-ball") return random_ball_cloud(std::size_t{1} << (3 * k), seed);
  if (generator == "sparse-grid") return sparse_jittered_grid(1 << k, tau, seed);
  throw std::invalid_argument("unknown generator '" + generator + "'");
}

std::vector<ExperimentRecord> run_experiment(const ExperimentConfig& config) {
  struct Task {
    int k, rep;
  };
  std::vector<Task> tasks;
  for (int k : config.k_list) {
    for (int rep = 0; rep < config.reps; ++rep) tasks.push_back({k, rep});
  }
  std::vector<ExperimentRecord> records(tasks.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        const auto start = std::chrono::steady_clock::now();
        const Task& task = tasks[i];
        const std::uint64_t seed = trial_seed(config.seed, task.k, task.rep);
        const PointCloud cloud = generate_cloud(config.generator, task.k, config.tau, seed);
        ApproxOptions options;
        options.alpha = config.alpha;
        options.tau = config.tau;
        options.accept_fraction = config.accept_fraction;
        options.max_trials = config.max_trials;
        options.seed = seed;
        options.engine = config.engine;
        const ApproxResult result = approximate_max_convex_subset(cloud, options);

        ExperimentRecord& r = records[i];
        r.generator = config.generator;
        r.k = task.k;
        r.n = cloud.size();
        r.tau = config.tau;
        r.alpha = config.alpha;
        r.accept_fraction = config.accept_fraction;
        r.seed = seed;
        r.subset_size = result.indices.size();
        r.nonempty_fraction = result.nonempty_fraction;
        r.trials_used = result.trials_used;
        r.cap_count = result.cap_count;
        r.opt_upper_bound = opt_upper_bound(cloud);
        r.accepted = result.accepted;
        r.convex_verified = result.convex_verified;
        r.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };

  const int threads = std::max(1, std::min<int>(config.threads, static_cast<int>(tasks.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return records;
}

namespace {

constexpr const char* kCsvHeader =
    "schema_version,generator,k,n,tau,alpha,accept_fraction,seed,subset_size,nonempty_fraction,trials_used,"
    "cap_count,opt_upper_bound,accepted,convex_verified";

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) out.push_back(cell);
  return out;
}

}  // namespace

void write_records_csv(const std::vector<ExperimentRecord>& records, const std::string& path, bool with_timings) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << kCsvHeader << '\n';
  for (const auto& r : records) {
    out << r.schema_version << ',' << r.generator << ',' << r.k << ',' << r.n << ',' << format_double(r.tau) << ','
        << format_double(r.alpha) << ',' << format_double(r.accept_fraction) << ',' << r.seed << ',' << r.subset_size
        << ',' << format_double(r.nonempty_fraction) << ',' << r.trials_used << ',' << r.cap_count << ','
        << format_double(r.opt_upper_bound) << ',' << (r.accepted ? 1 : 0) << ',' << (r.convex_verified ? 1 : 0)
        << '\n';
  }
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
  if (!with_timings) return;
  std::ofstream timings(path + ".timings.csv");
  if (!timings) throw std::runtime_error("cannot open '" + path + ".timings.csv' for writing");
  timings << "k,seed,wall_ms\n";
  for (const auto& r : records) timings << r.k << ',' << r.seed << ',' << r.wall_ms << '\n';
}

std::vector<ExperimentRecord> read_records_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) throw std::invalid_argument("'" + path + "' is not an experiment CSV");
  std::vector<ExperimentRecord> records;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto c = split_csv(line);
    if (c.size() != 15) throw std::invalid_argument("malformed CSV row: " + line);
    ExperimentRecord r;
    r.schema_version = std::stoi(c[0]);
    r.generator = c[1];
    r.k = std::stoi(c[2]);
    r.n = std::stoull(c[3]);
    r.tau = std::stod(c[4]);
    r.alpha = std::stod(c[5]);
    r.accept_fraction = std::stod(c[6]);
    r.seed = std::stoull(c[7]);
    r.subset_size = std::stoull(c[8]);
    r.nonempty_fraction = std::stod(c[9]);
    r.trials_used = std::stoi(c[10]);
    r.cap_count = std::stoull(c[11]);
    r.opt_upper_bound = std::stod(c[12]);
    r.accepted = c[13] == "1";
    r.convex_verified = c[14] == "1";
    records.push_back(r);
  }
  return records;
}

}  // namespace densecvx
