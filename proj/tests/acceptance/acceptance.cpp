// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Each line carries the measured quantities, the tolerance
// and the wall time against its limit.

#include "densecvx/approx.hpp"
#include "densecvx/caps.hpp"
#include "densecvx/fit.hpp"
#include "densecvx/geometry_checks.hpp"
#include "densecvx/harness.hpp"
#include "densecvx/hull.hpp"
#include "densecvx/lattice.hpp"
#include "densecvx/pointset_gen.hpp"
#include "densecvx/random.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <thread>

using namespace densecvx;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& name, double limit_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_time = secs < limit_s;
  const bool pass = out.pass && in_time;
  if (!pass) ++failures;
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.2fs / %.0fs", secs, limit_s);
  std::cout << "criterion " << id << " [" << name << "]: " << (pass ? "PASS" : "FAIL") << " | " << out.detail << " | "
            << timing << (in_time ? "" : " (time limit exceeded)") << std::endl;
}

std::string fmt(double v, const char* spec = "%.4g") {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

int worker_count() { return static_cast<int>(std::max(1u, std::thread::hardware_concurrency())); }

// Uniform point of a cap by rejection from a ball around its middle.
Vec3 sample_in_cap(const SphericalCap& cap, std::mt19937_64& rng) {
  const double r = std::sqrt(cap.h * (2 * cap.R - cap.h));
  const Vec3 mid = cap.center + cap.v * (cap.R - cap.h / 2);
  for (;;) {
    const Vec3 p = uniform_in_ball(mid, r + cap.h, rng);
    if (cap_contains(cap, p)) return p;
  }
}

Outcome packing_count() {
  std::ostringstream d;
  bool ok = true;
  for (double n : {64.0, 512.0, 4096.0}) {
    const auto params = cap_params(n, 1.0, 1.0 / 3.0);
    const auto packing = latitude_packing(params);
    double min_angle = std::numbers::pi;
    for (std::size_t i = 0; i < packing.caps.size(); ++i)
      for (std::size_t j = i + 1; j < packing.caps.size(); ++j)
        min_angle = std::min(min_angle, angle_between(packing.caps[i].v, packing.caps[j].v));
    const double bound = std::sqrt(n) / 2;
    const bool here = static_cast<double>(packing.caps.size()) >= bound && min_angle >= 2 * params.gamma;
    ok = ok && here;
    d << "n=" << n << " caps=" << packing.caps.size() << ">=" << fmt(bound) << " sep=" << fmt(min_angle)
      << ">=" << fmt(2 * params.gamma) << "; ";
  }
  return {ok, d.str()};
}

Outcome convex_selections() {
  std::mt19937_64 rng(2024);
  int checked = 0, passed = 0;
  const double sizes[] = {64.0, 512.0, 4096.0};
  for (int pk = 0; pk < 20; ++pk) {
    const double n = sizes[pk % 3];
    const double alpha = 0.5 + unit_double(rng());
    const auto packing = latitude_packing(cap_params(n, alpha, 1.0 / 3.0), uniform_on_sphere(rng),
                                          uniform_in_ball({0, 0, 0}, 10, rng));
    for (int sel = 0; sel < 50; ++sel) {
      std::vector<Vec3> chosen;
      for (const auto& cap : packing.caps)
        if (unit_double(rng()) < 0.8) chosen.push_back(sample_in_cap(cap, rng));
      ++checked;
      if (chosen.size() < 4 || is_convex_position(PointCloud::from_vec3(chosen))) ++passed;
    }
  }
  return {passed == checked && checked == 1000,
          std::to_string(passed) + "/" + std::to_string(checked) + " selections in convex position"};
}

Outcome lower_bound_scaling() {
  ExperimentConfig c;
  c.k_list = {2, 3, 4};
  c.reps = 20;
  c.seed = 1;
  c.alpha = 0.5;
  c.accept_fraction = 0.2;
  c.max_trials = 1000;
  c.threads = worker_count();
  const auto records = run_experiment(c);
  const auto fit = fit_scaling(records, FitStatistic::Median);
  std::ostringstream d;
  bool beta_ok = true;
  for (std::size_t i = 0; i < fit.sizes.size(); ++i) {
    const double beta = fit.medians[i] / std::sqrt(fit.sizes[i]);
    beta_ok = beta_ok && beta >= 0.25;
    d << "n=" << fit.sizes[i] << " median=" << fmt(fit.medians[i]) << " beta=" << fmt(beta) << "; ";
  }
  d << "slope=" << fmt(fit.slope) << " in [0.35, 0.65], beta >= 0.25";
  return {beta_ok && fit.slope >= 0.35 && fit.slope <= 0.65, d.str()};
}

Outcome fraction_stability() {
  std::vector<double> f;
  std::ostringstream d;
  for (int k : {2, 3, 4}) {
    const auto cloud = perturbed_grid(PerturbationParams::with_default_epsilon(k, 1));
    const auto params = cap_params(static_cast<double>(cloud.size()), 0.5, 1.0 / 3.0);
    f.push_back(monte_carlo_nonempty_fraction(cloud, params, 20000, 7));
    d << "f" << cloud.size() << "=" << fmt(f.back()) << " ";
  }
  const double ratio = *std::max_element(f.begin(), f.end()) / *std::min_element(f.begin(), f.end());
  d << "max/min=" << fmt(ratio) << " <= 2";
  return {f.back() > 0 && ratio <= 2.0, d.str()};
}

Outcome upper_bound_growth() {
  std::ostringstream d;
  bool ok = true;

  auto line_ratio = [](const HullGrowth& g) {
    const double l = std::log2(static_cast<double>(g.m));
    return static_cast<double>(g.vertex_count) / (l * l);
  };
  const auto g3 = perturbed_line_hull_growth(PerturbationParams::with_default_epsilon(3, 1), {1, 1, 1}, {0, 0, 0});
  const double ce = line_ratio(g3);
  d << "edge: c_e=" << fmt(ce);
  for (int k : {4, 5}) {
    const auto g = perturbed_line_hull_growth(PerturbationParams::with_default_epsilon(k, 1), {1, 1, 1}, {0, 0, 0});
    const double bound = ce * std::pow(std::log2(static_cast<double>(g.m)), 2);
    ok = ok && static_cast<double>(g.vertex_count) <= bound;
    d << " k" << k << "=" << g.vertex_count << "<=" << fmt(bound);
  }

  std::vector<double> lm, lv;
  for (int k : {3, 4}) {
    const auto g = perturbed_plane_hull_growth(PerturbationParams::with_default_epsilon(k, 1), {0, 0, 1}, 0);
    lm.push_back(std::log(static_cast<double>(g.m)));
    lv.push_back(std::log(static_cast<double>(g.vertex_count)));
    d << (k == 3 ? "; face: " : " ") << "m" << g.m << "=" << g.vertex_count;
  }
  const double face_slope = fit_line(lm, lv).slope;
  ok = ok && face_slope <= 0.5;
  d << " slope=" << fmt(face_slope) << "<=0.5";

  std::vector<double> ln, lh;
  d << "; grid:";
  for (int k : {2, 3, 4}) {
    const auto cloud = perturbed_grid(PerturbationParams::with_default_epsilon(k, 1));
    const auto hull = convex_hull_3d(cloud);
    ln.push_back(std::log(static_cast<double>(cloud.size())));
    lh.push_back(std::log(static_cast<double>(hull.vertices.size())));
    d << " n" << cloud.size() << "=" << hull.vertices.size();
  }
  const double grid_slope = fit_line(ln, lh).slope;
  ok = ok && grid_slope <= 0.65;
  d << " slope=" << fmt(grid_slope) << "<=0.65";
  return {ok, d.str()};
}

Outcome oracle_equivalence() {
  int agree = 0, verified = 0;
  const int clouds = 50;
  for (int i = 0; i < clouds; ++i) {
    const std::size_t n = 6 + static_cast<std::size_t>(i % 7);
    const auto cloud = random_ball_cloud(n, 500 + static_cast<std::uint64_t>(i));
    const auto exact = max_convex_subset_exact(cloud);
    ApproxOptions o;
    o.seed = static_cast<std::uint64_t>(i);
    const auto approx = approximate_max_convex_subset(cloud, o);
    if (approx.subset.size() <= exact.size) ++agree;
    // Re-verify through the hull rather than the oracle's own test.
    const auto hull = convex_hull_3d(cloud.subset(exact.witness));
    if (exact.witness.size() == exact.size && hull.vertices.size() == exact.size) ++verified;
  }
  return {agree == clouds && verified == clouds, std::to_string(agree) + "/50 approx <= oracle, " +
                                                     std::to_string(verified) + "/50 witnesses re-verified"};
}

Outcome r3_asymptotic() {
  const auto a = r3_sum(1), b = r3_sum(2), c = r3_sum(10000);
  const double main_term = 4.0 / 3.0 * std::numbers::pi * 1e6;
  const double rel = std::abs(static_cast<double>(c) - main_term) / main_term;
  return {a == 6 && b == 18 && rel < 0.05, "r3(1)=" + std::to_string(a) + " r3(2)=" + std::to_string(b) +
                                               " r3(1e4)=" + std::to_string(c) + " rel.err=" + fmt(rel) + " < 0.05"};
}

Outcome heavy_edge_growth() {
  const std::int64_t ts[] = {2, 4, 8};
  auto max_ratio = [&](std::int64_t m) {
    double worst = 0;
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
      const auto poly = random_convex_lattice_polygon(m, 1000 * static_cast<std::uint64_t>(m) + seed);
      const double area = static_cast<double>(twice_area(poly)) / 2;
      for (auto t : ts) {
        const double scale = std::cbrt(area / static_cast<double>(t * t));
        worst = std::max(worst, static_cast<double>(count_heavy_edges_2d(poly, t)) / scale);
      }
    }
    return worst;
  };
  const double c = max_ratio(32);
  const double r64 = max_ratio(64), r128 = max_ratio(128);
  return {r64 <= c && r128 <= c, "C(m=32)=" + fmt(c) + " ratio(64)=" + fmt(r64) + " ratio(128)=" + fmt(r128)};
}

Outcome tau_generalization() {
  std::ostringstream d;
  bool ok = true;
  for (double tau : {1.0 / 3.0, 0.4, 0.5}) {
    ExperimentConfig c;
    c.generator = "sparse-grid";
    c.k_list = {2, 3, 4};
    c.reps = 200;
    c.seed = 11;
    c.alpha = 0.5;
    c.tau = tau;
    c.accept_fraction = 0.0;
    c.max_trials = 1;
    c.threads = worker_count();
    const auto fit = fit_scaling(run_experiment(c), FitStatistic::Mean);
    const double predicted = 1.0 - 1.5 * tau;
    const bool here = std::abs(fit.slope - predicted) <= 0.15;
    ok = ok && here;
    d << "tau=" << fmt(tau) << " slope=" << fmt(fit.slope) << " vs " << fmt(predicted) << "; ";
  }
  d << "tolerance 0.15";
  return {ok, d.str()};
}

Outcome engine_agreement() {
  std::mt19937_64 rng(77);
  long queries = 0, disagreements = 0, nonempty = 0;
  for (int cloud = 0; cloud < 100; ++cloud) {
    const std::size_t n = 200 + rng() % 600;
    const double spread = 4 + 10 * unit_double(rng());
    std::vector<Vec3> pts;
    std::vector<std::size_t> keys;
    for (std::size_t i = 0; i < n; ++i) {
      pts.push_back(uniform_in_ball({0, 0, 0}, spread, rng));
      keys.push_back(static_cast<std::size_t>(rng() % 1000000));
    }
    const double R = 1 + spread * unit_double(rng());
    const double h = R * (0.02 + 0.5 * unit_double(rng()));
    BruteEngine brute;
    BucketEngine bucket(h * (0.5 + unit_double(rng())));
    brute.build(pts, keys);
    bucket.build(pts, keys);
    for (int q = 0; q < 1000; ++q) {
      const SphericalCap cap{uniform_in_ball({0, 0, 0}, spread + R, rng), R, uniform_on_sphere(rng), h};
      const auto a = brute.query(cap), b = bucket.query(cap);
      ++queries;
      if (a != b) ++disagreements;
      if (a) ++nonempty;
    }
  }
  return {disagreements == 0 && queries == 100000,
          std::to_string(queries) + " queries, " + std::to_string(nonempty) + " nonempty, " +
              std::to_string(disagreements) + " disagreements"};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome determinism() {
  {
    std::ofstream conf("acceptance_determinism.conf");
    conf << "k_list = 2,3\nreps = 4\nseed = 5\nmax_trials = 20\nthreads = 3\n";
  }
  const std::string base = std::string(DENSECVX_CLI) + " --config acceptance_determinism.conf experiment --out ";
  const int s1 = std::system((base + "acceptance_run1.csv > /dev/null").c_str());
  const int s2 = std::system((base + "acceptance_run2.csv > /dev/null").c_str());
  const std::string a = slurp("acceptance_run1.csv"), b = slurp("acceptance_run2.csv");
  const bool ok = s1 == 0 && s2 == 0 && !a.empty() && a == b;
  return {ok, "exit codes " + std::to_string(s1) + "," + std::to_string(s2) + "; " + std::to_string(a.size()) +
                  " bytes, " + (a == b ? "identical" : "different")};
}

}  // namespace

int main() {
  criterion(1, "packing count", 1, packing_count);
  criterion(2, "one point per cap is convex", 30, convex_selections);
  criterion(3, "lower-bound scaling", 600, lower_bound_scaling);
  criterion(4, "nonempty-fraction stability", 300, fraction_stability);
  criterion(5, "upper-bound construction growth", 900, upper_bound_growth);
  criterion(6, "oracle equivalence", 120, oracle_equivalence);
  criterion(7, "sum of three squares", 10, r3_asymptotic);
  criterion(8, "heavy-edge growth", 60, heavy_edge_growth);
  criterion(9, "tau generalization", 900, tau_generalization);
  criterion(10, "engine cross-validation", 60, engine_agreement);
  criterion(11, "experiment determinism", 300, determinism);
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
