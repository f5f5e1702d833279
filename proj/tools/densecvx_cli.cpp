// Command-line front end: generators, packing, approximation, exact oracle,
// lattice analytics, lemma checks and scaling experiments.
#include "densecvx/approx.hpp"
#include "densecvx/caps.hpp"
#include "densecvx/fit.hpp"
#include "densecvx/geometry_checks.hpp"
#include "densecvx/harness.hpp"
#include "densecvx/lattice.hpp"
#include "densecvx/pointset_gen.hpp"
#include "densecvx/pointset_io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>

using namespace densecvx;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerification = 2;

struct VerificationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::uint64_t seed = 1;
  int threads = 1;
  std::string out;
  std::string config;
};

void write_json(const json& doc, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << doc.dump(2) << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << doc.dump(2) << '\n';
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  return out;
}

json vec_json(const Vec3& v) { return json::array({v.x, v.y, v.z}); }

json params_json(const CapParams& p) {
  return {{"n", p.n}, {"alpha", p.alpha}, {"tau", p.tau}, {"R", p.R}, {"h", p.h}, {"r", p.r}, {"gamma", p.gamma}};
}

LatticePoint3 integer_point(const RationalPoint3& p) {
  for (const Rational* c : {&p.x, &p.y, &p.z}) {
    if (c->get_den() != 1 || !c->get_num().fits_slong_p()) throw std::invalid_argument("lattice-stats needs integer points");
  }
  return {p.x.get_num().get_si(), p.y.get_num().get_si(), p.z.get_num().get_si()};
}

// --- generate -------------------------------------------------------------

struct GenerateArgs {
  std::string kind = "perturbed-grid";
  int k = 2;
  std::string epsilon;
  std::size_t n = 0;
  double tau = 1.0 / 3.0;
};

void run_generate(const GenerateArgs& a, const Globals& g) {
  PointCloud cloud;
  if (a.kind == "perturbed-grid") {
    auto params = PerturbationParams::with_default_epsilon(a.k, g.seed);
    if (!a.epsilon.empty()) params.epsilon = parse_rational(a.epsilon);
    params.validate();
    cloud = perturbed_grid(params);
  } else if (a.kind == "horton") {
    const std::size_t n = a.n ? a.n : std::size_t{1} << a.k;
    const Rational eps = a.epsilon.empty() ? default_horton_epsilon(n) : parse_rational(a.epsilon);
    std::vector<RationalPoint3> pts;
    for (const auto& p : horton_set_2d(n, eps)) pts.emplace_back(p.x, p.y, Rational(0));
    cloud = PointCloud(std::move(pts), "horton n=" + std::to_string(n));
  } else if (a.kind == "grid") {
    cloud = plain_grid(a.k);
  } else if (a.kind == "random-ball") {
    cloud = random_ball_cloud(a.n ? a.n : std::size_t{1} << (3 * a.k), g.seed);
  } else if (a.kind == "sparse-grid") {
    cloud = sparse_jittered_grid(1 << a.k, a.tau, g.seed);
  } else {
    throw CLI::ValidationError("--kind", "unknown kind '" + a.kind + "'");
  }
  if (g.out.empty()) {
    std::cout << pointset_to_json(cloud).dump(1) << '\n';
  } else {
    write_pointset(cloud, g.out);
  }
}

// --- packing --------------------------------------------------------------

struct PackingArgs {
  double n = 4096, alpha = 1, tau = 1.0 / 3.0;
};

void run_packing(const PackingArgs& a, const Globals& g) {
  const CapPacking packing = latitude_packing(cap_params(a.n, a.alpha, a.tau));
  json dirs = json::array();
  for (const auto& cap : packing.caps) dirs.push_back(vec_json(cap.v));
  write_json({{"params", params_json(packing.params)},
              {"count", packing.caps.size()},
              {"lower_bound", packing.params.packing_lower_bound()},
              {"min_pairwise_angle", packing.min_pairwise_angle},
              {"required_separation", 2 * packing.params.gamma},
              {"directions", dirs}},
             g.out);
}

// --- approx ---------------------------------------------------------------

struct ApproxArgs {
  std::string in;
  double alpha = 0.5, tau = 1.0 / 3.0, accept = kDefaultAcceptFraction;
  int trials = 100;
  std::string engine = "brute";
};

void run_approx(const ApproxArgs& a, const Globals& g) {
  const PointCloud cloud = read_pointset(a.in);
  ApproxOptions options;
  options.alpha = a.alpha;
  options.tau = a.tau;
  options.accept_fraction = a.accept;
  options.max_trials = a.trials;
  options.seed = g.seed;
  options.engine = engine_from_string(a.engine);
  const auto start = std::chrono::steady_clock::now();
  const ApproxResult r = approximate_max_convex_subset(cloud, options);
  const auto wall = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  write_json({{"n", cloud.size()},
              {"subset_size", r.indices.size()},
              {"subset_indices", r.indices},
              {"nonempty_fraction", r.nonempty_fraction},
              {"nonempty_caps", r.nonempty_caps},
              {"cap_count", r.cap_count},
              {"trials_used", r.trials_used},
              {"accepted", r.accepted},
              {"small_n_adjusted", r.small_n_adjusted},
              {"spread_violation", r.spread_violation},
              {"convex_verified", r.convex_verified},
              {"opt_upper_bound", opt_upper_bound(cloud)},
              {"params", params_json(r.params)},
              {"seed", r.seed},
              {"wall_ms", wall.count()}},
             g.out);
  if (r.spread_violation) std::cerr << "warning: enclosing radius exceeds R = alpha n^tau\n";
  if (!r.convex_verified) throw VerificationFailure("returned subset is not in convex position");
}

// --- oracle / lattice-stats -----------------------------------------------

void run_oracle(const std::string& in, const Globals& g) {
  const PointCloud cloud = read_pointset(in);
  const OracleResult r = max_convex_subset_exact(cloud);
  const bool verified = r.witness.empty() || is_convex_position(cloud.subset(r.witness));
  write_json({{"size", r.size}, {"witness", r.witness}, {"nodes_explored", r.nodes_explored}, {"verified", verified}},
             g.out);
  if (!verified) throw VerificationFailure("oracle witness failed re-verification");
}

void run_lattice_stats(const std::string& in, const Globals& g) {
  const PointCloud cloud = read_pointset(in);
  std::vector<LatticePoint3> pts;
  for (const auto& p : cloud.points()) pts.push_back(integer_point(p));
  const HullStats s = hull_stats(pts);
  json doc = {{"dimension", s.dimension}, {"vertex_count", s.vertex_count}};
  if (s.dimension == 3) {
    doc["edge_count"] = s.edge_count;
    doc["facet_count"] = s.facet_count;
    doc["volume"] = format_rational(s.volume);
    doc["per_facet_lattice_counts"] = s.per_facet_lattice_counts;
    doc["per_facet_interior_counts"] = s.per_facet_interior_counts;
    doc["normal_norms"] = s.normal_norms;
    doc["boundary_lattice_count"] = s.boundary_lattice_count;
    doc["euler_ok"] = static_cast<long>(s.vertex_count) - static_cast<long>(s.edge_count) +
                          static_cast<long>(s.facet_count) == 2;
  }
  write_json(doc, g.out);
  if (s.dimension == 3 && !doc["euler_ok"].get<bool>()) throw VerificationFailure("Euler relation violated");
}

// --- lemma-check ----------------------------------------------------------

struct LemmaArgs {
  std::string which;
  int k = 4;
  std::vector<std::int64_t> t{2, 4, 8};
  std::vector<std::int64_t> M{1, 2, 100, 10000};
  int polygons = 50;
};

void run_lemma_check(const LemmaArgs& a, const Globals& g) {
  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!g.out.empty()) {
    file = open_out(g.out);
    out = &file;
  }
  bool ok = true;
  if (a.which == "edge") {
    *out << "line,k,m,vertex_count,log2m_squared\n";
    const std::pair<const char*, LatticePoint3> lines[] = {{"diagonal", {1, 1, 1}}, {"x-axis", {1, 0, 0}},
                                                           {"y-axis", {0, 1, 0}}, {"z-axis", {0, 0, 1}}};
    for (int k = 1; k <= a.k; ++k) {
      const auto params = PerturbationParams::with_default_epsilon(k, g.seed);
      for (const auto& [name, dir] : lines) {
        const HullGrowth hg = perturbed_line_hull_growth(params, dir, {0, 0, 0});
        ok = ok && hg.vertex_count <= hg.m;
        *out << name << ',' << k << ',' << hg.m << ',' << hg.vertex_count << ','
             << std::pow(std::log2(static_cast<double>(hg.m)), 2) << '\n';
      }
    }
  } else if (a.which == "face") {
    *out << "plane,k,m,vertex_count,m_cube_root\n";
    const std::pair<const char*, LatticePoint3> planes[] = {{"x=0", {1, 0, 0}}, {"y=0", {0, 1, 0}}, {"z=0", {0, 0, 1}}};
    for (int k = 1; k <= a.k; ++k) {
      const auto params = PerturbationParams::with_default_epsilon(k, g.seed);
      for (const auto& [name, normal] : planes) {
        const HullGrowth hg = perturbed_plane_hull_growth(params, normal, 0);
        ok = ok && hg.vertex_count <= hg.m;
        *out << name << ',' << k << ',' << hg.m << ',' << hg.vertex_count << ','
             << std::cbrt(static_cast<double>(hg.m)) << '\n';
      }
    }
  } else if (a.which == "new2") {
    *out << "m,polygon,t,edges,heavy_edges,area,ratio\n";
    for (std::int64_t m : {32, 64, 128}) {
      for (int i = 0; i < a.polygons; ++i) {
        const auto poly = random_convex_lattice_polygon(m, g.seed ^ (static_cast<std::uint64_t>(m) << 32) ^ i);
        const double area = static_cast<double>(twice_area(poly)) / 2.0;
        for (std::int64_t t : a.t) {
          const std::size_t heavy = count_heavy_edges_2d(poly, t);
          *out << m << ',' << i << ',' << t << ',' << poly.size() << ',' << heavy << ',' << area << ','
               << heavy / std::cbrt(area / static_cast<double>(t * t)) << '\n';
        }
      }
    }
  } else if (a.which == "r3") {
    *out << "M,r3_sum,asymptotic,relative_error\n";
    for (std::int64_t M : a.M) {
      const std::int64_t s = r3_sum(M);
      const double asym = 4.0 / 3.0 * std::numbers::pi * std::pow(static_cast<double>(M), 1.5);
      *out << M << ',' << s << ',' << asym << ',' << (s - asym) / asym << '\n';
    }
  } else if (a.which == "negligible") {
    *out << "k,tetrahedra,interior_pairs,violations\n";
    for (int k = 1; k <= std::min(a.k, 2); ++k) {
      const auto r = negligibility_check(PerturbationParams::with_default_epsilon(k, g.seed), k == 1 ? 0 : 20000, g.seed);
      ok = ok && r.violations == 0;
      *out << k << ',' << r.tetrahedra << ',' << r.interior_pairs << ',' << r.violations << '\n';
    }
  } else {
    throw CLI::ValidationError("lemma", "unknown lemma check '" + a.which + "'");
  }
  if (!ok) throw VerificationFailure("lemma check '" + a.which + "' found a violation");
}

// --- experiment / report --------------------------------------------------

void run_experiment_cmd(const Globals& g, bool seed_given, bool threads_given) {
  ExperimentConfig config;
  if (!g.config.empty()) config = load_experiment_config(g.config);
  if (seed_given) config.seed = g.seed;
  if (threads_given) config.threads = g.threads;
  if (g.out.empty()) throw CLI::ValidationError("--out", "experiment needs --out FILE.csv");
  const auto records = run_experiment(config);
  write_records_csv(records, g.out, true);
  std::size_t unverified = 0;
  for (const auto& r : records) unverified += r.convex_verified ? 0 : 1;
  std::cerr << records.size() << " records written to " << g.out << '\n';
  if (unverified) throw VerificationFailure(std::to_string(unverified) + " subsets failed the convex-position check");
}

void run_report(const std::string& in, const Globals& g) {
  if (g.out.empty()) throw CLI::ValidationError("--out", "report needs --out FILE.md");
  const auto records = read_records_csv(in);
  report(records, g.out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Convex-position subsets of density-restricted point sets in R^3"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  auto* seed_opt = app.add_option("--seed", g.seed, "Base random seed");
  auto* threads_opt = app.add_option("--threads", g.threads, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--out", g.out, "Output file (stdout when omitted, where supported)");
  app.add_option("--config", g.config, "key=value configuration file")->check(CLI::ExistingFile);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Write a point set as JSON");
  generate->add_option("--kind", gen.kind)->check(CLI::IsMember({"perturbed-grid", "horton", "grid", "random-ball", "sparse-grid"}));
  generate->add_option("--k", gen.k, "Grid exponent, n = 2^{3k}")->check(CLI::Range(1, 6));
  generate->add_option("--epsilon", gen.epsilon, "NUM/DEN");
  generate->add_option("--n", gen.n, "Point count (horton, random-ball)");
  generate->add_option("--tau", gen.tau, "Spread exponent (sparse-grid)");

  PackingArgs pk;
  auto* packing = app.add_subcommand("packing", "Latitude cap packing");
  packing->add_option("--n", pk.n)->check(CLI::Range(8.0, 1e12));
  packing->add_option("--alpha", pk.alpha)->check(CLI::PositiveNumber);
  packing->add_option("--tau", pk.tau);

  ApproxArgs ap;
  auto* approx = app.add_subcommand("approx", "Randomized cap algorithm");
  approx->add_option("--in", ap.in)->required()->check(CLI::ExistingFile);
  auto* alpha_opt = approx->add_option("--alpha", ap.alpha)->check(CLI::PositiveNumber);
  auto* tau_opt = approx->add_option("--tau", ap.tau);
  auto* accept_opt = approx->add_option("--accept", ap.accept)->check(CLI::Range(0.0, 1.0));
  auto* trials_opt = approx->add_option("--trials", ap.trials)->check(CLI::PositiveNumber);
  auto* engine_opt = approx->add_option("--engine", ap.engine)->check(CLI::IsMember({"brute", "bucket"}));

  std::string oracle_in;
  auto* oracle = app.add_subcommand("oracle", "Exact maximum convex subset (n <= 16)");
  oracle->add_option("--in", oracle_in)->required()->check(CLI::ExistingFile);

  std::string stats_in;
  auto* stats = app.add_subcommand("lattice-stats", "Exact hull statistics of integer points");
  stats->add_option("--in", stats_in)->required()->check(CLI::ExistingFile);

  LemmaArgs lm;
  auto* lemma = app.add_subcommand("lemma-check", "Growth checks: edge | face | new2 | r3 | negligible");
  lemma->add_option("which", lm.which)->required()->check(CLI::IsMember({"edge", "face", "new2", "r3", "negligible"}));
  lemma->add_option("--k", lm.k)->check(CLI::Range(1, 6));
  lemma->add_option("--t", lm.t)->delimiter(',');
  lemma->add_option("--M", lm.M)->delimiter(',');
  lemma->add_option("--polygons", lm.polygons)->check(CLI::PositiveNumber);

  auto* experiment = app.add_subcommand("experiment", "Run the configured scaling experiment");

  std::string report_in;
  auto* report_cmd = app.add_subcommand("report", "Summarize an experiment CSV");
  report_cmd->add_option("--in", report_in)->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*approx && !g.config.empty()) {
      // Config supplies defaults; explicit flags win.
      const ExperimentConfig c = load_experiment_config(g.config);
      if (!*alpha_opt) ap.alpha = c.alpha;
      if (!*tau_opt) ap.tau = c.tau;
      if (!*accept_opt) ap.accept = c.accept_fraction;
      if (!*trials_opt) ap.trials = c.max_trials;
      if (!*engine_opt) ap.engine = c.engine == EngineKind::Brute ? "brute" : "bucket";
      if (!*seed_opt) g.seed = c.seed;
    }
    if (*generate) run_generate(gen, g);
    if (*packing) run_packing(pk, g);
    if (*approx) run_approx(ap, g);
    if (*oracle) run_oracle(oracle_in, g);
    if (*stats) run_lattice_stats(stats_in, g);
    if (*lemma) run_lemma_check(lm, g);
    if (*experiment) run_experiment_cmd(g, static_cast<bool>(*seed_opt), static_cast<bool>(*threads_opt));
    if (*report_cmd) run_report(report_in, g);
  } catch (const VerificationFailure& e) {
    std::cerr << "verification failed: " << e.what() << '\n';
    return kExitVerification;
  } catch (const CLI::Error& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}
