#include "densecvx/harness.hpp"

#include "densecvx/fit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <numeric>
#include <stdexcept>

namespace densecvx {

FitStatistic fit_statistic_from_string(const std::string& name) {
  if (name == "median") return FitStatistic::Median;
  if (name == "mean") return FitStatistic::Mean;
  throw std::invalid_argument("unknown fit statistic '" + name + "' (median|mean)");
}

namespace {

double median_of(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 == 1 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

double mean_of(const std::vector<double>& v) { return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size()); }

std::map<std::size_t, std::vector<const ExperimentRecord*>> by_size(const std::vector<const ExperimentRecord*>& records) {
  std::map<std::size_t, std::vector<const ExperimentRecord*>> groups;
  for (const auto* r : records) groups[r->n].push_back(r);
  return groups;
}

std::vector<double> subset_sizes(const std::vector<const ExperimentRecord*>& group) {
  std::vector<double> v;
  for (const auto* r : group) v.push_back(static_cast<double>(r->subset_size));
  return v;
}

ScalingFit fit_groups(const std::vector<const ExperimentRecord*>& records, FitStatistic statistic,
                      std::size_t min_sizes, std::size_t min_reps) {
  const auto groups = by_size(records);
  if (groups.size() < min_sizes) {
    throw std::invalid_argument("scaling fit needs at least " + std::to_string(min_sizes) + " distinct n values (got " +
                                std::to_string(groups.size()) + ")");
  }
  ScalingFit fit;
  std::vector<double> lx, ly;
  for (const auto& [n, group] : groups) {
    if (group.size() < min_reps) {
      throw std::invalid_argument("scaling fit needs at least " + std::to_string(min_reps) + " repetitions at n = " +
                                  std::to_string(n));
    }
    const auto sizes = subset_sizes(group);
    const double value = statistic == FitStatistic::Median ? median_of(sizes) : mean_of(sizes);
    if (!(value > 0)) throw std::invalid_argument("scaling fit needs a positive statistic at n = " + std::to_string(n));
    fit.sizes.push_back(static_cast<double>(n));
    fit.medians.push_back(value);
    lx.push_back(std::log(static_cast<double>(n)));
    ly.push_back(std::log(value));
  }
  const LineFit line = fit_line(lx, ly);
  fit.slope = line.slope;
  fit.intercept = line.intercept;
  fit.r_squared = line.r_squared;
  return fit;
}

std::vector<const ExperimentRecord*> pointers(const std::vector<ExperimentRecord>& records) {
  std::vector<const ExperimentRecord*> out;
  for (const auto& r : records) out.push_back(&r);
  return out;
}

std::string fmt(double v, const char* spec = "%.4g") {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

}  // namespace

ScalingFit fit_scaling(const std::vector<ExperimentRecord>& records, FitStatistic statistic) {
  return fit_groups(pointers(records), statistic, 3, 5);
}

void report(const std::vector<ExperimentRecord>& records, const std::string& out_path) {
  if (records.empty()) throw std::invalid_argument("report needs at least one record");
  std::map<double, std::vector<const ExperimentRecord*>> by_tau;
  for (const auto& r : records) by_tau[r.tau].push_back(&r);

  std::ofstream md(out_path);
  if (!md) throw std::runtime_error("cannot open '" + out_path + "' for writing");
  std::ofstream csv(out_path + ".csv");
  if (!csv) throw std::runtime_error("cannot open '" + out_path + ".csv' for writing");

  md << "# Convex subset experiment summary\n\n";
  md << records.size() << " records, generator `" << records.front().generator << "`.\n\n";
  csv << "tau,n,reps,median_subset,mean_subset,beta,ratio_proxy,seeds\n";

  std::vector<std::pair<double, ScalingFit>> fits;
  for (const auto& [tau, group] : by_tau) {
    md << "## tau = " << fmt(tau) << "\n\n";
    md << "| n | reps | median subset | mean subset | beta = median/sqrt(n) | subset/opt bound | seeds |\n";
    md << "|---|---|---|---|---|---|---|\n";
    for (const auto& [n, rows] : by_size(group)) {
      const auto sizes = subset_sizes(rows);
      std::vector<double> ratios;
      std::string seeds;
      for (const auto* r : rows) {
        ratios.push_back(r->opt_upper_bound > 0 ? static_cast<double>(r->subset_size) / r->opt_upper_bound : 0.0);
        seeds += (seeds.empty() ? "" : " ") + std::to_string(r->seed);
      }
      const double med = median_of(sizes);
      const double beta = med / std::sqrt(static_cast<double>(n));
      md << "| " << n << " | " << rows.size() << " | " << fmt(med) << " | " << fmt(mean_of(sizes)) << " | " << fmt(beta)
         << " | " << fmt(median_of(ratios)) << " | " << seeds << " |\n";
      csv << fmt(tau, "%.9g") << ',' << n << ',' << rows.size() << ',' << fmt(med, "%.9g") << ','
          << fmt(mean_of(sizes), "%.9g") << ',' << fmt(beta, "%.9g") << ',' << fmt(median_of(ratios), "%.9g") << ','
          << seeds << '\n';
    }
    md << '\n';
    try {
      const ScalingFit fit = fit_groups(group, FitStatistic::Median, 2, 1);
      md << "slope of log median subset vs log n: " << fmt(fit.slope) << " (R^2 = " << fmt(fit.r_squared)
         << ", predicted " << fmt(1.0 - 1.5 * tau) << ")\n\n";
      fits.emplace_back(tau, fit);
    } catch (const std::invalid_argument& e) {
      md << "slope: not available (" << e.what() << ")\n\n";
    }
  }

  if (fits.size() > 1) {
    md << "## Exponent by tau\n\n| tau | fitted slope | predicted 1 - 3 tau / 2 | difference |\n|---|---|---|---|\n";
    for (const auto& [tau, fit] : fits) {
      const double predicted = 1.0 - 1.5 * tau;
      md << "| " << fmt(tau) << " | " << fmt(fit.slope) << " | " << fmt(predicted) << " | " << fmt(fit.slope - predicted)
         << " |\n";
    }
    md << '\n';
  }

  md << "## Records\n\n| k | n | tau | alpha | accept | seed | subset | nonempty fraction | trials | caps | opt bound | "
        "accepted | convex |\n|---|---|---|---|---|---|---|---|---|---|---|---|---|\n";
  for (const auto& r : records) {
    md << "| " << r.k << " | " << r.n << " | " << fmt(r.tau) << " | " << fmt(r.alpha) << " | " << fmt(r.accept_fraction)
       << " | " << r.seed << " | " << r.subset_size << " | " << fmt(r.nonempty_fraction) << " | " << r.trials_used
       << " | " << r.cap_count << " | " << fmt(r.opt_upper_bound) << " | " << (r.accepted ? "yes" : "no") << " | "
       << (r.convex_verified ? "yes" : "no") << " |\n";
  }
  if (!md || !csv) throw std::runtime_error("writing report '" + out_path + "' failed");
}

}  // namespace densecvx
