#include "densecvx/harness.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace densecvx {

namespace {

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  for (char c : text) {
    if (c == ',' || c == ' ' || c == '[' || c == ']') {
      if (!item.empty()) out.push_back(item);
      item.clear();
    } else {
      item += c;
    }
  }
  if (!item.empty()) out.push_back(item);
  return out;
}

template <class T>
T parse_number(const std::string& key, const std::string& value) {
  std::istringstream in(value);
  T out{};
  if (!(in >> out) || !(in >> std::ws).eof()) {
    throw std::invalid_argument("config key '" + key + "': cannot parse '" + value + "'");
  }
  return out;
}

}  // namespace

static std::map<std::string, std::string> read_config_stream(std::istream& in) {
  std::map<std::string, std::string> values;
  for (const auto& item : CLI::ConfigINI().from_config(in)) {
    if (item.name == "++" || item.name == "--") continue;
    std::string joined;
    for (const auto& part : item.inputs) joined += (joined.empty() ? "" : ",") + part;
    values[item.fullname()] = joined;
  }
  return values;
}

std::map<std::string, std::string> read_config_values(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config '" + path + "'");
  return read_config_stream(in);
}

ExperimentConfig parse_experiment_config(std::istream& in, ExperimentConfig config) {
  for (const auto& [key, value] : read_config_stream(in)) {
    if (key == "k_list") {
      config.k_list.clear();
      for (const auto& part : split_list(value)) config.k_list.push_back(parse_number<int>(key, part));
    } else if (key == "reps") {
      config.reps = parse_number<int>(key, value);
    } else if (key == "seed") {
      config.seed = parse_number<std::uint64_t>(key, value);
    } else if (key == "generator") {
      if (value != "perturbed-grid" && value != "random-ball" && value != "sparse-grid" && value != "grid") {
        throw std::invalid_argument("config key 'generator': unknown generator '" + value + "'");
      }
      config.generator = value;
    } else if (key == "alpha") {
      config.alpha = parse_number<double>(key, value);
    } else if (key == "tau") {
      config.tau = parse_number<double>(key, value);
    } else if (key == "accept_fraction") {
      config.accept_fraction = parse_number<double>(key, value);
    } else if (key == "max_trials") {
      config.max_trials = parse_number<int>(key, value);
    } else if (key == "engine") {
      config.engine = engine_from_string(value);
    } else if (key == "threads") {
      config.threads = parse_number<int>(key, value);
    } else {
      throw std::invalid_argument("unknown config key '" + key + "'");
    }
  }
  if (config.reps < 0) throw std::invalid_argument("config key 'reps' must be >= 0");
  if (config.threads < 1) throw std::invalid_argument("config key 'threads' must be >= 1");
  if (config.max_trials < 1) throw std::invalid_argument("config key 'max_trials' must be >= 1");
  for (int k : config.k_list) {
    if (k < 1 || k > 5) throw std::invalid_argument("config key 'k_list': k must lie in 1..5");
  }
  return config;
}

ExperimentConfig load_experiment_config(const std::string& path, ExperimentConfig base) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config '" + path + "'");
  return parse_experiment_config(in, std::move(base));
}

}  // namespace densecvx
