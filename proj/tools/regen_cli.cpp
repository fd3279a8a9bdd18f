#include <cstdint>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "regen/csv.hpp"
#include "regen/problems.hpp"
#include "regen/runner.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfigError = 1;
constexpr int kExitRuntimeError = 2;

std::vector<std::pair<std::string, std::string>> parse_pairs(
    const std::vector<std::string>& raw) {
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const std::string& item : raw) {
    const std::size_t colon = item.find(':');
    if (colon == std::string::npos || colon == 0 ||
        colon + 1 == item.size()) {
      throw regen::ConfigError("--pair expects X_PREFIX:Y_PREFIX, got '" +
                               item + "'");
    }
    pairs.emplace_back(item.substr(0, colon), item.substr(colon + 1));
  }
  return pairs;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ReGen evolutionary algorithm experiment runner"};
  app.require_subcommand(1);

  // run
  auto* run = app.add_subcommand("run", "Execute a seeded experiment grid");
  std::string config_path;
  int jobs = 1;
  std::string out_override;
  std::uint64_t seed_override = 0;
  bool seed_given = false;
  run->add_option("--config", config_path, "Experiment config (JSON)")
      ->required();
  run->add_option("--jobs", jobs, "Parallel runs (default 1)");
  auto* seed_opt =
      run->add_option("--seed", seed_override, "Override the config seed");
  run->add_option("--out", out_override, "Override the output directory");

  // stats
  auto* stats = app.add_subcommand("stats", "Statistical analysis of samples");
  std::string mode;
  std::vector<std::string> inputs;
  std::string stats_out;
  std::vector<std::string> raw_pairs;
  stats->add_option("--mode", mode, "anova | pairwise | wilcoxon")
      ->required()
      ->check(CLI::IsMember({"anova", "pairwise", "wilcoxon"}));
  stats->add_option("--input", inputs, "Input CSVs, one group per column")
      ->required();
  stats->add_option("--out", stats_out, "Output report CSV")->required();
  stats->add_option("--pair", raw_pairs,
                    "Wilcoxon pooling, one or more X_PREFIX:Y_PREFIX");

  // eval
  auto* eval = app.add_subcommand("eval", "Evaluate one bit string");
  std::string problem_name;
  std::string bits;
  eval->add_option("--problem", problem_name, "Problem name")->required();
  eval->add_option("--bits", bits, "Bit string of genome length")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitConfigError;
  }

  try {
    if (*run) {
      seed_given = seed_opt->count() > 0;
      regen::ExperimentSpec spec = regen::parse_config(config_path);
      if (seed_given) spec.seed = seed_override;
      if (!out_override.empty()) spec.out_dir = out_override;
      if (jobs < 1) throw regen::ConfigError("--jobs must be positive");
      regen::run_grid(spec, jobs);
    } else if (*stats) {
      regen::StatsMode stats_mode = regen::StatsMode::anova;
      if (mode == "pairwise") stats_mode = regen::StatsMode::pairwise;
      if (mode == "wilcoxon") stats_mode = regen::StatsMode::wilcoxon;
      std::vector<std::filesystem::path> paths(inputs.begin(), inputs.end());
      regen::stats_report(paths, stats_mode, stats_out,
                          parse_pairs(raw_pairs));
    } else if (*eval) {
      regen::Problem problem;
      regen::BitString phenotype;
      try {
        problem = regen::problem_by_name(problem_name);
        phenotype = regen::BitString::from_string(bits);
        if (phenotype.size() != problem.genome_length) {
          throw std::invalid_argument(
              "bit string length " + std::to_string(phenotype.size()) +
              " does not match genome length " +
              std::to_string(problem.genome_length));
        }
      } catch (const std::invalid_argument& e) {
        throw regen::ConfigError(e.what());
      }
      std::cout << regen::format_double(
                       regen::eval_problem(problem, phenotype))
                << '\n';
    }
  } catch (const regen::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRuntimeError;
  }
  return kExitOk;
}
