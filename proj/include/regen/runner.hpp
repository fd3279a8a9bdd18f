#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "regen/engine.hpp"

namespace regen {

// Invalid user input: unknown names, malformed files, violated invariants.
// The CLI maps this to exit code 1 (runtime/I-O failures map to 2).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A full experiment: one engine variant run over a list of crossover rates
// (GA) or as a single cell (HAEA), `runs` seeded repetitions each.
struct ExperimentSpec {
  std::string problem;
  EngineKind engine = EngineKind::ga;
  ReplacementKind replacement = ReplacementKind::generational;
  bool regen = false;
  std::vector<double> crossover_rates = {0.6, 0.7, 0.8, 0.9, 1.0};
  int runs = 30;
  int iterations = 1000;
  int pop_size = 100;
  int tournament_k = 4;
  MutationKind mutation = MutationKind::per_bit;  // single_bit for HAEA
  MarkingParams marking;
  std::vector<MarkingPeriod> periods = default_marking_periods();
  std::uint64_t seed = 0;
  std::filesystem::path out_dir = "results";
};

// Reads a flat JSON object; unspecified keys take the defaults above.
// Throws ConfigError with file/position context on malformed input.
ExperimentSpec parse_config(const std::filesystem::path& path);

// Cell identifier, e.g. GGAX06, ReGenSSGAX10, ReGenGHAEA.
// The rate suffix is present for GA cells only.
std::string cell_label(const ExperimentSpec& spec, double crossover_rate);

// FNV-1a hash of the label folded over the base seed, so every cell gets an
// independent stream; run r inside a cell uses cell_seed + r.
std::uint64_t cell_seed(std::uint64_t base_seed, const std::string& label);

// Executes the grid and writes per-run trace CSVs
// (<out_dir>/<label>/run_###.csv with columns iteration,best_fitness) plus
// <out_dir>/summary.csv with columns label,median,std,iteration_of_best.
// Runs execute on up to `jobs` threads; all writes happen afterwards from
// the calling thread, ordered by (cell, run).
void run_grid(const ExperimentSpec& spec, int jobs);

enum class StatsMode { anova, pairwise, wilcoxon };

// Reads one group per column across the input CSVs (columns concatenate in
// argument order) and writes the selected analysis as CSV. Wilcoxon pairings
// pool columns by header prefix: each pair is "<x_prefix>:<y_prefix>"; with
// no pairs given, a two-column input pairs its columns.
void stats_report(const std::vector<std::filesystem::path>& inputs,
                  StatsMode mode, const std::filesystem::path& out_path,
                  const std::vector<std::pair<std::string, std::string>>&
                      wilcoxon_pairs = {});

}  // namespace regen
