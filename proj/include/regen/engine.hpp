#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "regen/epigenome.hpp"
#include "regen/operators.hpp"
#include "regen/problems.hpp"

namespace regen {

enum class EngineKind { ga, haea };
enum class ReplacementKind { generational, steady_state };
enum class MutationKind { per_bit, single_bit };

// Iteration interval, inclusive on both ends, during which marking runs.
struct MarkingPeriod {
  int start = 0;
  int end = 0;
};

// Periods starting at 200, 500 and 800, each lasting 150 iterations.
std::vector<MarkingPeriod> default_marking_periods();

// True iff some period satisfies start <= iteration <= end.
bool marking_period_on(int iteration,
                       const std::vector<MarkingPeriod>& periods);

struct EngineConfig {
  EngineKind engine = EngineKind::ga;
  ReplacementKind replacement = ReplacementKind::generational;
  bool regen_enabled = false;
  int pop_size = 100;
  int iterations = 1000;
  double crossover_rate = 1.0;  // GA only; HAEA adapts operator rates
  MutationKind mutation = MutationKind::per_bit;  // per-bit rate is 1/L
  int tournament_k = 4;
  MarkingParams marking;
  std::vector<MarkingPeriod> periods = default_marking_periods();
  std::uint64_t seed = 0;
};

// Throws std::invalid_argument on out-of-range fields, unsorted or
// overlapping periods.
void validate(const EngineConfig& config);

// Result of one run. best_fitness_per_iteration[i] is the best fitness in
// the population after iteration i+1; final_best is the best individual
// observed at any point, and best_iteration the iteration where its fitness
// first appeared (0 means the initial population).
struct RunTrace {
  std::vector<double> best_fitness_per_iteration;
  Individual final_best;
  int best_iteration = 0;
};

// Called after each iteration with the iteration number (1-based) and the
// current population. Observers must not mutate shared state that the run
// depends on.
using IterationObserver =
    std::function<void(int, const std::vector<Individual>&)>;

RunTrace run_ga(const EngineConfig& config, const Problem& problem,
                const IterationObserver& observer = {});

RunTrace run_haea(const EngineConfig& config, const Problem& problem,
                  const IterationObserver& observer = {});

// Dispatches on config.engine.
RunTrace run_engine(const EngineConfig& config, const Problem& problem,
                    const IterationObserver& observer = {});

// Multiplicative reward/punishment of one operator rate followed by
// renormalization to sum 1. delta is in [0, 1).
void update_operator_rates(std::vector<double>& rates, std::size_t used,
                           double delta, bool reward);

// `runs` independent runs seeded config.seed + run index. Runs may execute
// on up to `jobs` threads; results are ordered by run index regardless of
// completion order.
std::vector<RunTrace> run_experiment(const EngineConfig& config,
                                     const Problem& problem, int runs,
                                     int jobs = 1);

}  // namespace regen
