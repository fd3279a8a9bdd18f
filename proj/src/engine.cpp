#include "regen/engine.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <utility>

namespace regen {

std::vector<MarkingPeriod> default_marking_periods() {
  return {{200, 350}, {500, 650}, {800, 950}};
}

bool marking_period_on(int iteration,
                       const std::vector<MarkingPeriod>& periods) {
  for (const auto& p : periods) {
    if (iteration >= p.start && iteration <= p.end) return true;
  }
  return false;
}

void validate(const EngineConfig& config) {
  if (config.pop_size < 2) {
    throw std::invalid_argument("population size must be at least 2");
  }
  if (config.iterations < 1) {
    throw std::invalid_argument("iterations must be positive");
  }
  if (config.crossover_rate < 0.0 || config.crossover_rate > 1.0) {
    throw std::invalid_argument("crossover rate must be in [0, 1]");
  }
  if (config.tournament_k < 1) {
    throw std::invalid_argument("tournament size must be positive");
  }
  validate(config.marking);
  int previous_end = -1;
  for (const auto& p : config.periods) {
    if (p.start < 0 || p.end < p.start) {
      throw std::invalid_argument("marking period must have 0 <= start <= end");
    }
    if (p.start <= previous_end) {
      throw std::invalid_argument(
          "marking periods must be sorted and non-overlapping");
    }
    previous_end = p.end;
  }
}

namespace {

double evaluate(const Problem& problem, const Individual& ind, bool regen) {
  if (regen) {
    return eval_problem(problem, grow(ind.genotype, ind.epigenotype));
  }
  return eval_problem(problem, ind.genotype);
}

std::size_t best_index(const std::vector<Individual>& pop, Direction dir) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < pop.size(); ++i) {
    if (better(*pop[i].fitness, *pop[best].fitness, dir)) best = i;
  }
  return best;
}

std::size_t worst_index(const std::vector<Individual>& pop, Direction dir) {
  std::size_t worst = 0;
  for (std::size_t i = 1; i < pop.size(); ++i) {
    if (better(*pop[worst].fitness, *pop[i].fitness, dir)) worst = i;
  }
  return worst;
}

// Shared bookkeeping across both engines: per-iteration population best and
// the first iteration at which the overall best fitness appeared.
class TraceRecorder {
 public:
  TraceRecorder(int iterations, Direction dir) : dir_(dir) {
    trace_.best_fitness_per_iteration.reserve(
        static_cast<std::size_t>(iterations));
  }

  void on_initial(const std::vector<Individual>& pop) {
    const std::size_t idx = best_index(pop, dir_);
    trace_.final_best = pop[idx];
    trace_.best_iteration = 0;
  }

  void on_iteration(int it, const std::vector<Individual>& pop) {
    const std::size_t idx = best_index(pop, dir_);
    const double fitness = *pop[idx].fitness;
    trace_.best_fitness_per_iteration.push_back(fitness);
    if (better(fitness, *trace_.final_best.fitness, dir_)) {
      trace_.final_best = pop[idx];
      trace_.best_iteration = it;
    }
  }

  RunTrace take() { return std::move(trace_); }

 private:
  Direction dir_;
  RunTrace trace_;
};

}  // namespace

RunTrace run_ga(const EngineConfig& config, const Problem& problem,
                const IterationObserver& observer) {
  validate(config);
  if (problem.genome_length < 2) {
    throw std::invalid_argument("problem genome length must be at least 2");
  }
  const std::size_t length = problem.genome_length;
  const Direction dir = problem.direction;
  const double per_bit_rate = 1.0 / static_cast<double>(length);
  Rng rng(config.seed);

  std::vector<Individual> population;
  population.reserve(static_cast<std::size_t>(config.pop_size));
  for (int i = 0; i < config.pop_size; ++i) {
    Individual ind = random_individual(length, rng);
    ind.fitness = evaluate(problem, ind, config.regen_enabled);
    population.push_back(std::move(ind));
  }

  TraceRecorder recorder(config.iterations, dir);
  recorder.on_initial(population);

  std::vector<Individual> offspring;
  offspring.reserve(population.size());
  for (int it = 1; it <= config.iterations; ++it) {
    offspring.clear();
    const bool marking_on =
        config.regen_enabled && marking_period_on(it, config.periods);
    while (offspring.size() < population.size()) {
      const Individual& p1 =
          tournament_select(population, config.tournament_k, rng, dir);
      const Individual& p2 =
          tournament_select(population, config.tournament_k, rng, dir);
      std::pair<Individual, Individual> pair;
      if (rng.next_bool(config.crossover_rate)) {
        pair = single_point_crossover(p1, p2, rng);
      } else {
        pair = {p1, p2};
      }
      auto mutate = [&](const Individual& ind) {
        return config.mutation == MutationKind::per_bit
                   ? per_bit_mutation(ind, per_bit_rate, rng)
                   : single_bit_mutation(ind, rng);
      };
      offspring.push_back(mutate(pair.first));
      if (offspring.size() < population.size()) {
        offspring.push_back(mutate(pair.second));
      }
    }
    for (Individual& child : offspring) {
      if (marking_on) {
        child.epigenotype = mark(child.epigenotype, config.marking, rng);
      }
      child.fitness = evaluate(problem, child, config.regen_enabled);
    }
    if (config.replacement == ReplacementKind::generational) {
      population.swap(offspring);
    } else {
      // The best child replaces the worst member only when strictly fitter.
      const std::size_t child_idx = best_index(offspring, dir);
      const std::size_t victim_idx = worst_index(population, dir);
      if (better(*offspring[child_idx].fitness,
                 *population[victim_idx].fitness, dir)) {
        population[victim_idx] = std::move(offspring[child_idx]);
      }
    }
    recorder.on_iteration(it, population);
    if (observer) observer(it, population);
  }
  return recorder.take();
}

void update_operator_rates(std::vector<double>& rates, std::size_t used,
                           double delta, bool reward) {
  rates[used] *= reward ? (1.0 + delta) : (1.0 - delta);
  double sum = 0.0;
  for (double r : rates) sum += r;
  for (double& r : rates) r /= sum;
}

RunTrace run_haea(const EngineConfig& config, const Problem& problem,
                  const IterationObserver& observer) {
  validate(config);
  if (problem.genome_length < 2) {
    throw std::invalid_argument("problem genome length must be at least 2");
  }
  // Operator 0 is crossover, operator 1 is single-bit mutation.
  constexpr std::size_t kCrossover = 0;
  constexpr std::size_t kMutation = 1;
  const std::size_t length = problem.genome_length;
  const Direction dir = problem.direction;
  Rng rng(config.seed);

  std::vector<Individual> population;
  population.reserve(static_cast<std::size_t>(config.pop_size));
  for (int i = 0; i < config.pop_size; ++i) {
    Individual ind = random_individual(length, rng);
    ind.op_rates = {0.5, 0.5};
    ind.fitness = evaluate(problem, ind, config.regen_enabled);
    population.push_back(std::move(ind));
  }

  TraceRecorder recorder(config.iterations, dir);
  recorder.on_initial(population);

  for (int it = 1; it <= config.iterations; ++it) {
    const bool marking_on =
        config.regen_enabled && marking_period_on(it, config.periods);
    std::vector<Individual> next_population;
    next_population.reserve(population.size());
    for (const Individual& ind : population) {
      std::vector<double> rates = ind.op_rates;
      const std::size_t oper =
          rng.next_double() < rates[kCrossover] ? kCrossover : kMutation;
      std::vector<Individual> offspring;
      if (oper == kCrossover) {
        const Individual& partner =
            tournament_select(population, config.tournament_k, rng, dir);
        auto pair = single_point_crossover(ind, partner, rng);
        offspring.push_back(std::move(pair.first));
        offspring.push_back(std::move(pair.second));
      } else {
        offspring.push_back(single_bit_mutation(ind, rng));
      }
      for (Individual& child : offspring) {
        if (marking_on) {
          child.epigenotype = mark(child.epigenotype, config.marking, rng);
        }
        child.fitness = evaluate(problem, child, config.regen_enabled);
      }
      std::size_t child_idx = best_index(offspring, dir);
      const bool improved =
          better(*offspring[child_idx].fitness, *ind.fitness, dir);
      Individual child;
      if (config.replacement == ReplacementKind::steady_state && !improved) {
        child = ind;  // parent survives unless a child is strictly fitter
      } else {
        child = std::move(offspring[child_idx]);
      }
      const double delta = rng.next_double();
      update_operator_rates(rates, oper, delta, improved);
      child.op_rates = std::move(rates);
      next_population.push_back(std::move(child));
    }
    population.swap(next_population);
    recorder.on_iteration(it, population);
    if (observer) observer(it, population);
  }
  return recorder.take();
}

RunTrace run_engine(const EngineConfig& config, const Problem& problem,
                    const IterationObserver& observer) {
  return config.engine == EngineKind::ga ? run_ga(config, problem, observer)
                                         : run_haea(config, problem, observer);
}

std::vector<RunTrace> run_experiment(const EngineConfig& config,
                                     const Problem& problem, int runs,
                                     int jobs) {
  if (runs < 1) {
    throw std::invalid_argument("runs must be positive");
  }
  std::vector<RunTrace> traces(static_cast<std::size_t>(runs));
  auto run_one = [&](int index) {
    EngineConfig run_config = config;
    run_config.seed = config.seed + static_cast<std::uint64_t>(index);
    traces[static_cast<std::size_t>(index)] = run_engine(run_config, problem);
  };
  if (jobs <= 1 || runs == 1) {
    for (int i = 0; i < runs; ++i) run_one(i);
    return traces;
  }
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      const int i = next.fetch_add(1);
      if (i >= runs) return;
      try {
        run_one(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  const int thread_count = std::min(jobs, runs);
  pool.reserve(static_cast<std::size_t>(thread_count));
  for (int t = 0; t < thread_count; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return traces;
}

}  // namespace regen
