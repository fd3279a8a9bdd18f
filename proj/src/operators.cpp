#include "regen/operators.hpp"

#include <stdexcept>

namespace regen {

Individual random_individual(std::size_t length, Rng& rng) {
  Individual ind;
  ind.genotype = BitString::random(length, rng);
  ind.epigenotype.assign(length, std::nullopt);
  return ind;
}

const Individual& tournament_select(const std::vector<Individual>& population,
                                    int k, Rng& rng, Direction direction) {
  if (population.empty()) {
    throw std::invalid_argument("tournament over an empty population");
  }
  if (k < 1) {
    throw std::invalid_argument("tournament size must be positive");
  }
  const Individual* best = nullptr;
  for (int i = 0; i < k; ++i) {
    const Individual& candidate =
        population[rng.next_below(population.size())];
    if (!candidate.fitness.has_value()) {
      throw std::invalid_argument("tournament candidate has no fitness");
    }
    if (best == nullptr ||
        better(*candidate.fitness, *best->fitness, direction)) {
      best = &candidate;
    }
  }
  return *best;
}

std::pair<Individual, Individual> single_point_crossover(const Individual& p1,
                                                         const Individual& p2,
                                                         Rng& rng) {
  const std::size_t length = p1.genotype.size();
  if (p2.genotype.size() != length || p1.epigenotype.size() != length ||
      p2.epigenotype.size() != length) {
    throw std::invalid_argument("crossover parents must have equal lengths");
  }
  if (length < 2) {
    throw std::invalid_argument("crossover requires length >= 2");
  }
  const std::size_t cut = 1 + rng.next_below(length - 1);
  Individual c1;
  Individual c2;
  c1.genotype = BitString(length);
  c2.genotype = BitString(length);
  c1.epigenotype.resize(length);
  c2.epigenotype.resize(length);
  for (std::size_t i = 0; i < length; ++i) {
    const Individual& first = i < cut ? p1 : p2;
    const Individual& second = i < cut ? p2 : p1;
    c1.genotype[i] = first.genotype[i];
    c1.epigenotype[i] = first.epigenotype[i];
    c2.genotype[i] = second.genotype[i];
    c2.epigenotype[i] = second.epigenotype[i];
  }
  return {std::move(c1), std::move(c2)};
}

Individual per_bit_mutation(const Individual& ind, double rate, Rng& rng) {
  if (rate < 0.0 || rate > 1.0) {
    throw std::invalid_argument("mutation rate must be in [0, 1]");
  }
  Individual child;
  child.genotype = ind.genotype;
  child.epigenotype = ind.epigenotype;
  for (std::size_t i = 0; i < child.genotype.size(); ++i) {
    if (rng.next_bool(rate)) child.genotype.flip(i);
  }
  return child;
}

Individual single_bit_mutation(const Individual& ind, Rng& rng) {
  if (ind.genotype.empty()) {
    throw std::invalid_argument("mutation requires a non-empty genotype");
  }
  Individual child;
  child.genotype = ind.genotype;
  child.epigenotype = ind.epigenotype;
  child.genotype.flip(rng.next_below(child.genotype.size()));
  return child;
}

}  // namespace regen
