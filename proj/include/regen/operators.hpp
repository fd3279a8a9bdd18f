#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "regen/bitstring.hpp"
#include "regen/direction.hpp"
#include "regen/epigenome.hpp"

namespace regen {

// One population member: genotype, its tag layer, the cached fitness of its
// decoded phenotype, and (adaptive engines only) per-operator selection
// rates.
struct Individual {
  BitString genotype;
  Epigenotype epigenotype;
  std::optional<double> fitness;
  std::vector<double> op_rates;  // empty outside adaptive engines
};

// Random genotype with an empty (all-unset) tag layer.
Individual random_individual(std::size_t length, Rng& rng);

// Draws k members uniformly with replacement and returns the fittest under
// the direction; ties are broken in favor of the earliest draw. All members
// must carry a fitness.
const Individual& tournament_select(const std::vector<Individual>& population,
                                    int k, Rng& rng, Direction direction);

// Single point crossover with tag inheritance: the cut position c is uniform
// in 1..L-1, genotypes and tag slots are exchanged at the same cut, so every
// inherited allele keeps its tag. Children carry no fitness and no rates.
std::pair<Individual, Individual> single_point_crossover(const Individual& p1,
                                                         const Individual& p2,
                                                         Rng& rng);

// Flips each genotype bit independently with the given rate. Tags are left
// untouched; the child carries no fitness and no rates.
Individual per_bit_mutation(const Individual& ind, double rate, Rng& rng);

// Flips exactly one uniformly chosen genotype bit. Tags are left untouched;
// the child carries no fitness and no rates.
Individual single_bit_mutation(const Individual& ind, Rng& rng);

}  // namespace regen
