#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "regen/bitstring.hpp"
#include "regen/codec.hpp"
#include "regen/direction.hpp"

namespace regen {

// Binary benchmarks; fitness counts over the raw bit string.
double eval_max_ones(const BitString& x);
double eval_deceptive3(const BitString& x);   // length divisible by 3
double eval_deceptive4(const BitString& x);   // length divisible by 4
double eval_royal_road(const BitString& x);   // length divisible by 8

// Real-vector benchmarks.
double eval_rastrigin(std::span<const double> v);
double eval_rosenbrock(std::span<const double> v);  // length >= 2
double eval_schwefel(std::span<const double> v);
double eval_griewank(std::span<const double> v);

enum class ProblemKind {
  max_ones,
  deceptive3,
  deceptive4,
  royal_road,
  rastrigin,
  rosenbrock,
  schwefel,
  griewank,
};

// A benchmark together with its encoding: binary problems evaluate the bit
// string directly; real problems decode dimension * n bits first.
struct Problem {
  ProblemKind kind = ProblemKind::max_ones;
  std::string name;
  std::size_t genome_length = 0;
  Direction direction = Direction::maximize;
  std::optional<RealInterval> interval;
  std::optional<int> dimension;
};

// Evaluates a phenotype bit string of exactly genome_length bits.
double eval_problem(const Problem& p, const BitString& phenotype);

// Looks up one of the eight benchmark configurations by its CLI identifier;
// throws std::invalid_argument on unknown names.
Problem problem_by_name(const std::string& name);

const std::vector<std::string>& problem_names();

}  // namespace regen
