#include "regen/problems.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace regen {

namespace {

constexpr std::array<double, 8> kDeceptive3Values = {28, 26, 22, 0,
                                                     14, 0,  0,  30};

constexpr std::array<double, 16> kDeceptive4Values = {5, 1, 1, 2, 1, 2, 2, 3,
                                                      1, 2, 2, 3, 2, 3, 3, 4};

double block_table_sum(const BitString& x, std::size_t block,
                       std::span<const double> table, const char* what) {
  if (x.size() % block != 0) {
    throw std::invalid_argument(std::string(what) +
                                ": length not divisible by block size");
  }
  double total = 0.0;
  for (std::size_t k = 0; k < x.size(); k += block) {
    total += table[x.to_uint(k, block)];
  }
  return total;
}

}  // namespace

double eval_max_ones(const BitString& x) {
  return static_cast<double>(x.count_ones());
}

double eval_deceptive3(const BitString& x) {
  return block_table_sum(x, 3, kDeceptive3Values, "deceptive3");
}

double eval_deceptive4(const BitString& x) {
  return block_table_sum(x, 4, kDeceptive4Values, "deceptive4");
}

double eval_royal_road(const BitString& x) {
  if (x.size() % 8 != 0) {
    throw std::invalid_argument("royal_road: length not divisible by 8");
  }
  // Each complete all-ones order-8 schema contributes its order.
  double total = 0.0;
  for (std::size_t k = 0; k < x.size(); k += 8) {
    if (x.to_uint(k, 8) == 0xff) total += 8.0;
  }
  return total;
}

double eval_rastrigin(std::span<const double> v) {
  double sum = 10.0 * static_cast<double>(v.size());
  for (double x : v) {
    sum += x * x - 10.0 * std::cos(2.0 * std::numbers::pi * x);
  }
  return sum;
}

double eval_rosenbrock(std::span<const double> v) {
  if (v.size() < 2) {
    throw std::invalid_argument("rosenbrock: needs at least 2 dimensions");
  }
  constexpr double a = 1.0;
  constexpr double b = 100.0;
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    const double t1 = v[i + 1] - v[i] * v[i];
    const double t2 = a - v[i];
    sum += b * t1 * t1 + t2 * t2;
  }
  return sum;
}

double eval_schwefel(std::span<const double> v) {
  double sum = 418.9829 * static_cast<double>(v.size());
  for (double x : v) {
    sum -= x * std::sin(std::sqrt(std::abs(x)));
  }
  return sum;
}

double eval_griewank(std::span<const double> v) {
  double sum = 0.0;
  double product = 1.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    sum += v[i] * v[i] / 4000.0;
    product *= std::cos(v[i] / std::sqrt(static_cast<double>(i + 1)));
  }
  return 1.0 + sum - product;
}

double eval_problem(const Problem& p, const BitString& phenotype) {
  if (phenotype.size() != p.genome_length) {
    throw std::invalid_argument("phenotype length does not match problem");
  }
  switch (p.kind) {
    case ProblemKind::max_ones:
      return eval_max_ones(phenotype);
    case ProblemKind::deceptive3:
      return eval_deceptive3(phenotype);
    case ProblemKind::deceptive4:
      return eval_deceptive4(phenotype);
    case ProblemKind::royal_road:
      return eval_royal_road(phenotype);
    case ProblemKind::rastrigin:
    case ProblemKind::rosenbrock:
    case ProblemKind::schwefel:
    case ProblemKind::griewank: {
      const std::vector<double> v =
          decode_vector(phenotype, *p.interval, *p.dimension);
      if (p.kind == ProblemKind::rastrigin) return eval_rastrigin(v);
      if (p.kind == ProblemKind::rosenbrock) return eval_rosenbrock(v);
      if (p.kind == ProblemKind::schwefel) return eval_schwefel(v);
      return eval_griewank(v);
    }
  }
  throw std::logic_error("unreachable");
}

namespace {

Problem make_binary(ProblemKind kind, std::string name) {
  Problem p;
  p.kind = kind;
  p.name = std::move(name);
  p.genome_length = 360;
  p.direction = Direction::maximize;
  return p;
}

Problem make_real(ProblemKind kind, std::string name, double a, double b) {
  Problem p;
  p.kind = kind;
  p.name = std::move(name);
  p.direction = Direction::minimize;
  p.interval = RealInterval{a, b, 32};
  p.dimension = 10;
  p.genome_length = 10 * 32;
  return p;
}

}  // namespace

Problem problem_by_name(const std::string& name) {
  if (name == "max_ones") return make_binary(ProblemKind::max_ones, name);
  if (name == "deceptive3") return make_binary(ProblemKind::deceptive3, name);
  if (name == "deceptive4") return make_binary(ProblemKind::deceptive4, name);
  if (name == "royal_road") return make_binary(ProblemKind::royal_road, name);
  if (name == "rastrigin")
    return make_real(ProblemKind::rastrigin, name, -5.12, 5.12);
  if (name == "rosenbrock")
    return make_real(ProblemKind::rosenbrock, name, -2.048, 2.048);
  if (name == "schwefel")
    return make_real(ProblemKind::schwefel, name, -500.0, 500.0);
  if (name == "griewank")
    return make_real(ProblemKind::griewank, name, -600.0, 600.0);
  throw std::invalid_argument("unknown problem: " + name);
}

const std::vector<std::string>& problem_names() {
  static const std::vector<std::string> names = {
      "max_ones",  "deceptive3", "deceptive4", "royal_road",
      "rastrigin", "rosenbrock", "schwefel",   "griewank"};
  return names;
}

}  // namespace regen
