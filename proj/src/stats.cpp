#include "regen/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace regen {

namespace {

// Continued fraction for the regularized incomplete beta, evaluated with the
// modified Lentz algorithm.
double beta_continued_fraction(double a, double b, double x) {
  constexpr int kMaxIterations = 500;
  constexpr double kEpsilon = 1e-15;
  constexpr double kTiny = 1e-300;
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::abs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIterations; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < kEpsilon) break;
  }
  return h;
}

void check_group(const SampleGroup& group) {
  if (group.values.size() < 2) {
    throw std::invalid_argument("group '" + group.label +
                                "' needs at least 2 values");
  }
  for (double v : group.values) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("group '" + group.label +
                                  "' contains a non-finite value");
    }
  }
}

// Average ranks of |values|, with ties shared.
std::vector<double> average_ranks(const std::vector<double>& values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return values[i] < values[j];
  });
  std::vector<double> ranks(n);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
    const double shared = (static_cast<double>(i + 1) +
                           static_cast<double>(j + 1)) / 2.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = shared;
    i = j + 1;
  }
  return ranks;
}

}  // namespace

double incomplete_beta(double a, double b, double x) {
  if (a <= 0.0 || b <= 0.0) {
    throw std::invalid_argument("incomplete_beta requires a, b > 0");
  }
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double log_front = std::lgamma(a + b) - std::lgamma(a) -
                           std::lgamma(b) + a * std::log(x) +
                           b * std::log1p(-x);
  const double front = std::exp(log_front);
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return front * beta_continued_fraction(a, b, x) / a;
  }
  return 1.0 - front * beta_continued_fraction(b, a, 1.0 - x) / b;
}

double f_sf(double f, double df1, double df2) {
  if (f <= 0.0) return 1.0;
  return incomplete_beta(df2 / 2.0, df1 / 2.0, df2 / (df2 + df1 * f));
}

double t_sf_two_sided(double t, double df) {
  return incomplete_beta(df / 2.0, 0.5, df / (df + t * t));
}

double normal_cdf(double z) {
  return 0.5 * std::erfc(-z / std::numbers::sqrt2);
}

DescribeResult describe(const SampleGroup& group) {
  check_group(group);
  DescribeResult r;
  r.count = group.values.size();
  r.sum = std::accumulate(group.values.begin(), group.values.end(), 0.0);
  r.mean = r.sum / static_cast<double>(r.count);
  double ss = 0.0;
  for (double v : group.values) {
    const double d = v - r.mean;
    ss += d * d;
  }
  r.variance = ss / static_cast<double>(r.count - 1);
  return r;
}

AnovaResult anova_one_way(const std::vector<SampleGroup>& groups) {
  if (groups.size() < 2) {
    throw std::invalid_argument("anova needs at least 2 groups");
  }
  std::size_t total_count = 0;
  double total_sum = 0.0;
  for (const auto& g : groups) {
    check_group(g);
    total_count += g.values.size();
    total_sum = std::accumulate(g.values.begin(), g.values.end(), total_sum);
  }
  const double grand_mean = total_sum / static_cast<double>(total_count);
  AnovaResult r;
  for (const auto& g : groups) {
    const double mean =
        std::accumulate(g.values.begin(), g.values.end(), 0.0) /
        static_cast<double>(g.values.size());
    const double d = mean - grand_mean;
    r.ss_between += static_cast<double>(g.values.size()) * d * d;
    for (double v : g.values) {
      const double w = v - mean;
      r.ss_within += w * w;
    }
  }
  r.df_between = static_cast<int>(groups.size()) - 1;
  r.df_within = static_cast<int>(total_count - groups.size());
  r.ms_between = r.ss_between / r.df_between;
  r.ms_within = r.ss_within / r.df_within;
  if (r.ms_within == 0.0) {
    throw std::domain_error("anova: zero within-group variance");
  }
  r.f_statistic = r.ms_between / r.ms_within;
  r.p_value = f_sf(r.f_statistic, r.df_between, r.df_within);
  return r;
}

std::vector<double> benjamini_hochberg(const std::vector<double>& p_values) {
  const std::size_t m = p_values.size();
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) {
                     return p_values[i] < p_values[j];
                   });
  std::vector<double> adjusted(m);
  double running = 1.0;
  for (std::size_t r = m; r >= 1; --r) {
    const std::size_t idx = order[r - 1];
    const double value =
        p_values[idx] * static_cast<double>(m) / static_cast<double>(r);
    running = std::min(running, std::min(value, 1.0));
    adjusted[idx] = running;
  }
  return adjusted;
}

std::vector<std::vector<double>> pairwise_t_bh(
    const std::vector<SampleGroup>& groups) {
  const std::size_t k = groups.size();
  if (k < 2) {
    throw std::invalid_argument("pairwise test needs at least 2 groups");
  }
  double ss_within = 0.0;
  std::size_t df = 0;
  std::vector<double> means(k);
  for (std::size_t i = 0; i < k; ++i) {
    check_group(groups[i]);
    const auto& v = groups[i].values;
    means[i] = std::accumulate(v.begin(), v.end(), 0.0) /
               static_cast<double>(v.size());
    for (double x : v) {
      const double d = x - means[i];
      ss_within += d * d;
    }
    df += v.size() - 1;
  }
  const double pooled_variance = ss_within / static_cast<double>(df);
  if (pooled_variance == 0.0) {
    throw std::domain_error("pairwise test: zero pooled variance");
  }
  std::vector<double> raw;
  raw.reserve(k * (k - 1) / 2);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const double se = std::sqrt(
          pooled_variance * (1.0 / static_cast<double>(groups[i].values.size()) +
                             1.0 / static_cast<double>(groups[j].values.size())));
      const double t = (means[i] - means[j]) / se;
      raw.push_back(t_sf_two_sided(t, static_cast<double>(df)));
    }
  }
  const std::vector<double> adjusted = benjamini_hochberg(raw);
  std::vector<std::vector<double>> matrix(
      k, std::vector<double>(k, std::numeric_limits<double>::quiet_NaN()));
  std::size_t pair = 0;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      matrix[i][j] = adjusted[pair];
      matrix[j][i] = adjusted[pair];
      ++pair;
    }
  }
  return matrix;
}

WilcoxonResult wilcoxon_signed_rank(std::span<const double> x,
                                    std::span<const double> y) {
  if (x.size() != y.size() || x.empty()) {
    throw std::invalid_argument(
        "wilcoxon requires two equal-length non-empty samples");
  }
  std::vector<double> diffs;
  diffs.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = x[i] - y[i];
    if (d != 0.0) diffs.push_back(d);
  }
  if (diffs.empty()) {
    throw std::domain_error("wilcoxon: all differences are zero");
  }
  const std::size_t m = diffs.size();
  std::vector<double> abs_diffs(m);
  for (std::size_t i = 0; i < m; ++i) abs_diffs[i] = std::abs(diffs[i]);
  const std::vector<double> ranks = average_ranks(abs_diffs);

  WilcoxonResult r;
  r.n_nonzero = m;
  for (std::size_t i = 0; i < m; ++i) {
    if (diffs[i] > 0.0) r.v += ranks[i];
  }

  // Tie correction: sum of t^3 - t over runs of equal absolute differences.
  std::vector<double> sorted_abs = abs_diffs;
  std::sort(sorted_abs.begin(), sorted_abs.end());
  double tie_sum = 0.0;
  std::size_t i = 0;
  while (i < m) {
    std::size_t j = i;
    while (j + 1 < m && sorted_abs[j + 1] == sorted_abs[i]) ++j;
    const double t = static_cast<double>(j - i + 1);
    tie_sum += t * t * t - t;
    i = j + 1;
  }
  const double n = static_cast<double>(m);
  const double mean = n * (n + 1.0) / 4.0;
  const double sigma =
      std::sqrt(n * (n + 1.0) * (2.0 * n + 1.0) / 24.0 - tie_sum / 48.0);
  double z = r.v - mean;
  const double correction = z > 0.0 ? 0.5 : (z < 0.0 ? -0.5 : 0.0);
  z = (z - correction) / sigma;
  // Both tails through erfc so that extreme p-values keep full precision.
  r.p_value = std::min(1.0, 2.0 * std::min(normal_cdf(z), normal_cdf(-z)));
  return r;
}

double median(std::vector<double> values) {
  if (values.empty()) {
    throw std::invalid_argument("median of an empty sequence");
  }
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  if (n % 2 == 1) return values[n / 2];
  return 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

double sample_std(const std::vector<double>& values) {
  SampleGroup g{"", values};
  return std::sqrt(describe(g).variance);
}

}  // namespace regen
