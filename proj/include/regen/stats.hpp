#pragma once

#include <span>
#include <string>
#include <vector>

namespace regen {

struct SampleGroup {
  std::string label;
  std::vector<double> values;
};

struct DescribeResult {
  std::size_t count = 0;
  double sum = 0.0;
  double mean = 0.0;
  double variance = 0.0;  // sample variance, divisor n - 1
};

// Summary statistics; requires at least 2 values.
DescribeResult describe(const SampleGroup& group);

struct AnovaResult {
  double ss_between = 0.0;
  double ss_within = 0.0;
  int df_between = 0;
  int df_within = 0;
  double ms_between = 0.0;
  double ms_within = 0.0;
  double f_statistic = 0.0;
  double p_value = 0.0;
};

// One-way analysis of variance over >= 2 groups of >= 2 values each.
// Throws std::domain_error when the within-group variance is zero.
AnovaResult anova_one_way(const std::vector<SampleGroup>& groups);

// Pairwise two-sided t-tests using one standard deviation pooled across all
// groups (df = sum of n_i - 1), adjusted with the Benjamini-Hochberg step-up
// procedure over all pairs. Returns a symmetric matrix of adjusted p-values
// with NaN on the diagonal.
std::vector<std::vector<double>> pairwise_t_bh(
    const std::vector<SampleGroup>& groups);

struct WilcoxonResult {
  double v = 0.0;        // sum of ranks of positive differences
  double p_value = 1.0;  // two-sided, normal approximation
  std::size_t n_nonzero = 0;
};

// Paired signed-rank test. Zero differences are dropped, tied absolute
// differences get average ranks, and the p-value uses the normal
// approximation with continuity correction and tie-corrected variance.
// Throws std::domain_error when every difference is zero.
WilcoxonResult wilcoxon_signed_rank(std::span<const double> x,
                                    std::span<const double> y);

// Benjamini-Hochberg step-up adjustment; preserves the input order.
std::vector<double> benjamini_hochberg(const std::vector<double>& p_values);

// Descriptive helpers used for experiment summaries.
double median(std::vector<double> values);
double sample_std(const std::vector<double>& values);

// Distribution tails, accurate to at least 1e-12 in the regular range and
// evaluated through logarithms so that extreme tails (p ~ 1e-300) do not
// underflow prematurely.
double incomplete_beta(double a, double b, double x);  // regularized I_x(a,b)
double f_sf(double f, double df1, double df2);         // P(F > f)
double t_sf_two_sided(double t, double df);            // 2 P(T > |t|)
double normal_cdf(double z);

}  // namespace regen
