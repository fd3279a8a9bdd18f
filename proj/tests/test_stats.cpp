#include <doctest.h>

#include <stdexcept>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <string>
#include <vector>

#include "regen/csv.hpp"
#include "regen/rng.hpp"
#include "regen/stats.hpp"

using namespace regen;

namespace {

std::filesystem::path fixture(const std::string& name) {
  return std::filesystem::path(REGEN_FIXTURE_DIR) / name;
}

std::vector<SampleGroup> load_fixture(const std::string& name) {
  const CsvTable table = read_csv(fixture(name));
  std::vector<SampleGroup> groups;
  for (std::size_t c = 0; c < table.header.size(); ++c) {
    groups.push_back(SampleGroup{table.header[c], table.columns[c]});
  }
  return groups;
}

std::vector<double> pool(const std::vector<SampleGroup>& groups,
                         const std::string& prefix) {
  std::vector<double> out;
  for (const auto& g : groups) {
    if (g.label.rfind(prefix, 0) == 0 &&
        g.label.rfind("ReGen", 0) == std::string::npos) {
      out.insert(out.end(), g.values.begin(), g.values.end());
    }
  }
  return out;
}

std::vector<double> pool_regen(const std::vector<SampleGroup>& groups,
                               const std::string& prefix) {
  std::vector<double> out;
  for (const auto& g : groups) {
    if (g.label.rfind("ReGen" + prefix, 0) == 0) {
      out.insert(out.end(), g.values.begin(), g.values.end());
    }
  }
  return out;
}

std::size_t index_of(const std::vector<SampleGroup>& groups,
                     const std::string& label) {
  for (std::size_t i = 0; i < groups.size(); ++i) {
    if (groups[i].label == label) return i;
  }
  REQUIRE(false);
  return 0;
}

// Compensated summation oracle for describe.
double kahan_sum(const std::vector<double>& values) {
  double sum = 0.0;
  double c = 0.0;
  for (double v : values) {
    const double y = v - c;
    const double t = sum + y;
    c = (t - sum) - y;
    sum = t;
  }
  return sum;
}

}  // namespace

TEST_CASE("describe on textbook inputs") {
  const DescribeResult r = describe({"t", {1.0, 2.0, 3.0}});
  CHECK(r.count == 3);
  CHECK(r.sum == 6.0);
  CHECK(r.mean == 2.0);
  CHECK(r.variance == 1.0);
  const DescribeResult c = describe({"c", {4.0, 4.0, 4.0, 4.0}});
  CHECK(c.variance == 0.0);
  CHECK_THROWS_AS(describe({"one", {1.0}}), std::invalid_argument);
}

TEST_CASE("describe reproduces the first summary row of the bundled samples") {
  const auto groups = load_fixture("samples_ga_deceptive3.csv");
  const DescribeResult r = describe(groups[index_of(groups, "GGAX06")]);
  CHECK(r.count == 30);
  CHECK(r.sum == doctest::Approx(103036).epsilon(1e-9));
  CHECK(r.mean == doctest::Approx(3434.533333).epsilon(1e-7));
  CHECK(r.variance == doctest::Approx(119.4298851).epsilon(1e-7));
}

TEST_CASE("describe matches a compensated-summation oracle on all fixtures") {
  for (const char* name :
       {"samples_ga_deceptive3.csv", "samples_ga_rastrigin.csv",
        "samples_ga_schwefel.csv", "samples_ga_griewank.csv"}) {
    for (const auto& g : load_fixture(name)) {
      const DescribeResult r = describe(g);
      const double oracle_sum = kahan_sum(g.values);
      CHECK(r.sum == doctest::Approx(oracle_sum).epsilon(1e-9));
      const double mean = oracle_sum / static_cast<double>(g.values.size());
      std::vector<double> sq;
      sq.reserve(g.values.size());
      for (double v : g.values) sq.push_back((v - mean) * (v - mean));
      const double oracle_var =
          kahan_sum(sq) / static_cast<double>(g.values.size() - 1);
      CHECK(r.variance == doctest::Approx(oracle_var).epsilon(1e-9));
    }
  }
}

TEST_CASE("anova reproduces the reference analyses") {
  SUBCASE("deceptive order three, twenty GA variants") {
    const AnovaResult r = anova_one_way(load_fixture("samples_ga_deceptive3.csv"));
    CHECK(r.f_statistic == doctest::Approx(1240.0941).epsilon(0.01 / 1240.0));
    CHECK(std::abs(r.ss_between - 3141837.193) < 0.5);
    CHECK(std::abs(r.ss_within - 77339.86667) < 0.5);
    CHECK(r.df_between == 19);
    CHECK(r.df_within == 580);
    CHECK(r.ms_within == doctest::Approx(133.3445977).epsilon(1e-6));
  }
  SUBCASE("rastrigin, twenty GA variants") {
    const AnovaResult r = anova_one_way(load_fixture("samples_ga_rastrigin.csv"));
    CHECK(std::abs(r.f_statistic - 86.3753) < 0.01);
    // The reference analysis reports 4.8815e-155.
    CHECK(r.p_value > 4.0e-155);
    CHECK(r.p_value < 5.5e-155);
  }
  SUBCASE("deceptive order three, four adaptive variants") {
    const AnovaResult r =
        anova_one_way(load_fixture("samples_haea_deceptive3.csv"));
    CHECK(std::abs(r.f_statistic - 2333.0875) < 0.01);
    CHECK(r.df_between == 3);
    CHECK(r.df_within == 116);
  }
}

TEST_CASE("anova rejects degenerate inputs") {
  CHECK_THROWS_AS(anova_one_way({{"a", {1.0, 2.0}}}), std::invalid_argument);
  CHECK_THROWS_AS(anova_one_way({{"a", {1.0}}, {"b", {2.0}}}),
                  std::invalid_argument);
  // identical groups: zero within-group variance
  CHECK_THROWS_AS(
      anova_one_way({{"a", {2.0, 2.0, 2.0}}, {"b", {2.0, 2.0, 2.0}}}),
      std::domain_error);
}

TEST_CASE("anova sum-of-squares decomposition holds on random data") {
  Rng rng(71);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<SampleGroup> groups;
    const int k = 2 + static_cast<int>(rng.next_below(6));
    double total_sum = 0.0;
    std::size_t n = 0;
    for (int g = 0; g < k; ++g) {
      SampleGroup group{"g" + std::to_string(g), {}};
      const int size = 2 + static_cast<int>(rng.next_below(40));
      for (int i = 0; i < size; ++i) {
        group.values.push_back(rng.next_double() * 100.0 + g);
      }
      for (double v : group.values) total_sum += v;
      n += group.values.size();
      groups.push_back(std::move(group));
    }
    const double grand = total_sum / static_cast<double>(n);
    double ss_total = 0.0;
    for (const auto& g : groups) {
      for (double v : g.values) ss_total += (v - grand) * (v - grand);
    }
    const AnovaResult r = anova_one_way(groups);
    CHECK(r.ss_between + r.ss_within ==
          doctest::Approx(ss_total).epsilon(1e-9));
    CHECK(r.f_statistic ==
          doctest::Approx(r.ms_between / r.ms_within).epsilon(1e-12));
  }
}

TEST_CASE("pairwise pooled t-tests reproduce the reference matrix") {
  const auto groups = load_fixture("samples_ga_deceptive3.csv");
  const auto matrix = pairwise_t_bh(groups);
  const auto at = [&](const std::string& a, const std::string& b) {
    return matrix[index_of(groups, a)][index_of(groups, b)];
  };
  CHECK(std::abs(at("GGAX06", "GGAX07") - 0.17764919) < 1e-4);
  CHECK(std::abs(at("GGAX09", "GGAX07") - 0.00554289) < 1e-4);
  CHECK(std::abs(at("ReGenGGAX07", "ReGenGGAX06") - 0.75006919) < 1e-4);
  // Extreme cells survive in log space: the reference value is 1.48e-203.
  const double extreme = at("ReGenGGAX06", "GGAX06");
  CHECK(extreme > 1e-204);
  CHECK(extreme < 1e-202);
  // Symmetry and diagonal.
  CHECK(at("GGAX06", "GGAX07") == at("GGAX07", "GGAX06"));
  CHECK(std::isnan(matrix[0][0]));
}

TEST_CASE("pairwise test needs a nonzero pooled variance") {
  const auto groups = load_fixture("samples_ga_max_ones.csv");
  CHECK_THROWS_AS(pairwise_t_bh(groups), std::domain_error);
}

TEST_CASE("identical groups give a raw p of one") {
  // Two equal-mean groups among others: the unadjusted two-sided p is 1,
  // and BH cannot push an adjusted value above 1.
  std::vector<SampleGroup> groups = {{"a", {1.0, 2.0, 3.0}},
                                     {"b", {1.0, 2.0, 3.0}},
                                     {"c", {5.0, 6.0, 7.0}}};
  const auto matrix = pairwise_t_bh(groups);
  CHECK(matrix[0][1] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("benjamini-hochberg is monotone and conservative") {
  Rng rng(73);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> raw;
    const int m = 1 + static_cast<int>(rng.next_below(40));
    for (int i = 0; i < m; ++i) raw.push_back(rng.next_double());
    const std::vector<double> adj = benjamini_hochberg(raw);
    for (int i = 0; i < m; ++i) {
      // p * m / rank can round a few ulps below p when rank == m.
      CHECK(adj[static_cast<std::size_t>(i)] >=
            raw[static_cast<std::size_t>(i)] * (1.0 - 1e-12));
      CHECK(adj[static_cast<std::size_t>(i)] <= 1.0);
      for (int j = 0; j < m; ++j) {
        if (raw[static_cast<std::size_t>(i)] <
            raw[static_cast<std::size_t>(j)]) {
          CHECK(adj[static_cast<std::size_t>(i)] <=
                adj[static_cast<std::size_t>(j)]);
        }
      }
    }
  }
}

TEST_CASE("wilcoxon reproduces the reference rastrigin comparison") {
  // Five crossover-rate variants of 30 runs pooled per replacement strategy,
  // classic against regulated, in (rate, run) order.
  const auto groups = load_fixture("samples_ga_rastrigin.csv");
  const std::vector<double> x = pool(groups, "GGAX");
  const std::vector<double> y = pool_regen(groups, "GGAX");
  REQUIRE(x.size() == 150);
  REQUIRE(y.size() == 150);
  const WilcoxonResult r = wilcoxon_signed_rank(x, y);
  CHECK(r.v == 11325.0);
  CHECK(std::abs(r.p_value - 2.322841e-26) / 2.322841e-26 < 0.05);
}

TEST_CASE("wilcoxon reproduces the tied-data comparisons") {
  const auto d3 = load_fixture("samples_ga_deceptive3.csv");
  const WilcoxonResult gen =
      wilcoxon_signed_rank(pool(d3, "GGAX"), pool_regen(d3, "GGAX"));
  CHECK(gen.v == 0.0);
  CHECK(std::abs(gen.p_value - 2.256122e-26) / 2.256122e-26 < 1e-6);
  const WilcoxonResult steady =
      wilcoxon_signed_rank(pool(d3, "SSGAX"), pool_regen(d3, "SSGAX"));
  CHECK(std::abs(steady.p_value - 2.250642e-26) / 2.250642e-26 < 1e-6);
}

TEST_CASE("wilcoxon errors when every difference is zero") {
  const std::vector<double> x = {1.0, 2.0, 3.0};
  CHECK_THROWS_AS(wilcoxon_signed_rank(x, x), std::domain_error);
  CHECK_THROWS_AS(
      wilcoxon_signed_rank(std::vector<double>{1.0}, std::vector<double>{}),
      std::invalid_argument);
}

TEST_CASE("wilcoxon rank sums split the total") {
  Rng rng(79);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng.next_below(60));
    std::vector<double> x;
    std::vector<double> y;
    for (int i = 0; i < n; ++i) {
      // Coarse grid so that ties and zero differences occur.
      x.push_back(static_cast<double>(rng.next_below(8)));
      y.push_back(static_cast<double>(rng.next_below(8)));
    }
    WilcoxonResult r;
    try {
      r = wilcoxon_signed_rank(x, y);
    } catch (const std::domain_error&) {
      continue;  // all differences zero
    }
    const double m = static_cast<double>(r.n_nonzero);
    CHECK(r.v >= 0.0);
    CHECK(r.v <= m * (m + 1.0) / 2.0);
    // V of the swapped comparison is the complementary rank sum.
    const WilcoxonResult swapped = wilcoxon_signed_rank(y, x);
    CHECK(r.v + swapped.v == doctest::Approx(m * (m + 1.0) / 2.0));
    CHECK(r.p_value == doctest::Approx(swapped.p_value).epsilon(1e-12));
    CHECK(r.p_value <= 1.0);
  }
}

TEST_CASE("distribution tails match frozen reference values") {
  // Reference values computed with scipy.stats / scipy.special.
  CHECK(incomplete_beta(2.0, 3.0, 0.4) ==
        doctest::Approx(0.5248).epsilon(1e-12));
  CHECK(incomplete_beta(290.0, 9.5, 0.95) ==
        doctest::Approx(0.04951585094566459).epsilon(1e-10));
  CHECK(f_sf(1240.0941255325806, 19, 580) <= 1e-300);
  CHECK(f_sf(2.5, 3, 40) == doctest::Approx(0.07325435201794978).epsilon(1e-10));
  CHECK(t_sf_two_sided(2.0, 10.0) ==
        doctest::Approx(0.07338803477074039).epsilon(1e-10));
  CHECK(normal_cdf(0.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(normal_cdf(-10.599839632043434) ==
        doctest::Approx(1.4924581397722886e-26).epsilon(1e-6));
  CHECK(median({3.0, 1.0, 2.0}) == 2.0);
  CHECK(median({4.0, 1.0, 2.0, 3.0}) == 2.5);
  CHECK(sample_std({1.0, 2.0, 3.0}) == doctest::Approx(1.0).epsilon(1e-12));
}
