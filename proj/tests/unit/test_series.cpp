#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <random>

#include "lambdamaps/enumeration.hpp"
#include "lambdamaps/error.hpp"
#include "lambdamaps/series.hpp"
#include "oracles.hpp"

using namespace lambdamaps;

namespace {

// Monomial t^a x^b p_1^c1 ... p_K^cK.
Monomial mono(int k_max, int t, int x, std::vector<int> p = {}) {
  Monomial m(2 + k_max, 0);
  m[0] = t;
  m[1] = x;
  for (std::size_t i = 0; i < p.size(); ++i) m[2 + i] = p[i];
  return m;
}

TruncatedSeries random_series(std::mt19937& rng, int t_max, int k_max) {
  std::uniform_int_distribution<int> deg(0, t_max), small(0, 2), coef(-5, 5), den(1, 4);
  TruncatedSeries s(t_max, k_max);
  for (int i = 0; i < 6; ++i) {
    Monomial m(2 + k_max, 0);
    m[0] = deg(rng);
    m[1] = small(rng);
    for (int k = 0; k < k_max; ++k) m[2 + k] = small(rng);
    s.add_term(m, Rational(coef(rng), den(rng)));
  }
  return s;
}

}  // namespace

TEST(TruncatedSeries, Arithmetic) {
  const int N = 4, K = 1;
  TruncatedSeries t = TruncatedSeries::t(N, K);
  TruncatedSeries one = TruncatedSeries::constant(N, K, 1);
  // (1 - t) (1 + t + ... + t^N) = 1 - t^(N+1) = 1 after truncation.
  TruncatedSeries geo(N, K);
  for (int j = 0; j <= N; ++j) geo += t.pow(j);
  EXPECT_EQ((one - t) * geo, one);
  EXPECT_EQ(t.pow(N + 1), TruncatedSeries(N, K));
  EXPECT_EQ(TruncatedSeries::x(N, K).substitute_x(3).coefficient(mono(K, 0, 0)), Rational(3));
  EXPECT_THROW(TruncatedSeries::p(N, K, 2), InvalidInput);
  EXPECT_THROW(TruncatedSeries(N, K) + TruncatedSeries(N + 1, K), InvalidInput);
}

TEST(TruncatedSeries, RingAxioms) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    TruncatedSeries a = random_series(rng, 4, 2), b = random_series(rng, 4, 2), c = random_series(rng, 4, 2);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a - a, TruncatedSeries(4, 2));
  }
}

TEST(TruncatedSeries, Tsv) {
  TruncatedSeries s(2, 1);
  s.add_term(mono(1, 1, 0, {1}), Rational(-1, 2));
  s.add_term(mono(1, 0, 0, {0}), Rational(3));
  EXPECT_EQ(s.to_tsv(), "t_deg\tx_deg\tp_multidegree\tnumerator/denominator\n0\t0\t0\t3/1\n1\t0\t1\t-1/2\n");
}

TEST(SolveZU, NoFaces) {
  const int N = 5, K = 1;
  ZU zu = solve_zu(N, K);
  EXPECT_EQ(zu.z.coefficient(mono(K, 0, 0)), Rational(0));
  EXPECT_EQ(zu.z.coefficient(mono(K, 1, 0)), Rational(1));
  for (int j = 2; j <= N; ++j) EXPECT_EQ(zu.z.coefficient(mono(K, j, 0)), Rational(0));
  // u = x / (1 - x t) at p = 0.
  for (int j = 0; j <= N; ++j) {
    EXPECT_EQ(zu.u.coefficient(mono(K, j, j + 1)), Rational(1)) << j;
    EXPECT_EQ(zu.u.coefficient(mono(K, j, j)), Rational(0)) << j;
  }
}

TEST(SolveZU, GeometricInP1) {
  const int N = 5, K = 1;
  ZU zu = solve_zu(N, K);
  for (int j = 0; j + 1 <= N; ++j) EXPECT_EQ(zu.z.coefficient(mono(K, j + 1, 0, {j})), Rational(1)) << j;
}

TEST(SolveZU, XSetToOne) {
  ZU zu = solve_zu(3, 1, false);
  for (const auto& [m, c] : zu.u.terms()) EXPECT_EQ(m[1], 0);
  EXPECT_EQ(zu.u.coefficient(mono(1, 2, 0)), Rational(1));
}

TEST(FBipartite, LowOrder) {
  TruncatedSeries f = f_bipartite(4, 2);
  EXPECT_EQ(f.coefficient(mono(2, 0, 0)), Rational(1));
  EXPECT_EQ(f.coefficient(mono(2, 1, 1)), Rational(1));
  EXPECT_EQ(f.coefficient(mono(2, 1, 0)), Rational(0));
}

TEST(FBipartite, AgreesWithEnumerationUpToT1) {
  TruncatedSeries f = f_bipartite(4, 4);
  TruncatedSeries e = bipartite_series(4, 4);
  for (const auto& [m, c] : e.terms()) {
    if (m[0] <= 1) EXPECT_EQ(f.coefficient(m), c);
  }
}

TEST(BipartiteSeries, CoefficientSumsAreCounts) {
  TruncatedSeries e = bipartite_series(5, 5);
  std::map<int, Rational> by_t;
  for (const auto& [m, c] : e.terms()) by_t[m[0]] += c;
  for (int n = 0; n <= 5; ++n) EXPECT_EQ(by_t[n], Rational(oracle::bipartite_maps(n))) << n;
}

TEST(GfRelation, SizeThree) {
  TruncatedSeries lhs = reduced_skeleton_series(3, 1);
  int at_three = 0;
  for (const auto& [m, c] : lhs.terms()) {
    if (m[0] == 3) {
      ++at_three;
      EXPECT_EQ(m, mono(1, 3, 2));
      EXPECT_EQ(c, Rational(1));
    }
  }
  EXPECT_EQ(at_three, 1);
  EXPECT_TRUE(check_gf_relation(3).relation_holds);
}

TEST(GfRelation, HoldsToSix) {
  GfReport r = check_gf_relation(6);
  EXPECT_TRUE(r.relation_holds) << r.first_difference;
  EXPECT_FALSE(r.cells.empty());
  int mismatches = 0;
  for (const GfCell& c : r.cells) mismatches += c.match ? 0 : 1;
  EXPECT_EQ(mismatches, r.formula_mismatches);
}

TEST(LimitPmf, Values) {
  EXPECT_EQ(limit_pmf(1), Rational(1, 8));
  EXPECT_EQ(limit_pmf(0), Rational(0));
  EXPECT_EQ(limit_pmf(-3), Rational(0));
  // 2/3 * 6 * 9/256.
  EXPECT_EQ(limit_pmf(2), Rational(9, 64));
}

TEST(PmfDiagnostics, PartialSum) {
  PmfReport r = pmf_diagnostics(200, 4);
  EXPECT_NEAR(r.partial_sum, 1.0, 1e-9);
  EXPECT_TRUE(r.partial_sums_monotone);
  EXPECT_TRUE(r.partial_sums_bounded);
}

TEST(RootLabelCounts, AgainstEnumeration) {
  for (int n = 0; n <= 6; ++n) {
    std::vector<double> dp = degree_tree_root_label_counts(n);
    std::map<int, long long> by_outdeg;
    for (const RootedMap& m : gen_maps(n, MapFamily::Bipartite)) ++by_outdeg[map_stats(m).outdeg];
    std::map<int, long long> by_label;
    for (const LabeledTree& t : gen_trees(n, TreeKind::Degree)) ++by_label[t.root_label()];
    for (int k = 0; k < static_cast<int>(dp.size()); ++k) {
      EXPECT_EQ(dp[k], static_cast<double>(by_outdeg[k])) << "n=" << n << " k=" << k;
      EXPECT_EQ(dp[k], static_cast<double>(by_label[k])) << "n=" << n << " k=" << k;
    }
  }
}

TEST(RootLabelCounts, TotalsMatchClosedFormForLargeN) {
  for (int n : {30, 120}) {
    double total = 0;
    for (double c : degree_tree_root_label_counts(n)) {
      EXPECT_GE(c, 0.0);
      total += c;
    }
    double log_formula = std::log(3.0) + (n - 1) * std::log(2.0) + std::lgamma(2 * n + 1.0) -
                         std::lgamma(n + 1.0) - std::lgamma(n + 3.0);
    EXPECT_NEAR(std::log(total), log_formula, 1e-9) << n;
  }
  EXPECT_THROW(degree_tree_root_label_counts(kMaxRootLabelSize + 1), SizeTooLarge);
}
