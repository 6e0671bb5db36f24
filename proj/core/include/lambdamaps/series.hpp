#pragma once

// Truncated multivariate power series in t, x, p_1..p_K with exact rational
// coefficients, the bipartite map generating function and the limiting
// outer-degree law.

#include <map>
#include <string>
#include <vector>

#include "lambdamaps/numeric.hpp"

namespace lambdamaps {

// Exponents (t, x, p_1, ..., p_K).
using Monomial = std::vector<int>;

class TruncatedSeries {
 public:
  // Zero series; terms of t-degree above `t_max` are dropped.
  TruncatedSeries(int t_max, int k_max);

  static TruncatedSeries constant(int t_max, int k_max, const Rational& c);
  static TruncatedSeries t(int t_max, int k_max);
  static TruncatedSeries x(int t_max, int k_max);
  // 1 <= k <= k_max.
  static TruncatedSeries p(int t_max, int k_max, int k);

  int t_max() const { return t_max_; }
  int k_max() const { return k_max_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  Rational coefficient(const Monomial& m) const;
  // Adds c * m, dropping it when above the truncation.
  void add_term(const Monomial& m, const Rational& c);
  // x := value (a number), merging the x-degrees.
  TruncatedSeries substitute_x(const Rational& value) const;

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  TruncatedSeries& operator*=(const Rational& c);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(TruncatedSeries a, const Rational& c) { return a *= c; }
  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

  TruncatedSeries pow(int e) const;

  // TSV `t_deg x_deg p_multidegree numerator/denominator`, p exponents
  // comma-separated, ordered by (t, x, p).
  std::string to_tsv() const;

 private:
  void check_compatible(const TruncatedSeries& o) const;

  int t_max_;
  int k_max_;
  std::map<Monomial, Rational> terms_;
};

struct ZU {
  TruncatedSeries z;
  TruncatedSeries u;
};

// Fixed point of z = t (1 + sum_k C(2k-1, k) p_k z^k) and u = x (1 + u z),
// starting from zero. With x_symbolic false, x is set to 1.
ZU solve_zu(int n, int k_max, bool x_symbolic = true);

// (1 + u z) (1 - sum_k p_k z^k sum_{l=1}^{k-1} u^l z^l C(2k-1, k+l)).
TruncatedSeries f_bipartite(int n, int k_max);

// sum over bipartite maps with m <= n edges of t^m x^outdeg prod p_k^face_k.
TruncatedSeries bipartite_series(int n, int k_max);
// sum over reduced skeletons of size 2 <= m <= n of
// t^m x^ex prod p_k^uc_k.
TruncatedSeries reduced_skeleton_series(int n, int k_max);

struct GfCell {
  Monomial monomial;
  Rational enumerated;
  Rational formula;
  bool match = false;
};

struct GfReport {
  // Reduced skeleton series equals t^2 x times the bipartite series.
  bool relation_holds = true;
  std::string first_difference;
  // Printed-formula evaluation against the enumerated bipartite series,
  // cell by cell over the union of their supports.
  std::vector<GfCell> cells;
  int formula_mismatches = 0;
};

GfReport check_gf_relation(int n_max);

// k/3 * C(2k, k) * (3/16)^k for k >= 1, 0 otherwise.
Rational limit_pmf(int k);

struct PmfReport {
  double partial_sum = 0;
  bool partial_sums_monotone = true;
  bool partial_sums_bounded = true;
  // Outer half-degree law of bipartite maps with n edges.
  int n = 0;
  std::vector<double> empirical;  // index k
  double total_variation = 0;
};

// Partial sum of the limit law up to k_max and its total-variation distance
// to the exact outer half-degree law over bipartite maps with n edges,
// counted through degree trees by root label.
PmfReport pmf_diagnostics(int k_max, int n);

inline constexpr int kMaxRootLabelSize = 250;

// Number of degree trees with n edges by root label (equivalently bipartite
// maps by outer half-degree), in floating point. Throws SizeTooLarge above
// kMaxRootLabelSize.
std::vector<double> degree_tree_root_label_counts(int n);

}  // namespace lambdamaps
