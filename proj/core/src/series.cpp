#include "lambdamaps/series.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "lambdamaps/bijections.hpp"
#include "lambdamaps/enumeration.hpp"
#include "lambdamaps/error.hpp"

namespace lambdamaps {

TruncatedSeries::TruncatedSeries(int t_max, int k_max) : t_max_(t_max), k_max_(k_max) {}

TruncatedSeries TruncatedSeries::constant(int t_max, int k_max, const Rational& c) {
  TruncatedSeries s(t_max, k_max);
  s.add_term(Monomial(2 + k_max, 0), c);
  return s;
}

TruncatedSeries TruncatedSeries::t(int t_max, int k_max) {
  TruncatedSeries s(t_max, k_max);
  Monomial m(2 + k_max, 0);
  m[0] = 1;
  s.add_term(m, 1);
  return s;
}

TruncatedSeries TruncatedSeries::x(int t_max, int k_max) {
  TruncatedSeries s(t_max, k_max);
  Monomial m(2 + k_max, 0);
  m[1] = 1;
  s.add_term(m, 1);
  return s;
}

TruncatedSeries TruncatedSeries::p(int t_max, int k_max, int k) {
  if (k < 1 || k > k_max) throw InvalidInput("p_" + std::to_string(k) + " outside p_1..p_" + std::to_string(k_max));
  TruncatedSeries s(t_max, k_max);
  Monomial m(2 + k_max, 0);
  m[1 + k] = 1;
  s.add_term(m, 1);
  return s;
}

Rational TruncatedSeries::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void TruncatedSeries::add_term(const Monomial& m, const Rational& c) {
  if (static_cast<int>(m.size()) != 2 + k_max_) throw InvalidInput("monomial has the wrong number of variables");
  if (m[0] > t_max_ || c == 0) return;
  Rational& slot = terms_[m];
  slot += c;
  if (slot == 0) terms_.erase(m);
}

TruncatedSeries TruncatedSeries::substitute_x(const Rational& value) const {
  TruncatedSeries s(t_max_, k_max_);
  for (const auto& [m, c] : terms_) {
    Monomial flat = m;
    Rational factor = 1;
    for (int i = 0; i < m[1]; ++i) factor *= value;
    flat[1] = 0;
    s.add_term(flat, c * factor);
  }
  return s;
}

void TruncatedSeries::check_compatible(const TruncatedSeries& o) const {
  if (t_max_ != o.t_max_ || k_max_ != o.k_max_) throw InvalidInput("series truncations differ");
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  a.check_compatible(b);
  TruncatedSeries out(a.t_max_, a.k_max_);
  Monomial m(2 + a.k_max_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      if (ma[0] + mb[0] > a.t_max_) continue;
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

TruncatedSeries TruncatedSeries::pow(int e) const {
  TruncatedSeries out = constant(t_max_, k_max_, 1);
  for (int i = 0; i < e; ++i) out = out * *this;
  return out;
}

std::string TruncatedSeries::to_tsv() const {
  std::ostringstream out;
  out << "t_deg\tx_deg\tp_multidegree\tnumerator/denominator\n";
  for (const auto& [m, c] : terms_) {
    out << m[0] << '\t' << m[1] << '\t';
    for (int k = 0; k < k_max_; ++k) out << (k ? "," : "") << m[2 + k];
    out << '\t' << boost::multiprecision::numerator(c) << '/' << boost::multiprecision::denominator(c) << '\n';
  }
  return out.str();
}

ZU solve_zu(int n, int k_max, bool x_symbolic) {
  if (n < 1 || k_max < 1) throw InvalidInput("solve_zu needs n >= 1 and k_max >= 1");
  const TruncatedSeries one = TruncatedSeries::constant(n, k_max, 1);
  const TruncatedSeries t = TruncatedSeries::t(n, k_max);
  const TruncatedSeries x = x_symbolic ? TruncatedSeries::x(n, k_max) : one;
  TruncatedSeries z(n, k_max);
  TruncatedSeries u(n, k_max);
  // Each round fixes one more t-order of z, and of u given z.
  for (int round = 0; round <= n; ++round) {
    TruncatedSeries inner = one;
    TruncatedSeries zk = one;
    for (int k = 1; k <= k_max; ++k) {
      zk = zk * z;
      inner += TruncatedSeries::p(n, k_max, k) * zk * Rational(binomial(2 * k - 1, k));
    }
    z = t * inner;
  }
  for (int round = 0; round <= n + 1; ++round) u = x * (one + u * z);
  return {z, u};
}

TruncatedSeries f_bipartite(int n, int k_max) {
  ZU zu = solve_zu(n, k_max, true);
  const TruncatedSeries one = TruncatedSeries::constant(n, k_max, 1);
  const TruncatedSeries uz = zu.u * zu.z;
  TruncatedSeries sum(n, k_max);
  for (int k = 1; k <= k_max; ++k) {
    TruncatedSeries inner(n, k_max);
    for (int l = 1; l <= k - 1; ++l) inner += uz.pow(l) * Rational(binomial(2 * k - 1, k + l));
    sum += TruncatedSeries::p(n, k_max, k) * zu.z.pow(k) * inner;
  }
  return (one + uz) * (one - sum);
}

namespace {

Monomial monomial(int k_max, int t_deg, int x_deg, const StatVector& p) {
  Monomial m(2 + k_max, 0);
  m[0] = t_deg;
  m[1] = x_deg;
  for (const auto& [k, count] : p) {
    if (k > k_max) throw InvalidInput("p_" + std::to_string(k) + " beyond the truncation p_" + std::to_string(k_max));
    m[1 + k] = count;
  }
  return m;
}

std::string monomial_string(const Monomial& m) {
  std::string out = "t^" + std::to_string(m[0]) + " x^" + std::to_string(m[1]) + " p^(";
  for (std::size_t k = 2; k < m.size(); ++k) out += (k > 2 ? "," : "") + std::to_string(m[k]);
  return out + ")";
}

}  // namespace

TruncatedSeries bipartite_series(int n, int k_max) {
  TruncatedSeries s(n, k_max);
  for (int m = 0; m <= n; ++m) {
    for (const RootedMap& map : gen_maps(m, MapFamily::Bipartite)) {
      MapStats st = map_stats(map);
      s.add_term(monomial(k_max, m, st.outdeg, st.face), 1);
    }
  }
  return s;
}

TruncatedSeries reduced_skeleton_series(int n, int k_max) {
  TruncatedSeries s(n, k_max);
  for (int m = 2; m <= n; ++m) {
    for (const ReducedSkeleton& r : gen_reduced_skeletons(m)) {
      SkeletonStats st = skeleton_stats(r);
      s.add_term(monomial(k_max, m, st.ex, st.uc), 1);
    }
  }
  return s;
}

GfReport check_gf_relation(int n_max) {
  if (n_max < 2) throw InvalidInput("check_gf_relation needs n_max >= 2");
  const int k_max = std::max(1, n_max - 2);
  GfReport report;

  const TruncatedSeries lhs = reduced_skeleton_series(n_max, k_max);
  const TruncatedSeries t2x = TruncatedSeries::t(n_max, k_max).pow(2) * TruncatedSeries::x(n_max, k_max);
  TruncatedSeries lifted(n_max, k_max);
  const TruncatedSeries bipartite = bipartite_series(n_max - 2, k_max);
  for (const auto& [m, c] : bipartite.terms()) {
    Monomial shifted = m;
    shifted.resize(2 + k_max);
    lifted.add_term(shifted, c);
  }
  const TruncatedSeries rhs = t2x * lifted;
  if (!(lhs == rhs)) {
    report.relation_holds = false;
    std::map<Monomial, bool> support;
    for (const auto& [m, c] : lhs.terms()) support[m] = true;
    for (const auto& [m, c] : rhs.terms()) support[m] = true;
    for (const auto& [m, flag] : support) {
      if (lhs.coefficient(m) != rhs.coefficient(m)) {
        report.first_difference = monomial_string(m) + ": reduced skeletons " + to_string(lhs.coefficient(m)) +
                                  ", bipartite maps " + to_string(rhs.coefficient(m));
        break;
      }
    }
  }

  const int b = n_max - 2;
  if (b >= 1) {
    const TruncatedSeries enumerated = bipartite_series(b, std::max(1, b));
    const TruncatedSeries printed = f_bipartite(b, std::max(1, b));
    std::map<Monomial, bool> support;
    for (const auto& [m, c] : enumerated.terms()) support[m] = true;
    for (const auto& [m, c] : printed.terms()) support[m] = true;
    for (const auto& [m, flag] : support) {
      GfCell cell{m, enumerated.coefficient(m), printed.coefficient(m), false};
      cell.match = cell.enumerated == cell.formula;
      if (!cell.match) ++report.formula_mismatches;
      report.cells.push_back(std::move(cell));
    }
  }
  return report;
}

Rational limit_pmf(int k) {
  if (k < 1) return 0;
  Rational r(BigInt(k) * binomial(2 * k, k), BigInt(3));
  for (int i = 0; i < k; ++i) r *= Rational(3, 16);
  return r;
}

std::vector<double> degree_tree_root_label_counts(int n) {
  if (n < 0) throw InvalidInput("negative size");
  if (n > kMaxRootLabelSize) throw SizeTooLarge("root label counts limited to n <= " + std::to_string(kMaxRootLabelSize));
  const int width = 2 * n + 3;
  // trees[m][a]: degree trees with m edges and root label a.
  // forests[m][s]: sequences of such trees with m edges in total (edges to
  // the parent included) and sum of (1 + root label) equal to s.
  // above[m][j]: trees with m edges and root label >= j.
  std::vector<std::vector<double>> trees(n + 1, std::vector<double>(width, 0.0));
  std::vector<std::vector<double>> forests(n + 1, std::vector<double>(width, 0.0));
  std::vector<std::vector<double>> above(n + 1, std::vector<double>(width + 1, 0.0));
  auto suffix = [&](int m) {
    for (int j = width - 1; j >= 0; --j) above[m][j] = above[m][j + 1] + trees[m][j];
  };
  trees[0][0] = 1;
  forests[0][0] = 1;
  suffix(0);
  for (int m = 1; m <= n; ++m) {
    // First child with m1 edges and label a1, the rest summing to s:
    // 1 + s <= a <= 1 + a1 + s.
    for (int m1 = 0; m1 < m; ++m1) {
      const auto& rest = forests[m - m1 - 1];
      for (int a = 1; a < width; ++a) {
        double sum = 0;
        for (int s = 0; s <= a - 1; ++s) {
          if (rest[s] != 0) sum += rest[s] * above[m1][a - 1 - s];
        }
        trees[m][a] += sum;
      }
    }
    suffix(m);
    for (int m1 = 0; m1 < m; ++m1) {
      const auto& rest = forests[m - m1 - 1];
      for (int a = 0; a < width; ++a) {
        const double head = trees[m1][a];
        if (head == 0) continue;
        for (int s = 0; s + 1 + a < width; ++s) forests[m][s + 1 + a] += head * rest[s];
      }
    }
  }
  return trees[n];
}

PmfReport pmf_diagnostics(int k_max, int n) {
  PmfReport report;
  Rational sum = 0;
  Rational previous = 0;
  for (int k = 1; k <= k_max; ++k) {
    sum += limit_pmf(k);
    if (sum < previous) report.partial_sums_monotone = false;
    if (sum > 1) report.partial_sums_bounded = false;
    previous = sum;
  }
  report.partial_sum = static_cast<double>(sum);

  report.n = n;
  std::vector<double> counts = degree_tree_root_label_counts(n);
  double total = 0;
  for (double c : counts) total += c;
  report.empirical.assign(counts.size(), 0.0);
  for (std::size_t k = 0; k < counts.size(); ++k) report.empirical[k] = counts[k] / total;

  const int top = std::max<int>(k_max, static_cast<int>(counts.size()) - 1);
  double distance = 0;
  double covered = 0;
  for (int k = 0; k <= top; ++k) {
    const double limit = static_cast<double>(limit_pmf(k));
    const double emp = k < static_cast<int>(counts.size()) ? report.empirical[k] : 0.0;
    distance += std::abs(emp - limit);
    covered += limit;
  }
  distance += std::max(0.0, 1.0 - covered);
  report.total_variation = distance / 2;
  return report;
}

}  // namespace lambdamaps
