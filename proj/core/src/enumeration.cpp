#include "lambdamaps/enumeration.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

#include "lambdamaps/error.hpp"
#include "lambdamaps/numeric.hpp"

namespace lambdamaps {

namespace {

std::mutex cache_mutex;

void check_size(const char* what, int n, int lo, int hi) {
  if (n < lo || n > hi) {
    throw SizeTooLarge(std::string(what) + ": size " + std::to_string(n) + " outside " +
                       std::to_string(lo) + ".." + std::to_string(hi));
  }
}

// Normal unary-binary trees whose every maximal block U^c(x) has
// leaf - unary >= 0; a superset of the planar linear normal skeletons.
class SkeletonBuilder {
 public:
  const std::vector<Skeleton>& block(int l, int u) {
    auto key = std::make_pair(l, u);
    if (auto it = blocks_.find(key); it != blocks_.end()) return it->second;
    std::vector<Skeleton> out;
    if (u <= l) {
      for (int c = 0; c <= u; ++c) {
        for (const Skeleton& x : bare(l, u - c)) out.push_back(unary_chain(c, x));
      }
    }
    return blocks_.emplace(key, std::move(out)).first->second;
  }

 private:
  // Non-unary top node.
  const std::vector<Skeleton>& bare(int l, int u) {
    auto key = std::make_pair(l, u);
    if (auto it = bares_.find(key); it != bares_.end()) return it->second;
    std::vector<Skeleton> out;
    if (l == 1 && u == 0) out.push_back(Skeleton::leaf());
    if (l >= 2 && u <= l) {
      for (int l1 = 1; l1 < l; ++l1) {
        for (int u1 = 0; u1 <= std::min(u, l1); ++u1) {
          const auto& lefts = bare(l1, u1);
          if (lefts.empty()) continue;
          const auto& rights = block(l - l1, u - u1);
          for (const Skeleton& a : lefts) {
            for (const Skeleton& b : rights) out.push_back(Skeleton::binary(a, b));
          }
        }
      }
    }
    return bares_.emplace(key, std::move(out)).first->second;
  }

  std::map<std::pair<int, int>, std::vector<Skeleton>> blocks_;
  std::map<std::pair<int, int>, std::vector<Skeleton>> bares_;
};

std::vector<Skeleton> build_skeletons(int n, TermFamily level) {
  SkeletonBuilder builder;
  std::vector<Skeleton> out;
  for (const Skeleton& s : builder.block(n, n)) {
    if (check_family(s, level)) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

const std::vector<Skeleton>& gen_skeletons(int n, TermFamily level) {
  check_size("gen_skeletons", n, 1, kMaxSkeletonSize);
  static std::map<std::pair<int, TermFamily>, std::vector<Skeleton>> cache;
  std::lock_guard lock(cache_mutex);
  auto key = std::make_pair(n, level);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  return cache.emplace(key, build_skeletons(n, level)).first->second;
}

std::vector<Skeleton> gen_unary_binary_trees(int leaves, int unaries) {
  std::map<std::pair<int, int>, std::vector<Skeleton>> memo;
  auto all = [&memo](auto&& self, int l, int u) -> const std::vector<Skeleton>& {
    auto key = std::make_pair(l, u);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::vector<Skeleton> out;
    if (l == 1 && u == 0) out.push_back(Skeleton::leaf());
    if (l >= 1 && u >= 1) {
      for (const Skeleton& t : self(self, l, u - 1)) out.push_back(Skeleton::unary(t));
    }
    for (int l1 = 1; l1 < l; ++l1) {
      for (int u1 = 0; u1 <= u; ++u1) {
        const std::vector<Skeleton>& lefts = self(self, l1, u1);
        const std::vector<Skeleton>& rights = self(self, l - l1, u - u1);
        for (const Skeleton& a : lefts) {
          for (const Skeleton& b : rights) out.push_back(Skeleton::binary(a, b));
        }
      }
    }
    return memo.emplace(key, std::move(out)).first->second;
  };
  std::vector<Skeleton> out = all(all, leaves, unaries);
  std::sort(out.begin(), out.end());
  return out;
}

const std::vector<ReducedSkeleton>& gen_reduced_skeletons(int n) {
  const std::vector<Skeleton>& full = gen_skeletons(n, TermFamily::ThreeConnected);
  static std::map<int, std::vector<ReducedSkeleton>> cache;
  std::lock_guard lock(cache_mutex);
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  std::vector<ReducedSkeleton> out;
  out.reserve(full.size());
  for (const Skeleton& s : full) out.push_back(reduce_skeleton(s));
  std::sort(out.begin(), out.end(),
            [](const ReducedSkeleton& a, const ReducedSkeleton& b) { return a.skeleton() < b.skeleton(); });
  return cache.emplace(n, std::move(out)).first->second;
}

namespace {

std::vector<RootedMap> brute_force_maps(int n) {
  if (n == 0) return {RootedMap()};
  RotationSystem r;
  r.n = n;
  r.sigma.resize(2 * n);
  std::iota(r.sigma.begin(), r.sigma.end(), 0);
  std::set<RootedMap> found;
  do {
    if (validate_map(r)) found.insert(RootedMap(r));
  } while (std::next_permutation(r.sigma.begin(), r.sigma.end()));
  return {found.begin(), found.end()};
}

bool in_family(const RootedMap& m, MapFamily family) {
  switch (family) {
    case MapFamily::All:
      return true;
    case MapFamily::Loopless:
      return map_stats(m).loopless;
    case MapFamily::Bipartite:
      return map_stats(m).bipartite;
  }
  return false;
}

}  // namespace

const std::vector<RootedMap>& gen_maps(int n, MapFamily family) {
  check_size("gen_maps", n, 0, kMaxMapSize);
  static std::map<std::pair<int, MapFamily>, std::vector<RootedMap>> cache;
  const auto key = std::make_pair(n, family);
  {
    std::lock_guard lock(cache_mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  std::vector<RootedMap> maps;
  if (family != MapFamily::All) {
    for (const RootedMap& m : gen_maps(n, MapFamily::All)) {
      if (in_family(m, family)) maps.push_back(m);
    }
  } else if (n <= kMaxBruteForceMapSize) {
    maps = brute_force_maps(n);
  } else {
    std::set<RootedMap> found;
    for (const LabeledTree& v : gen_trees(n, TreeKind::VTree)) found.insert(rho_inv(VTree(v)));
    maps.assign(found.begin(), found.end());
  }
  std::lock_guard lock(cache_mutex);
  return cache.emplace(key, std::move(maps)).first->second;
}

namespace {

// Pre-order (child count, label) pairs.
using Compact = std::vector<std::pair<int, int>>;

class TreeBuilder {
 public:
  explicit TreeBuilder(TreeKind kind) : kind_(kind) {}

  std::vector<Compact> roots(int m) { return build(m, true); }

 private:
  bool allowed(int label) const { return kind_ != TreeKind::VTreePositive || label != 0; }

  const std::vector<Compact>& subtrees(int m) {
    if (auto it = sub_.find(m); it != sub_.end()) return it->second;
    return sub_.emplace(m, build(m, false)).first->second;
  }

  // Sequences of sub-trees using m edges in total, edges to the parent
  // included; each entry keeps its concatenated encoding, the number of
  // trees, the first root label and the sum of root labels.
  struct Forest {
    Compact code;
    int count = 0;
    int first_label = 0;
    int label_sum = 0;
  };

  const std::vector<Forest>& forests(int m) {
    if (auto it = forests_.find(m); it != forests_.end()) return it->second;
    std::vector<Forest> out;
    if (m == 0) out.push_back(Forest{});
    for (int m1 = 0; m1 < m; ++m1) {
      const std::vector<Compact>& heads = subtrees(m1);
      const std::vector<Forest>& tails = forests(m - m1 - 1);
      for (const Compact& h : heads) {
        for (const Forest& t : tails) {
          Forest f;
          f.code = h;
          f.code.insert(f.code.end(), t.code.begin(), t.code.end());
          f.count = t.count + 1;
          f.first_label = h.front().second;
          f.label_sum = t.label_sum + h.front().second;
          out.push_back(std::move(f));
        }
      }
    }
    return forests_.emplace(m, std::move(out)).first->second;
  }

  std::vector<Compact> build(int m, bool root) {
    std::vector<Compact> out;
    if (m == 0) {
      for (int label : leaf_labels(root)) out.push_back(Compact{{0, label}});
      return out;
    }
    for (const Forest& f : forests(m)) {
      auto [lo, hi] = label_range(f, root);
      for (int label = lo; label <= hi; ++label) {
        if (!allowed(label)) continue;
        Compact c{{f.count, label}};
        c.insert(c.end(), f.code.begin(), f.code.end());
        out.push_back(std::move(c));
      }
    }
    return out;
  }

  std::vector<int> leaf_labels(bool root) const {
    if (kind_ == TreeKind::Degree) return {0};
    if (root) return {1};
    if (kind_ == TreeKind::VTreePositive) return {1};
    return {0, 1};
  }

  std::pair<int, int> label_range(const Forest& f, bool root) const {
    if (kind_ == TreeKind::Degree) {
      const int s = f.count + f.label_sum;
      return {s - f.first_label, s};
    }
    const int bound = 1 + f.label_sum;
    if (root) return {bound, bound};
    return {0, bound};
  }

  TreeKind kind_;
  std::map<int, std::vector<Compact>> sub_;
  std::map<int, std::vector<Forest>> forests_;
};

LabeledTree expand(const Compact& c, std::size_t& pos) {
  auto [count, label] = c[pos++];
  std::vector<LabeledTree> kids;
  kids.reserve(count);
  for (int i = 0; i < count; ++i) kids.push_back(expand(c, pos));
  return LabeledTree::graft(label, kids);
}

std::vector<LabeledTree> build_trees(int n, TreeKind kind) {
  TreeBuilder builder(kind);
  std::vector<std::pair<std::string, LabeledTree>> keyed;
  for (const Compact& c : builder.roots(n)) {
    std::size_t pos = 0;
    LabeledTree t = expand(c, pos);
    std::string key = t.to_string();
    keyed.emplace_back(std::move(key), std::move(t));
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<LabeledTree> out;
  out.reserve(keyed.size());
  for (auto& [key, t] : keyed) out.push_back(std::move(t));
  return out;
}

}  // namespace

const std::vector<LabeledTree>& gen_trees(int n, TreeKind kind) {
  check_size("gen_trees", n, 0, kMaxTreeSize);
  static std::map<std::pair<int, TreeKind>, std::vector<LabeledTree>> cache;
  {
    std::lock_guard lock(cache_mutex);
    if (auto it = cache.find({n, kind}); it != cache.end()) return it->second;
  }
  std::vector<LabeledTree> trees = build_trees(n, kind);
  std::lock_guard lock(cache_mutex);
  return cache.emplace(std::make_pair(n, kind), std::move(trees)).first->second;
}

long long family_count(const std::string& family, int n) {
  auto size = [](const auto& v) { return static_cast<long long>(v.size()); };
  if (family == "s1") return size(gen_skeletons(n, TermFamily::Planar));
  if (family == "s2") return size(gen_skeletons(n, TermFamily::TwoConnected));
  if (family == "s3") return size(gen_skeletons(n, TermFamily::ThreeConnected));
  if (family == "rs") return size(gen_reduced_skeletons(n));
  if (family == "map") return size(gen_maps(n, MapFamily::All));
  if (family == "map-loopless") return size(gen_maps(n, MapFamily::Loopless));
  if (family == "map-bipartite") return size(gen_maps(n, MapFamily::Bipartite));
  if (family == "dtree") return size(gen_trees(n, TreeKind::Degree));
  if (family == "vtree") return size(gen_trees(n, TreeKind::VTree));
  if (family == "vtree-pos") return size(gen_trees(n, TreeKind::VTreePositive));
  throw InvalidInput("unknown family '" + family + "'");
}

std::vector<CountRow> count_table(int n_max) {
  std::vector<CountRow> rows;
  auto add = [&rows](const std::string& family, int n, long long count, std::optional<Rational> formula) {
    CountRow row{family, n, count, "", "-"};
    if (formula) {
      row.formula = to_string(*formula);
      row.match = *formula == Rational(count) ? "yes" : "no";
    }
    rows.push_back(std::move(row));
  };
  auto shifted = [](Rational (*f)(int), int n, int shift) -> std::optional<Rational> {
    if (n - shift < 0) return std::nullopt;
    return f(n - shift);
  };
  const int skel_max = std::min(n_max, kMaxSkeletonSize);
  const int map_max = std::min(n_max, kMaxMapSize);
  const int tree_max = std::min(n_max, kMaxTreeSize);
  for (int n = 1; n <= skel_max; ++n) add("s1", n, family_count("s1", n), shifted(planar_map_formula, n, 1));
  for (int n = 1; n <= skel_max; ++n) add("s2", n, family_count("s2", n), shifted(loopless_map_formula, n, 1));
  for (int n = 1; n <= skel_max; ++n) add("s3", n, family_count("s3", n), shifted(bipartite_map_formula, n, 2));
  for (int n = 1; n <= skel_max; ++n) add("rs", n, family_count("rs", n), shifted(bipartite_map_formula, n, 2));
  for (int n = 0; n <= map_max; ++n) add("map", n, family_count("map", n), planar_map_formula(n));
  for (int n = 0; n <= map_max; ++n) {
    add("map-loopless", n, family_count("map-loopless", n), loopless_map_formula(n));
  }
  for (int n = 0; n <= map_max; ++n) {
    add("map-bipartite", n, family_count("map-bipartite", n), bipartite_map_formula(n));
  }
  for (int n = 0; n <= tree_max; ++n) add("dtree", n, family_count("dtree", n), bipartite_map_formula(n));
  for (int n = 0; n <= tree_max; ++n) add("vtree", n, family_count("vtree", n), planar_map_formula(n));
  for (int n = 0; n <= tree_max; ++n) add("vtree-pos", n, family_count("vtree-pos", n), loopless_map_formula(n));
  for (int n = 0; n + 2 <= skel_max; ++n) {
    add("s3-printed", n, family_count("s3", n + 2), printed_three_connected_formula(n));
  }
  return rows;
}

std::string format_count_table(const std::vector<CountRow>& rows) {
  std::ostringstream out;
  out << "family\tn\tcount\tformula\tmatch\n";
  for (const CountRow& r : rows) {
    out << r.family << '\t' << r.n << '\t' << r.count << '\t' << (r.formula.empty() ? "-" : r.formula) << '\t'
        << r.match << '\n';
  }
  return out.str();
}

namespace {

using StatTuple = std::tuple<int, int, int, StatVector>;

std::string tuple_string(const StatTuple& t) {
  return "(" + std::to_string(std::get<0>(t)) + "," + std::to_string(std::get<1>(t)) + "," +
         std::to_string(std::get<2>(t)) + "," + to_string(std::get<3>(t)) + ")";
}

std::vector<StatTuple> bipartite_tuples(int n) {
  std::vector<StatTuple> out;
  for (const RootedMap& m : gen_maps(n, MapFamily::Bipartite)) {
    MapStats st = map_stats(m);
    out.emplace_back(st.outdeg, st.white, st.black, st.face);
  }
  return out;
}

Comparison compare(std::vector<StatTuple> lhs, std::vector<StatTuple> rhs, const std::string& lhs_name,
                   const std::string& rhs_name) {
  std::sort(lhs.begin(), lhs.end());
  std::sort(rhs.begin(), rhs.end());
  Comparison c;
  c.tuples = static_cast<int>(lhs.size());
  if (lhs == rhs) return c;
  c.ok = false;
  if (lhs.size() != rhs.size()) {
    c.detail = lhs_name + " has " + std::to_string(lhs.size()) + " tuples, " + rhs_name + " has " +
               std::to_string(rhs.size());
    return c;
  }
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    if (lhs[i] != rhs[i]) {
      c.detail = "first mismatch: " + lhs_name + " " + tuple_string(lhs[i]) + " vs " + rhs_name + " " +
                 tuple_string(rhs[i]);
      break;
    }
  }
  return c;
}

}  // namespace

Comparison compare_tree_map_stats(int n) {
  std::vector<StatTuple> trees;
  for (const LabeledTree& t : gen_trees(n, TreeKind::Degree)) {
    DegreeTreeStats st = degree_tree_stats(DegreeTree(t));
    trees.emplace_back(st.rlabel, st.lnode, st.znode, st.edge);
  }
  return compare(std::move(trees), bipartite_tuples(n), "degree trees", "bipartite maps");
}

Comparison compare_skeleton_map_stats(int n) {
  std::vector<StatTuple> skeletons;
  for (const ReducedSkeleton& r : gen_reduced_skeletons(n + 2)) {
    SkeletonStats st = skeleton_stats(r);
    skeletons.emplace_back(st.ex - 1, st.applv, st.appla, st.uc);
  }
  return compare(std::move(skeletons), bipartite_tuples(n), "reduced skeletons", "bipartite maps");
}

Comparison compare_stat_multisets(int n) {
  Comparison trees = compare_tree_map_stats(n);
  if (!trees.ok) return trees;
  Comparison skeletons = compare_skeleton_map_stats(n);
  if (!skeletons.ok) return skeletons;
  return trees;
}

std::optional<int> abstraction_shift(int n) {
  std::vector<int> lead;
  for (const Skeleton& s : gen_skeletons(n, TermFamily::ThreeConnected)) {
    lead.push_back(s.chain_above(s.first_non_unary()));
  }
  std::vector<int> outdeg;
  for (const RootedMap& m : gen_maps(n - 2, MapFamily::Bipartite)) outdeg.push_back(map_stats(m).outdeg);
  if (lead.empty() || lead.size() != outdeg.size()) return std::nullopt;
  std::sort(lead.begin(), lead.end());
  std::sort(outdeg.begin(), outdeg.end());
  const int s = lead.front() - outdeg.front();
  for (std::size_t i = 0; i < lead.size(); ++i) {
    if (lead[i] - outdeg[i] != s) return std::nullopt;
  }
  return s;
}

}  // namespace lambdamaps
