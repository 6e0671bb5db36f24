#include "lambdamaps/connectivity.hpp"

#include <numeric>

#include "lambdamaps/error.hpp"

namespace lambdamaps {

const char* to_string(ConnectivityClass c) {
  switch (c) {
    case ConnectivityClass::Disconnected:
      return "disconnected";
    case ConnectivityClass::One:
      return "1";
    case ConnectivityClass::Two:
      return "2";
    case ConnectivityClass::ThreePlus:
      return "3+";
  }
  return "?";
}

namespace {

bool planar_conditions(const Skeleton& s, bool strict) {
  if (s.leaf_count() != s.unary_count()) return false;
  if (!is_normal(s)) return false;
  const int top = s.first_non_unary();
  for (int id = 0; id < s.node_count(); ++id) {
    if (s.kind(id) == NodeKind::Unary) continue;
    const int d = s.deficit(id);
    const int c = s.chain_above(id);
    if (d < c) return false;
    if (strict && id != top && d <= c) return false;
  }
  return true;
}

int first_binary(const Skeleton& s) {
  int id = s.first_non_unary();
  return s.kind(id) == NodeKind::Binary ? id : -1;
}

}  // namespace

bool check_reduced(const Skeleton& r) {
  if (!is_normal(r)) return false;
  if (r.deficit(0) < 1) return false;
  for (int id = 0; id < r.node_count(); ++id) {
    const auto& n = r.node(id);
    if (n.kind != NodeKind::Binary) continue;
    if (r.deficit(n.right) <= r.chain_above(id)) return false;
  }
  return true;
}

bool check_family(const Skeleton& s, TermFamily family) {
  switch (family) {
    case TermFamily::Planar:
      return planar_conditions(s, false);
    case TermFamily::TwoConnected:
      return planar_conditions(s, true);
    case TermFamily::ThreeConnected: {
      if (s.size() < 2 || !planar_conditions(s, false)) return false;
      int b = first_binary(s);
      if (b < 0 || s.kind(s.node(b).left) != NodeKind::Leaf) return false;
      return check_reduced(s.subtree(s.node(b).right));
    }
  }
  return false;
}

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<int> parent_;
};

bool connected_without(const Diagram& d, int skip1, int skip2) {
  DisjointSets sets(d.vertex_count);
  int components = d.vertex_count;
  for (int e = 0; e < static_cast<int>(d.edges.size()); ++e) {
    if (e == skip1 || e == skip2) continue;
    if (sets.unite(d.edges[e].first, d.edges[e].second)) --components;
  }
  return components <= 1;
}

}  // namespace

ConnectivityClass edge_connectivity_class(const Diagram& d) {
  if (d.vertex_count <= 1) return ConnectivityClass::ThreePlus;
  if (!connected_without(d, -1, -1)) return ConnectivityClass::Disconnected;
  const int m = static_cast<int>(d.edges.size());
  auto is_loop = [&](int e) { return d.edges[e].first == d.edges[e].second; };
  auto at_root = [&](int e) { return d.edges[e].first == d.root || d.edges[e].second == d.root; };
  for (int e = 0; e < m; ++e) {
    if (!is_loop(e) && !connected_without(d, e, -1)) return ConnectivityClass::One;
  }
  for (int e = 0; e < m; ++e) {
    if (is_loop(e)) continue;
    for (int f = e + 1; f < m; ++f) {
      if (is_loop(f) || (at_root(e) && at_root(f))) continue;
      if (!connected_without(d, e, f)) return ConnectivityClass::Two;
    }
  }
  return ConnectivityClass::ThreePlus;
}

ReducedSkeleton reduce_skeleton(const Skeleton& s) {
  if (!check_family(s, TermFamily::Planar)) {
    throw InvalidInput("reduce_skeleton: " + s.to_string() + " is not a planar linear normal skeleton");
  }
  int b = first_binary(s);
  if (b < 0) throw NotReducible("reduce_skeleton: no binary node in " + s.to_string());
  if (s.kind(s.node(b).left) != NodeKind::Leaf) {
    throw NotReducible("reduce_skeleton: first binary node has a non-leaf left child in " +
                       s.to_string());
  }
  return ReducedSkeleton(s.subtree(s.node(b).right));
}

Skeleton unreduce(const ReducedSkeleton& r) {
  const Skeleton& s = r.skeleton();
  int d = s.deficit(0);
  if (d <= 0) {
    throw InvalidReduced("unreduce: deficit " + std::to_string(d) + " of " + s.to_string() +
                         " is not positive");
  }
  return unary_chain(d + 1, Skeleton::binary(Skeleton::leaf(), s));
}

}  // namespace lambdamaps
