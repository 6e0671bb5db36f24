#include "lambdamaps/bijections.hpp"

#include <vector>

#include "lambdamaps/error.hpp"

namespace lambdamaps {

std::string to_string(const StatVector& v) {
  std::string out = "{";
  bool first = true;
  for (const auto& [k, count] : v) {
    if (!first) out += ',';
    first = false;
    out += std::to_string(k) + ':' + std::to_string(count);
  }
  return out + '}';
}

namespace {

// Shared shape of phi and psi: each binary node becomes a tree node whose
// children are the left spine of its right sub-tree (unary chains skipped).
// `label_of` decides the label stored on the tree node.
template <typename LabelOf>
std::vector<LabeledTree> spine_subtrees(const Skeleton& s, int x, const LabelOf& label_of);

template <typename LabelOf>
LabeledTree node_for(const Skeleton& s, int w, const LabelOf& label_of) {
  int x = s.node(w).right;
  while (s.kind(x) == NodeKind::Unary) x = s.node(x).left;
  std::vector<LabeledTree> kids = spine_subtrees(s, x, label_of);
  return LabeledTree::graft(label_of(w), kids);
}

template <typename LabelOf>
std::vector<LabeledTree> spine_subtrees(const Skeleton& s, int x, const LabelOf& label_of) {
  std::vector<LabeledTree> out;
  for (int y = x; s.kind(y) == NodeKind::Binary; y = s.node(y).left) {
    out.push_back(node_for(s, y, label_of));
  }
  return out;
}

// Inverse shape: the children of a tree node, left to right, form a left
// spine of binary nodes ending in a leaf.
template <typename RightOf>
Skeleton spine_skeleton(const std::vector<int>& kids, std::size_t i, const RightOf& right_of) {
  if (i == kids.size()) return Skeleton::leaf();
  return Skeleton::binary(spine_skeleton(kids, i + 1, right_of), right_of(kids[i]));
}

}  // namespace

DegreeTree phi(const ReducedSkeleton& r) {
  const Skeleton& s = r.skeleton();
  if (!check_reduced(s)) throw InvalidInput("phi: " + s.to_string() + " is not a reduced skeleton");
  auto chain = [&s](int w) { return s.chain_above(w); };
  // Labels hold edge labels (edge to parent) until converted.
  std::vector<LabeledTree> kids = spine_subtrees(s, s.first_non_unary(), chain);
  LabeledTree edge_labeled = LabeledTree::graft(0, kids);
  std::vector<int> labels = node_labels_from_edge_labels(edge_labeled.tree, edge_labeled.labels);
  return DegreeTree(LabeledTree(edge_labeled.tree, std::move(labels)));
}

ReducedSkeleton phi_inv(const DegreeTree& d) {
  if (!validate_degree_tree(d)) throw InvalidInput("phi_inv: " + d.to_string() + " is not a degree tree");
  const EdgeLabeling e = edge_labels_from_node_labels(d);
  auto right_of = [&](auto&& self, int w) -> Skeleton {
    const auto& kids = d.tree.children(w);
    if (kids.empty()) return Skeleton::leaf();
    auto recurse = [&](int v) { return self(self, v); };
    return unary_chain(e[kids.front()], spine_skeleton(kids, 0, recurse));
  };
  return ReducedSkeleton(right_of(right_of, 0));
}

VTree psi(const Skeleton& s) {
  if (!check_family(s, TermFamily::Planar)) {
    throw InvalidInput("psi: " + s.to_string() + " is not a planar linear normal skeleton");
  }
  auto right_deficit = [&s](int w) { return s.deficit(s.node(w).right); };
  const int top = s.first_non_unary();
  std::vector<LabeledTree> kids = spine_subtrees(s, top, right_deficit);
  return VTree(LabeledTree::graft(s.chain_above(top), kids));
}

Skeleton psi_inv(const VTree& v) {
  if (!validate_vtree(v).valid) throw InvalidInput("psi_inv: " + v.to_string() + " is not a v-tree");
  auto right_of = [&](auto&& self, int w) -> Skeleton {
    auto recurse = [&](int c) { return self(self, c); };
    Skeleton scaffold = spine_skeleton(v.tree.children(w), 0, recurse);
    const int extra = scaffold.deficit(0) - v.labels[w];
    if (extra < 0) throw InvalidInput("psi_inv: label exceeds available deficit");
    return unary_chain(extra, scaffold);
  };
  auto recurse = [&](int c) { return right_of(right_of, c); };
  Skeleton body = spine_skeleton(v.tree.children(0), 0, recurse);
  return unary_chain(v.root_label(), body);
}

SkeletonStats skeleton_stats(const ReducedSkeleton& r) {
  const Skeleton& s = r.skeleton();
  if (!check_reduced(s)) {
    throw InvalidInput("skeleton_stats: " + s.to_string() + " is not a reduced skeleton");
  }
  SkeletonStats st;
  st.ex = s.deficit(0);
  const Skeleton full = unreduce(r);
  for (int id = 0; id < full.node_count(); ++id) {
    if (full.kind(id) != NodeKind::Binary) continue;
    NodeKind rk = full.kind(full.node(id).right);
    if (rk == NodeKind::Leaf) ++st.applv;
    if (rk == NodeKind::Binary) ++st.appla;
  }
  for (int id = 0; id < s.node_count(); ++id) {
    if (s.kind(id) != NodeKind::Unary || s.chain_above(id) != 0) continue;
    int len = 0;
    for (int x = id; s.kind(x) == NodeKind::Unary; x = s.node(x).left) ++len;
    ++st.uc[len];
  }
  return st;
}

DegreeTreeStats degree_tree_stats(const DegreeTree& d) {
  if (!validate_degree_tree(d)) {
    throw InvalidInput("degree_tree_stats: " + d.to_string() + " is not a degree tree");
  }
  DegreeTreeStats st;
  st.rlabel = d.root_label();
  const EdgeLabeling e = edge_labels_from_node_labels(d);
  for (int u = 0; u < d.tree.node_count(); ++u) {
    const auto& kids = d.tree.children(u);
    if (kids.empty()) {
      ++st.lnode;
    } else if (e[kids.front()] == 0) {
      ++st.znode;
    }
    if (u > 0 && e[u] >= 1) ++st.edge[e[u]];
  }
  return st;
}

}  // namespace lambdamaps
