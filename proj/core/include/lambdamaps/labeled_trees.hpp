#pragma once

// Plane trees with integer node labels: degree trees and v-trees.

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lambdamaps {

// Rooted plane tree, nodes in pre-order (root = 0), children ordered left to
// right. size() is the number of edges.
class PlaneTree {
 public:
  // A single node.
  PlaneTree();
  // New root whose children are the roots of `subtrees`, left to right.
  static PlaneTree graft(std::span<const PlaneTree> subtrees);

  int node_count() const { return static_cast<int>(parent_.size()); }
  int size() const { return node_count() - 1; }
  int parent(int v) const { return parent_[v]; }
  const std::vector<int>& children(int v) const { return children_[v]; }
  bool is_leaf(int v) const { return children_[v].empty(); }
  // Number of edges of the sub-tree rooted at v.
  int subtree_size(int v) const { return span_[v] - 1; }
  PlaneTree subtree(int v) const;

  friend bool operator==(const PlaneTree& a, const PlaneTree& b) { return a.parent_ == b.parent_; }

 private:
  void rebuild();

  std::vector<int> parent_;
  std::vector<std::vector<int>> children_;
  std::vector<int> span_;
};

struct LabeledTree {
  PlaneTree tree;
  std::vector<int> labels;

  LabeledTree() : labels{0} {}
  LabeledTree(PlaneTree t, std::vector<int> l) : tree(std::move(t)), labels(std::move(l)) {}

  static LabeledTree graft(int root_label, std::span<const LabeledTree> subtrees);
  // Format `label[child,child,...]`, a leaf is just `label`. Throws ParseError.
  static LabeledTree parse(std::string_view text);

  int size() const { return tree.size(); }
  int root_label() const { return labels[0]; }
  LabeledTree subtree(int v) const;
  std::string to_string() const;

  friend bool operator==(const LabeledTree&, const LabeledTree&) = default;
};

class DegreeTree : public LabeledTree {
 public:
  DegreeTree() = default;
  explicit DegreeTree(LabeledTree t) : LabeledTree(std::move(t)) {}
};

class VTree : public LabeledTree {
 public:
  VTree() : LabeledTree(PlaneTree(), {1}) {}
  explicit VTree(LabeledTree t) : LabeledTree(std::move(t)) {}
};

// Label of the edge from each node to its parent, indexed by the child node;
// entry 0 (the root) is unused and kept at 0.
using EdgeLabeling = std::vector<int>;

// l(v) = |T_v| - (sum of edge labels inside T_v).
std::vector<int> node_labels_from_edge_labels(const PlaneTree& t, const EdgeLabeling& edge_labels);

// s(u) - l(u) on the leftmost descending edge of every internal node, 0
// elsewhere.
EdgeLabeling edge_labels_from_node_labels(const LabeledTree& d);

// Leaves labeled 0 and s(u) - l(v1) <= l(u) <= s(u) with s(u) = k + sum l(vi).
bool validate_degree_tree(const LabeledTree& d);

struct VTreeCheck {
  bool valid = false;
  // Valid and no label equal to 0.
  bool positive = false;
};

// Leaves labeled 0 or 1; 0 <= l(u) <= 1 + sum l(vi) at non-root nodes;
// l(root) = 1 + sum l(vi).
VTreeCheck validate_vtree(const LabeledTree& v);

}  // namespace lambdamaps
