#pragma once

// Tree-level bijections: reduced skeletons <-> degree trees (phi) and planar
// linear normal skeletons <-> v-trees (psi), with the statistics carried
// across phi.

#include <map>
#include <string>

#include "lambdamaps/connectivity.hpp"
#include "lambdamaps/labeled_trees.hpp"
#include "lambdamaps/lambda_core.hpp"

namespace lambdamaps {

// Sparse k -> count table; only nonzero counts are stored.
using StatVector = std::map<int, int>;

std::string to_string(const StatVector& v);

struct SkeletonStats {
  int ex = 0;     // leaf(R) - unary(R)
  int applv = 0;  // binary nodes of unreduce(R) whose right child is a leaf
  int appla = 0;  // binary nodes of unreduce(R) whose right child is binary
  StatVector uc;  // maximal unary chains of R, by length

  friend bool operator==(const SkeletonStats&, const SkeletonStats&) = default;
};

struct DegreeTreeStats {
  int rlabel = 0;
  int lnode = 0;
  int znode = 0;    // internal nodes whose leftmost descending edge has label 0
  StatVector edge;  // edges by label k >= 1

  friend bool operator==(const DegreeTreeStats&, const DegreeTreeStats&) = default;
};

// Drops leaves, smooths unary chains into edge labels and applies the
// rotation correspondence (right child -> leftmost child, left child -> next
// sibling) under an added root; node labels follow from the edge labels.
// Throws InvalidInput unless check_reduced holds.
DegreeTree phi(const ReducedSkeleton& r);
// Throws InvalidInput unless validate_degree_tree holds.
ReducedSkeleton phi_inv(const DegreeTree& d);

// Binary node u gets deficit(right child of u); the added root gets the
// length of the leading unary chain. Throws InvalidInput unless the skeleton
// is planar linear normal.
VTree psi(const Skeleton& s);
// Rebuilds the binary scaffold and inserts unary nodes bottom-up on right
// branches. Throws InvalidInput unless the v-tree is valid.
Skeleton psi_inv(const VTree& v);

SkeletonStats skeleton_stats(const ReducedSkeleton& r);
DegreeTreeStats degree_tree_stats(const DegreeTree& d);

}  // namespace lambdamaps
