#pragma once

// Membership of skeletons in the planar, 2-connected and 3-connected term
// families, both by structural characterization and by brute-force edge
// connectivity of the syntactic diagram.

#include "lambdamaps/lambda_core.hpp"

namespace lambdamaps {

enum class ConnectivityClass : int { Disconnected = 0, One = 1, Two = 2, ThreePlus = 3 };

const char* to_string(ConnectivityClass c);

// Planar linear normal terms, the 2-connected ones, the 3-connected ones.
enum class TermFamily : int { Planar = 1, TwoConnected = 2, ThreeConnected = 3 };

// A skeleton produced by reduction (or by inverting the degree-tree
// bijection). The wrapped tree is not re-validated on construction.
class ReducedSkeleton {
 public:
  explicit ReducedSkeleton(Skeleton s) : skeleton_(std::move(s)) {}
  const Skeleton& skeleton() const { return skeleton_; }
  friend bool operator==(const ReducedSkeleton&, const ReducedSkeleton&) = default;

 private:
  Skeleton skeleton_;
};

// Planar: linearity, normality, and deficit(u) >= chain(u) at every binary
// node and leaf. TwoConnected additionally asks deficit(u) > chain(u) except
// at the node whose unary chain reaches the root. ThreeConnected: size >= 2,
// planar, the first binary node has a leaf left child, and the right sub-tree
// of that node passes check_reduced.
bool check_family(const Skeleton& s, TermFamily family);

// Normality, deficit(right child) > chain(u) for every binary node u, and a
// positive overall deficit (rules out a unary chain over a single leaf).
bool check_reduced(const Skeleton& r);

// Brute force over single edges and pairs of edges. Pairs whose edges are
// both incident to the root vertex are exempt; self-loops never disconnect.
ConnectivityClass edge_connectivity_class(const Diagram& d);

// Removes the leading unary chain, the first binary node and its leaf left
// child. Throws InvalidInput if s is not a planar linear normal skeleton and
// NotReducible if the first binary node is missing or has a non-leaf left
// child.
ReducedSkeleton reduce_skeleton(const Skeleton& s);

// (deficit(r) + 1) unary nodes over B(L, r). Throws InvalidReduced if
// deficit(r) <= 0.
Skeleton unreduce(const ReducedSkeleton& r);

}  // namespace lambdamaps
