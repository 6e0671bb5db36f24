#pragma once

// Exhaustive generators for skeletons, maps and labeled trees, count tables
// and statistic multiset comparisons. Generators cache their results and
// return them in a deterministic order: skeletons and trees by text, maps by
// canonical form.

#include <optional>
#include <string>
#include <vector>

#include "lambdamaps/bijections.hpp"
#include "lambdamaps/connectivity.hpp"
#include "lambdamaps/labeled_trees.hpp"
#include "lambdamaps/lambda_core.hpp"
#include "lambdamaps/planar_maps.hpp"

namespace lambdamaps {

inline constexpr int kMaxSkeletonSize = 8;
inline constexpr int kMaxBruteForceMapSize = 5;
inline constexpr int kMaxMapSize = 6;
inline constexpr int kMaxTreeSize = 7;

// Skeletons of planar linear normal terms of size n in the given family.
// Throws SizeTooLarge unless 1 <= n <= kMaxSkeletonSize.
const std::vector<Skeleton>& gen_skeletons(int n, TermFamily level);

// Every unary-binary tree with the given numbers of leaves and unary nodes,
// without any filtering. Meant for small ambient scans.
std::vector<Skeleton> gen_unary_binary_trees(int leaves, int unaries);

// Reduced skeletons of the 3-connected skeletons of size n.
const std::vector<ReducedSkeleton>& gen_reduced_skeletons(int n);

enum class MapFamily { All, Loopless, Bipartite };

// Brute force over rotation systems for n <= kMaxBruteForceMapSize; n = 6 is
// the image of the v-trees under rho_inv. Throws SizeTooLarge.
const std::vector<RootedMap>& gen_maps(int n, MapFamily family = MapFamily::All);

enum class TreeKind { Degree, VTree, VTreePositive };

// Throws SizeTooLarge unless 0 <= n <= kMaxTreeSize.
const std::vector<LabeledTree>& gen_trees(int n, TreeKind kind);

struct CountRow {
  std::string family;
  int n = 0;
  long long count = 0;
  // Closed-form value, empty when there is none.
  std::string formula;
  // "yes", "no" or "-" without a formula.
  std::string match;
};

// Families: s1 s2 s3 rs map map-loopless map-bipartite dtree vtree vtree-pos,
// plus s3-printed comparing |s3| at size n+2 with the printed closed form.
std::vector<CountRow> count_table(int n_max);
std::string format_count_table(const std::vector<CountRow>& rows);

// The count of one CLI family name at size n; throws InvalidInput for an
// unknown family.
long long family_count(const std::string& family, int n);

struct Comparison {
  bool ok = true;
  int tuples = 0;
  std::string detail;
};

// (rlabel, lnode, znode, edge) over degree trees of size n against
// (outdeg, white, black, face) over bipartite maps with n edges.
Comparison compare_tree_map_stats(int n);
// (ex - 1, applv, appla, uc) over reduced skeletons of size n + 2 against
// (outdeg, white, black, face) over bipartite maps with n edges.
Comparison compare_skeleton_map_stats(int n);
// Both of the above.
Comparison compare_stat_multisets(int n);

// The constant s with {leading abstractions over 3-connected terms of size
// n} = {outdeg over bipartite maps with n - 2 edges} + s, if one exists.
std::optional<int> abstraction_shift(int n);

}  // namespace lambdamaps
