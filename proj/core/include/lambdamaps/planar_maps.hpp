#pragma once

// Rooted planar maps as rotation systems, the one-corner decomposition and
// the bijections between maps and v-trees.

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "lambdamaps/bijections.hpp"
#include "lambdamaps/labeled_trees.hpp"

namespace lambdamaps {

// Raw, unchecked input: half-edges 0..2n-1, alpha(h) = h ^ 1, sigma(h) the
// next half-edge counter-clockwise around the vertex of h.
struct RotationSystem {
  int n = 0;
  std::vector<int> sigma;
  int root = 0;
};

struct MapCheck {
  bool valid = false;
  std::string reason;

  explicit operator bool() const { return valid; }
};

// Permutation, connectivity, genus 0, root in range.
MapCheck validate_map(const RotationSystem& m);

// A valid rooted planar map, always stored under the canonical relabeling
// (root half-edge 0), so == is root-preserving isomorphism. The corner of a
// half-edge h is the sector between sigma^-1(h) and h; the root corner is the
// corner of 0 and the outer face is the face orbit of 0.
class RootedMap {
 public:
  // The empty map: a single vertex, no edges.
  RootedMap() = default;
  // Throws InvalidMap.
  explicit RootedMap(const RotationSystem& m);
  // `map n=<N> sigma=<cycles> root=<h>`, or `map n=0`. Half-edges missing
  // from the cycles are fixed points. Throws ParseError or InvalidMap.
  static RootedMap parse(std::string_view text);

  int edge_count() const { return n_; }
  int half_edge_count() const { return 2 * n_; }
  bool empty() const { return n_ == 0; }

  int sigma(int h) const { return sigma_[h]; }
  int sigma_inv(int h) const { return inv_[h]; }
  static int alpha(int h) { return h ^ 1; }
  // Face permutation: the face of the corner of h is the orbit of h.
  int face_next(int h) const { return sigma_[h ^ 1]; }
  const std::vector<int>& rotation() const { return sigma_; }
  RotationSystem rotation_system() const { return {n_, sigma_, 0}; }

  // Vertex index per half-edge, vertices numbered by their smallest
  // half-edge.
  std::vector<int> vertex_of() const;
  int vertex_count() const;
  int face_count() const;

  std::string to_string() const;
  // Lowercase hex of (n, sigma(0), ..., sigma(2n-1)), 16 bits each.
  std::string canonical_form() const;

  friend bool operator==(const RootedMap&, const RootedMap&) = default;
  // Same order as the canonical form.
  friend std::strong_ordering operator<=>(const RootedMap&, const RootedMap&) = default;

 private:
  int n_ = 0;
  std::vector<int> sigma_;
  std::vector<int> inv_;
};

// Throws InvalidMap.
std::string canonical_form(const RotationSystem& m);

struct MapStats {
  int outv = 1;
  bool bipartite = true;
  bool loopless = true;
  // Colour classes; the root vertex is black. Zero when not bipartite.
  int white = 0;
  int black = 1;
  // Half-degree of the outer face; bipartite only.
  int outdeg = 0;
  // Inner faces of degree 2k, by k; bipartite only.
  StatVector face;
};

MapStats map_stats(const RootedMap& m);

// Number of distinct vertices on the outer face; 1 for the empty map.
int outv(const RootedMap& m);
// outv without the root vertex.
int outv_u(const RootedMap& u);
// The root corner is the only corner of the root vertex on the outer face.
bool is_one_corner(const RootedMap& m);

// Deletes the root edge, drops the old root vertex if it becomes isolated
// and re-roots at the corner of the other end from which the edge stemmed.
// Throws EmptyMap, or WouldDisconnect when the result is not a connected map.
RootedMap pi(const RootedMap& u);

// The one-corner component U with pi(U) == m and outv_u(U) == i. For i =
// outv(m) the new edge is a bridge to a new pendant root vertex; otherwise it
// runs through the outer face from the root corner of m to the first outer
// corner of the (i+1)-th distinct vertex met along the outer face. Throws
// IndexOutOfRange.
RootedMap attach_root_edge(const RootedMap& m, int i);

// Splits at every outer corner of the root vertex; components in
// counter-clockwise order, the first containing the root half-edge. Throws
// EmptyMap.
std::vector<RootedMap> decompose(const RootedMap& m);

// Recursive one-corner decomposition tree.
VTree rho(const RootedMap& m);
// Throws InvalidInput unless the v-tree is valid.
RootedMap rho_inv(const VTree& v);
// Contour walk from the root corner opening up every inner face.
VTree rho_direct(const RootedMap& m);

}  // namespace lambdamaps
