#pragma once

// Lambda terms, their skeletons, planar binder matchings and syntactic
// diagrams.

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace lambdamaps {

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Var {
  std::string name;
};
struct App {
  TermPtr fun;
  TermPtr arg;
};
struct Abs {
  std::string var;
  TermPtr body;
};

struct Term {
  std::variant<Var, App, Abs> node;
};

TermPtr make_var(std::string name);
TermPtr make_app(TermPtr fun, TermPtr arg);
TermPtr make_abs(std::string var, TermPtr body);

struct ParsedTerm {
  TermPtr term;
  // Distinct free variable names in order of first occurrence.
  std::vector<std::string> free_variables;

  bool closed() const { return free_variables.empty(); }
};

// Grammar: `\x.t` (or `λx.t`) abstraction extending as far right as
// possible, juxtaposition for left-associative application, parentheses for
// grouping. Throws ParseError.
ParsedTerm parse_term(std::string_view text);

// Minimal-parenthesis rendering; parse_term(render_term(t)) is
// alpha-equivalent to t.
std::string render_term(const Term& t);

// Nameless rendering: bound variables become de Bruijn indices, free
// variables keep their names. Equal strings <=> alpha-equivalent terms.
std::string de_bruijn(const Term& t);
bool alpha_equivalent(const Term& a, const Term& b);

// Number of atoms.
int term_size(const Term& t);

// True iff some sub-term has the shape (\x.u) v.
bool has_redex(const Term& t);

enum class NodeKind : std::uint8_t { Leaf, Unary, Binary };

// Plane unary-binary tree. Nodes are stored in pre-order (root, left
// subtree, right subtree); a node's id is its pre-order index. Unary nodes
// keep their only child in `left`.
class Skeleton {
 public:
  struct Node {
    NodeKind kind;
    int parent;
    int left;
    int right;
  };

  static Skeleton leaf();
  static Skeleton unary(const Skeleton& child);
  static Skeleton binary(const Skeleton& left, const Skeleton& right);
  // Throws ParseError. Format: `L`, `U(x)`, `B(x,y)`; whitespace ignored.
  static Skeleton parse(std::string_view text);

  int node_count() const { return static_cast<int>(nodes_.size()); }
  const Node& node(int id) const { return nodes_[id]; }
  NodeKind kind(int id) const { return nodes_[id].kind; }

  // Number of leaves; the size of the underlying term.
  int size() const { return leaf_count(0); }
  int leaf_count() const { return leaf_count(0); }
  int unary_count() const { return unary_count(0); }
  int binary_count() const;

  int leaf_count(int id) const { return leaves_[id]; }
  int unary_count(int id) const { return unaries_[id]; }
  // leaf(S_u) - unary(S_u).
  int deficit(int id) const { return leaves_[id] - unaries_[id]; }
  // Number of consecutive unary nodes directly above `id`.
  int chain_above(int id) const { return chain_[id]; }
  // The sub-tree rooted at `id` as a standalone skeleton.
  Skeleton subtree(int id) const;
  // Id of the first non-unary node on the path from the root.
  int first_non_unary() const;

  std::string to_string() const;

  // The pre-order kind sequence determines the tree.
  friend bool operator==(const Skeleton& a, const Skeleton& b);
  // Orders by text encoding.
  friend std::strong_ordering operator<=>(const Skeleton& a, const Skeleton& b);

 private:
  Skeleton() = default;
  void finalize();
  void append_shifted(const Skeleton& other, int parent);

  std::vector<Node> nodes_;
  std::vector<int> leaves_;
  std::vector<int> unaries_;
  std::vector<int> chain_;
};

// Repeats `unary` k times above `s`.
Skeleton unary_chain(int k, const Skeleton& s);

Skeleton skeleton_of(const Term& t);

// Unary-node <-> leaf pairing; indexed by skeleton node id, -1 elsewhere.
struct Matching {
  std::vector<int> binder_of_leaf;
  std::vector<int> leaf_of_binder;
};

// Word read along a clockwise contour from the root (each node, then its
// right sub-tree, then its left sub-tree): `(` per unary node, `)` per leaf,
// stack discipline.
// Throws MatchFailure when a leaf meets an empty stack, when a unary node's
// sub-tree is left with the node still unmatched, or when unary nodes remain
// at the end.
Matching planar_match(const Skeleton& s);

bool is_normal(const Skeleton& s);

// Closed term for a skeleton with a planar matching; binders are named
// x, y, z, w, ... in pre-order. Propagates MatchFailure.
TermPtr term_of_skeleton(const Skeleton& s);

// Graph on the internal nodes of a skeleton: skeleton edges between internal
// nodes plus one binder edge per leaf. Vertex i corresponds to node_of[i];
// vertex 0 is the skeleton root.
struct Diagram {
  int vertex_count = 0;
  std::vector<int> node_of;
  std::vector<std::pair<int, int>> edges;
  int root = 0;
};

// Propagates MatchFailure.
Diagram diagram_of(const Skeleton& s);

}  // namespace lambdamaps
