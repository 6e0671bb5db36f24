#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "lambdamaps/bijections.hpp"
#include "lambdamaps/connectivity.hpp"
#include "lambdamaps/lambda_core.hpp"
#include "lambdamaps/planar_maps.hpp"

using namespace lambdamaps;

namespace {

struct Node {
  std::vector<Node> children;
  int label = 0;
};

// Random plane tree with n edges from a shuffled balanced word, retried
// until every prefix is balanced.
Node random_tree(std::mt19937& rng, int n) {
  std::vector<int> word(2 * n);
  std::fill(word.begin(), word.begin() + n, 1);
  std::fill(word.begin() + n, word.end(), -1);
  for (;;) {
    std::shuffle(word.begin(), word.end(), rng);
    int h = 0;
    bool ok = true;
    for (int w : word) {
      h += w;
      if (h < 0) ok = false;
    }
    if (ok) break;
  }
  Node root;
  std::vector<Node*> stack{&root};
  for (int w : word) {
    if (w > 0) {
      stack.back()->children.emplace_back();
      stack.push_back(&stack.back()->children.back());
    } else {
      stack.pop_back();
    }
  }
  return root;
}

int pick(std::mt19937& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

// Labels are drawn bottom-up within the v-tree rules.
void label_vtree(std::mt19937& rng, Node& u, bool root) {
  int sum = 0;
  for (Node& c : u.children) {
    label_vtree(rng, c, false);
    sum += c.label;
  }
  u.label = root ? 1 + sum : pick(rng, 0, u.children.empty() ? 1 : 1 + sum);
}

// Leaves 0; s - l(first child) <= l(u) <= s with s = k + sum of child labels.
void label_degree_tree(std::mt19937& rng, Node& u) {
  if (u.children.empty()) {
    u.label = 0;
    return;
  }
  int s = static_cast<int>(u.children.size());
  for (Node& c : u.children) {
    label_degree_tree(rng, c);
    s += c.label;
  }
  u.label = pick(rng, s - u.children.front().label, s);
}

std::string text(const Node& u) {
  std::string out = std::to_string(u.label);
  if (u.children.empty()) return out;
  out += '[';
  for (std::size_t i = 0; i < u.children.size(); ++i) out += (i ? "," : "") + text(u.children[i]);
  return out + ']';
}

}  // namespace

TEST(Properties, RandomVTrees) {
  std::mt19937 rng(20240601);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = pick(rng, 6, 11);
    Node root = random_tree(rng, n);
    label_vtree(rng, root, true);
    VTree v(LabeledTree::parse(text(root)));
    ASSERT_TRUE(validate_vtree(v).valid) << text(root);

    RootedMap m = rho_inv(v);
    ASSERT_EQ(m.edge_count(), n);
    EXPECT_TRUE(validate_map(m.rotation_system()));
    EXPECT_EQ(rho(m), v) << m.to_string();
    EXPECT_EQ(rho_direct(m), v) << m.to_string();
    EXPECT_EQ(outv(m), v.root_label());
    EXPECT_EQ(map_stats(m).loopless, validate_vtree(v).positive);
    EXPECT_EQ(RootedMap::parse(m.to_string()), m);

    Skeleton s = psi_inv(v);
    EXPECT_EQ(s.size(), n + 1);
    EXPECT_TRUE(check_family(s, TermFamily::Planar));
    EXPECT_EQ(check_family(s, TermFamily::TwoConnected), validate_vtree(v).positive);
    EXPECT_EQ(psi(s), v);
    TermPtr t = term_of_skeleton(s);
    EXPECT_EQ(skeleton_of(*t), s);
    EXPECT_TRUE(alpha_equivalent(*parse_term(render_term(*t)).term, *t));
  }
}

TEST(Properties, RandomDegreeTrees) {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = pick(rng, 5, 12);
    Node root = random_tree(rng, n);
    label_degree_tree(rng, root);
    DegreeTree d(LabeledTree::parse(text(root)));
    ASSERT_TRUE(validate_degree_tree(d)) << text(root);

    ReducedSkeleton r = phi_inv(d);
    EXPECT_TRUE(check_reduced(r.skeleton()));
    EXPECT_EQ(r.skeleton().size(), n + 1);
    EXPECT_EQ(phi(r), d);
    Skeleton s = unreduce(r);
    EXPECT_EQ(s.size(), n + 2);
    EXPECT_TRUE(check_family(s, TermFamily::ThreeConnected));
    EXPECT_EQ(reduce_skeleton(s), r);

    SkeletonStats ss = skeleton_stats(r);
    DegreeTreeStats ds = degree_tree_stats(d);
    EXPECT_EQ(ss.ex, ds.rlabel + 1);
    EXPECT_EQ(ss.applv, ds.lnode);
    EXPECT_EQ(ss.appla, ds.znode);
    EXPECT_EQ(ss.uc, ds.edge);
  }
}

TEST(Properties, OneCornerLift) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = pick(rng, 3, 9);
    Node root = random_tree(rng, n);
    label_vtree(rng, root, true);
    RootedMap m = rho_inv(VTree(LabeledTree::parse(text(root))));
    const int i = pick(rng, 0, outv(m));
    RootedMap u = attach_root_edge(m, i);
    EXPECT_TRUE(is_one_corner(u));
    EXPECT_EQ(outv_u(u), i);
    EXPECT_EQ(pi(u), m);
    std::vector<RootedMap> parts = decompose(m);
    int edges = 0;
    for (const RootedMap& p : parts) {
      EXPECT_TRUE(is_one_corner(p));
      edges += p.edge_count();
    }
    EXPECT_EQ(edges, m.edge_count());
  }
}
