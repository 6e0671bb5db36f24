#include <gtest/gtest.h>

#include <set>

#include "lambdamaps/enumeration.hpp"
#include "lambdamaps/error.hpp"
#include "lambdamaps/planar_maps.hpp"

using namespace lambdamaps;

namespace {

RootedMap map(const char* text) { return RootedMap::parse(text); }

const char* kLoop = "map n=1 sigma=(0 1) root=0";
const char* kEdge = "map n=1 sigma=(0)(1) root=0";
const char* kDouble = "map n=2 sigma=(0 2)(1 3) root=0";
const char* kPathEnd = "map n=2 sigma=(0)(1 2)(3) root=0";
const char* kPathCenter = "map n=2 sigma=(0)(1 2)(3) root=1";
const char* kTwoLoops = "map n=2 sigma=(0 1 2 3) root=0";

}  // namespace

TEST(ValidateMap, Examples) {
  EXPECT_TRUE(validate_map({1, {1, 0}, 0}));
  EXPECT_TRUE(validate_map({1, {0, 1}, 0}));
  EXPECT_FALSE(validate_map({2, {1, 0, 3, 2}, 0}));
  EXPECT_FALSE(validate_map({2, {0, 1, 1, 3}, 0}));
  EXPECT_FALSE(validate_map({1, {0, 1}, 2}));
  // Torus: one vertex, one face, two edges.
  EXPECT_FALSE(validate_map({2, {2, 3, 1, 0}, 0}));
  EXPECT_THROW(RootedMap(RotationSystem{2, {1, 0, 3, 2}, 0}), InvalidMap);
}

TEST(RootedMap, Counts) {
  RootedMap loop = map(kLoop);
  EXPECT_EQ(loop.vertex_count(), 1);
  EXPECT_EQ(loop.face_count(), 2);
  RootedMap edge = map(kEdge);
  EXPECT_EQ(edge.vertex_count(), 2);
  EXPECT_EQ(edge.face_count(), 1);
  RootedMap empty;
  EXPECT_TRUE(empty.empty());
  EXPECT_EQ(empty.vertex_count(), 1);
  EXPECT_EQ(empty.face_count(), 1);
  EXPECT_EQ(map("map n=0"), empty);
}

TEST(RootedMap, TextRoundTrip) {
  for (int n = 0; n <= 3; ++n) {
    for (const RootedMap& m : gen_maps(n)) EXPECT_EQ(RootedMap::parse(m.to_string()), m);
  }
  EXPECT_EQ(map(kEdge).to_string(), "map n=1 sigma=(0)(1) root=0");
  EXPECT_THROW(map("map n=1 sigma=(0 1 2) root=0"), Error);
  EXPECT_THROW(map("graph n=1"), ParseError);
}

TEST(MapStats, Examples) {
  MapStats loop = map_stats(map(kLoop));
  EXPECT_EQ(loop.outv, 1);
  EXPECT_FALSE(loop.loopless);
  EXPECT_FALSE(loop.bipartite);

  MapStats edge = map_stats(map(kEdge));
  EXPECT_EQ(edge.outv, 2);
  EXPECT_TRUE(edge.loopless);
  EXPECT_TRUE(edge.bipartite);
  EXPECT_EQ(edge.white, 1);
  EXPECT_EQ(edge.black, 1);
  EXPECT_EQ(edge.outdeg, 1);
  EXPECT_TRUE(edge.face.empty());

  MapStats dbl = map_stats(map(kDouble));
  EXPECT_EQ(dbl.outv, 2);
  EXPECT_TRUE(dbl.bipartite);
  EXPECT_EQ(dbl.outdeg, 1);
  EXPECT_EQ(dbl.face, (StatVector{{1, 1}}));
}

TEST(CanonicalForm, Examples) {
  EXPECT_EQ(canonical_form({1, {1, 0}, 0}), canonical_form({1, {1, 0}, 1}));
  EXPECT_NE(map(kEdge).canonical_form(), map(kLoop).canonical_form());
  EXPECT_NE(map(kPathEnd).canonical_form(), map(kPathCenter).canonical_form());
  EXPECT_NE(map(kPathEnd), map(kPathCenter));
}

TEST(CanonicalForm, InvariantUnderRelabeling) {
  // Swap the two edges of the center-rooted path and reverse one of them.
  RootedMap a = map(kPathCenter);
  RootedMap b = map("map n=2 sigma=(2)(3 1)(0) root=3");
  EXPECT_EQ(a, b);
}

TEST(Pi, Examples) {
  EXPECT_EQ(pi(map(kLoop)), RootedMap());
  EXPECT_EQ(pi(map(kEdge)), RootedMap());
  EXPECT_EQ(pi(map(kPathEnd)), map(kEdge));
  EXPECT_THROW(pi(RootedMap()), EmptyMap);
}

TEST(AttachRootEdge, Examples) {
  RootedMap edge = map(kEdge);
  RootedMap bridge = attach_root_edge(edge, 2);
  EXPECT_EQ(bridge, map(kPathEnd));

  RootedMap dbl = attach_root_edge(edge, 1);
  EXPECT_EQ(dbl.vertex_count(), 2);
  EXPECT_TRUE(map_stats(dbl).loopless);
  EXPECT_TRUE(is_one_corner(dbl));

  RootedMap looped = attach_root_edge(edge, 0);
  EXPECT_FALSE(map_stats(looped).loopless);
  EXPECT_TRUE(is_one_corner(looped));

  for (int i = 0; i <= 2; ++i) {
    RootedMap u = attach_root_edge(edge, i);
    EXPECT_EQ(pi(u), edge);
    EXPECT_EQ(outv_u(u), i);
  }
  EXPECT_THROW(attach_root_edge(edge, 3), IndexOutOfRange);
  EXPECT_THROW(attach_root_edge(edge, -1), IndexOutOfRange);
}

TEST(Decompose, Examples) {
  EXPECT_EQ(decompose(map(kLoop)), (std::vector<RootedMap>{map(kLoop)}));
  EXPECT_EQ(decompose(map(kTwoLoops)), (std::vector<RootedMap>{map(kLoop), map(kLoop)}));
  EXPECT_EQ(decompose(map(kEdge)), (std::vector<RootedMap>{map(kEdge)}));
  EXPECT_THROW(decompose(RootedMap()), EmptyMap);
}

TEST(Rho, Examples) {
  EXPECT_EQ(rho(RootedMap()).to_string(), "1");
  EXPECT_EQ(rho(map(kLoop)).to_string(), "1[0]");
  EXPECT_EQ(rho(map(kEdge)).to_string(), "2[1]");
  EXPECT_EQ(rho_inv(VTree(LabeledTree::parse("1"))), RootedMap());
  EXPECT_EQ(rho_inv(VTree(LabeledTree::parse("1[0]"))), map(kLoop));
  EXPECT_EQ(rho_inv(VTree(LabeledTree::parse("2[1]"))), map(kEdge));
  EXPECT_THROW(rho_inv(VTree(LabeledTree::parse("1[1]"))), InvalidInput);
}

TEST(RhoDirect, Examples) {
  EXPECT_EQ(rho_direct(map(kLoop)).to_string(), "1[0]");
  EXPECT_EQ(rho_direct(map(kEdge)).to_string(), "2[1]");
  EXPECT_EQ(rho_direct(map(kDouble)), rho(map(kDouble)));
  EXPECT_EQ(rho_inv(rho_direct(map(kDouble))), map(kDouble));
  EXPECT_EQ(rho_direct(RootedMap()).to_string(), "1");
}

TEST(Rho, RootLabelIsOuterVertexCount) {
  for (int n = 0; n <= 4; ++n) {
    for (const RootedMap& m : gen_maps(n)) EXPECT_EQ(rho(m).root_label(), outv(m)) << m.to_string();
  }
}

TEST(OneCorner, PreimagesAreExhaustive) {
  for (int n = 0; n <= 3; ++n) {
    for (const RootedMap& m : gen_maps(n)) {
      std::set<RootedMap> attached;
      for (int i = 0; i <= outv(m); ++i) attached.insert(attach_root_edge(m, i));
      std::set<RootedMap> scanned;
      for (const RootedMap& u : gen_maps(n + 1)) {
        if (is_one_corner(u) && pi(u) == m) scanned.insert(u);
      }
      EXPECT_EQ(attached, scanned) << m.to_string();
    }
  }
}
