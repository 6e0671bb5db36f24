#include <gtest/gtest.h>

#include <set>
#include <string>

#include "lambdamaps/enumeration.hpp"
#include "lambdamaps/error.hpp"
#include "lambdamaps/lambda_core.hpp"
#include "oracles.hpp"

using namespace lambdamaps;

TEST(ParseTerm, Identity) {
  ParsedTerm p = parse_term("\\x.x");
  ASSERT_TRUE(p.closed());
  const auto& abs = std::get<Abs>(p.term->node);
  EXPECT_EQ(abs.var, "x");
  EXPECT_EQ(std::get<Var>(abs.body->node).name, "x");
}

TEST(ParseTerm, NestedApplication) {
  ParsedTerm p = parse_term("\\x.\\y.x y");
  const auto& ax = std::get<Abs>(p.term->node);
  const auto& ay = std::get<Abs>(ax.body->node);
  const auto& app = std::get<App>(ay.body->node);
  EXPECT_EQ(std::get<Var>(app.fun->node).name, "x");
  EXPECT_EQ(std::get<Var>(app.arg->node).name, "y");
}

TEST(ParseTerm, LambdaSymbol) {
  EXPECT_TRUE(alpha_equivalent(*parse_term("λx.x").term, *parse_term("\\y.y").term));
}

TEST(ParseTerm, UnbalancedParenthesis) {
  try {
    parse_term("\\x.x (\\y.y");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 9u);
    EXPECT_NE(std::string(e.what()).find("unbalanced parenthesis at offset 9"), std::string::npos);
  }
}

TEST(ParseTerm, Errors) {
  EXPECT_THROW(parse_term(""), ParseError);
  EXPECT_THROW(parse_term("\\.x"), ParseError);
  EXPECT_THROW(parse_term("x)"), ParseError);
  EXPECT_THROW(parse_term("\\x x"), ParseError);
}

TEST(ParseTerm, FreeVariables) {
  ParsedTerm p = parse_term("\\x.y x z y");
  EXPECT_FALSE(p.closed());
  EXPECT_EQ(p.free_variables, (std::vector<std::string>{"y", "z"}));
}

TEST(RenderTerm, Examples) {
  EXPECT_EQ(render_term(*make_abs("x", make_var("x"))), "\\x.x");
  auto xyz = make_app(make_app(make_var("x"), make_var("y")), make_var("z"));
  EXPECT_EQ(render_term(*xyz), "x y z");
  auto x_yz = make_app(make_var("x"), make_app(make_var("y"), make_var("z")));
  EXPECT_EQ(render_term(*x_yz), "x (y z)");
  EXPECT_EQ(render_term(*make_app(make_abs("x", make_var("x")), make_var("y"))), "(\\x.x) y");
}

TEST(RenderTerm, ParsesBack) {
  for (const char* text : {"\\x.x (\\y.y) (\\z.z)", "\\x.\\y.x (y (\\z.z))", "(\\x.x) (\\y.y)", "\\x.x (\\y.\\z.y z)"}) {
    TermPtr t = parse_term(text).term;
    EXPECT_TRUE(alpha_equivalent(*parse_term(render_term(*t)).term, *t)) << text;
    EXPECT_EQ(render_term(*t), text);
  }
}

TEST(DeBruijn, AlphaEquivalence) {
  EXPECT_TRUE(alpha_equivalent(*parse_term("\\a.\\b.a b").term, *parse_term("\\x.\\y.x y").term));
  EXPECT_FALSE(alpha_equivalent(*parse_term("\\a.\\b.a b").term, *parse_term("\\x.\\y.y x").term));
  EXPECT_EQ(de_bruijn(*parse_term("\\x.\\x.x").term), de_bruijn(*parse_term("\\y.\\z.z").term));
}

TEST(Term, SizeAndRedex) {
  EXPECT_EQ(term_size(*parse_term("\\x.\\y.x y").term), 2);
  EXPECT_FALSE(has_redex(*parse_term("\\x.x (\\y.y)").term));
  EXPECT_TRUE(has_redex(*parse_term("\\z.(\\x.x) z").term));
}

TEST(Skeleton, OfTerm) {
  EXPECT_EQ(skeleton_of(*parse_term("\\x.x").term).to_string(), "U(L)");
  EXPECT_EQ(skeleton_of(*parse_term("\\x.\\y.x y").term).to_string(), "U(U(B(L,L)))");
  EXPECT_EQ(skeleton_of(*parse_term("\\x.x (\\y.y)").term).to_string(), "U(B(L,U(L)))");
}

TEST(Skeleton, ParseAndCounts) {
  Skeleton s = Skeleton::parse(" U( U (B(L, L)))");
  EXPECT_EQ(s.to_string(), "U(U(B(L,L)))");
  EXPECT_EQ(s.size(), 2);
  EXPECT_EQ(s.unary_count(), 2);
  EXPECT_EQ(s.binary_count(), 1);
  EXPECT_EQ(s.node_count(), 5);
  EXPECT_EQ(s.kind(2), NodeKind::Binary);
  EXPECT_EQ(s.chain_above(2), 2);
  EXPECT_EQ(s.deficit(0), 0);
  EXPECT_EQ(s.first_non_unary(), 2);
  EXPECT_EQ(s.subtree(2).to_string(), "B(L,L)");
  EXPECT_THROW(Skeleton::parse("B(L)"), ParseError);
  EXPECT_THROW(Skeleton::parse("U(L"), ParseError);
  EXPECT_EQ(unary_chain(3, Skeleton::leaf()).to_string(), "U(U(U(L)))");
}

// Pre-order ids of U(U(B(L,L))): 0 U, 1 U, 2 B, 3 L, 4 L.
TEST(PlanarMatch, NestedBinders) {
  Matching m = planar_match(Skeleton::parse("U(U(B(L,L)))"));
  EXPECT_EQ(m.binder_of_leaf[3], 0);
  EXPECT_EQ(m.binder_of_leaf[4], 1);
  EXPECT_EQ(m.leaf_of_binder[0], 3);
  EXPECT_EQ(m.leaf_of_binder[1], 4);
}

// Pre-order ids of U(B(L,U(L))): 0 U, 1 B, 2 L, 3 U, 4 L.
TEST(PlanarMatch, SequentialBinders) {
  Matching m = planar_match(Skeleton::parse("U(B(L,U(L)))"));
  EXPECT_EQ(m.binder_of_leaf[2], 0);
  EXPECT_EQ(m.binder_of_leaf[4], 3);
}

TEST(PlanarMatch, Failures) {
  EXPECT_THROW(planar_match(Skeleton::parse("U(B(L,L))")), MatchFailure);
  EXPECT_THROW(planar_match(Skeleton::parse("U(U(L))")), MatchFailure);
  EXPECT_THROW(planar_match(Skeleton::parse("L")), MatchFailure);
}

TEST(Normality, Examples) {
  EXPECT_FALSE(is_normal(Skeleton::parse("U(B(U(L),L))")));
  EXPECT_TRUE(is_normal(Skeleton::parse("U(U(B(L,L)))")));
  EXPECT_TRUE(is_normal(Skeleton::parse("U(B(L,U(L)))")));
}

TEST(TermOfSkeleton, Names) {
  EXPECT_EQ(render_term(*term_of_skeleton(Skeleton::parse("U(U(B(L,L)))"))), "\\x.\\y.x y");
  EXPECT_EQ(render_term(*term_of_skeleton(Skeleton::parse("U(B(L,U(L)))"))), "\\x.x (\\y.y)");
}

TEST(Diagram, SelfLoop) {
  Diagram d = diagram_of(Skeleton::parse("U(L)"));
  EXPECT_EQ(d.vertex_count, 1);
  ASSERT_EQ(d.edges.size(), 1u);
  EXPECT_EQ(d.edges[0].first, d.edges[0].second);
}

TEST(Diagram, TwoBinders) {
  Diagram d = diagram_of(Skeleton::parse("U(U(B(L,L)))"));
  EXPECT_EQ(d.vertex_count, 3);
  std::multiset<std::pair<int, int>> edges;
  for (auto [a, b] : d.edges) edges.insert({std::min(d.node_of[a], d.node_of[b]), std::max(d.node_of[a], d.node_of[b])});
  EXPECT_EQ(edges, (std::multiset<std::pair<int, int>>{{0, 1}, {1, 2}, {1, 2}, {0, 2}}));
}

TEST(Diagram, LoopOnInnerBinder) {
  Diagram d = diagram_of(Skeleton::parse("U(B(L,U(L)))"));
  EXPECT_EQ(d.vertex_count, 3);
  std::multiset<std::pair<int, int>> edges;
  for (auto [a, b] : d.edges) edges.insert({std::min(d.node_of[a], d.node_of[b]), std::max(d.node_of[a], d.node_of[b])});
  EXPECT_EQ(edges, (std::multiset<std::pair<int, int>>{{0, 1}, {1, 3}, {0, 1}, {3, 3}}));
}

// Terms built from ordered contexts are exactly the terms of the planar
// skeletons.
TEST(PlanarTerms, MatchOrderedContextOracle) {
  for (int n = 1; n <= 5; ++n) {
    std::set<std::string> expected;
    oracle::PlanarTerms terms(n);
    for (const auto& text : terms.terms()) expected.insert(de_bruijn(*parse_term(text).term));
    std::set<std::string> actual;
    for (const Skeleton& s : gen_skeletons(n, TermFamily::Planar)) actual.insert(de_bruijn(*term_of_skeleton(s)));
    EXPECT_EQ(actual, expected) << "n=" << n;
    EXPECT_EQ(static_cast<long long>(expected.size()), oracle::planar_maps(n - 1)) << "n=" << n;
  }
}
