#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace gpw;
using fx::w;

TEST(TreeAction, Examples) {
  auto hex = fx::hexagon();
  auto x1 = hex->graph().vertex("x1");
  EXPECT_EQ(tree_action(w(hex, "x1 x2 x3"), x1).kind, TreeActionKind::Loxodromic);
  for (VertexId v = 0; v < hex->rank(); ++v)
    EXPECT_EQ(tree_action(GroupElement::identity(hex), v).kind, TreeActionKind::EllipticComplement);

  auto ab = fx::context({"a", "b"}, {"a-b"});
  EXPECT_EQ(tree_action(w(ab, "a b"), 0).kind, TreeActionKind::EllipticStarOnly);
  EXPECT_EQ(tree_action(w(ab, "a b"), 0).tau, 0u);
}

TEST(TreeAction, TranslationLengthExamples) {
  auto free = fx::free_group({"a", "b"});
  EXPECT_EQ(translation_length(w(free, "a b"), 0), 2u);
  EXPECT_EQ(translation_length(w(free, "a"), 0), 0u);
  EXPECT_EQ(translation_length(w(free, "b a b^-1"), 0), 0u);

  auto ctx = fx::context({"a", "b", "c"}, {"a-b"});
  EXPECT_EQ(translation_length(w(ctx, "a c b a c"), 0), 4u);
  // Conjugating does not change it.
  EXPECT_EQ(translation_length(w(ctx, "c^-1 b a c b a c c b^-1"), 0), 4u);
}

TEST(TreeAction, LoxodromicPredicate) {
  auto free = fx::free_group();
  auto g = w(free, "a b");
  EXPECT_TRUE(is_loxodromic(g, 0));
  EXPECT_FALSE(is_loxodromic(g, 2));
}

TEST(TreeAction, OrderTwoComponents) {
  auto d = fx::context({"u", "w", "t"}, {"u-t", "w-t"}, {2, 2, 2});
  EXPECT_TRUE(has_order_two_component(w(d, "u w t")));
  EXPECT_FALSE(has_order_two_component(w(d, "u w")));
  EXPECT_TRUE(has_order_two_component(w(d, "u")));
  auto z4 = fx::context({"a", "b"}, {}, {4, 0});
  EXPECT_TRUE(has_order_two_component(w(z4, "a^2")));
  EXPECT_FALSE(has_order_two_component(w(z4, "a")));
  EXPECT_FALSE(has_order_two_component(w(z4, "a b")));
}

TEST(Exceptional, FreePairHasNoFailures) {
  auto free = fx::free_group();
  auto r = exceptional_exponents(w(free, "a"), w(free, "b"), 1, 20);
  EXPECT_TRUE(r.failures.empty());
  EXPECT_EQ(r.excluded, 0u);
}

TEST(Exceptional, CancellingPairFailsOnlyOnDiagonal) {
  auto free = fx::free_group();
  auto r = exceptional_exponents(w(free, "a b"), w(free, "b^-1 a^-1 c"), 1, 25);
  ASSERT_FALSE(r.failures.empty());
  for (auto [m, n] : r.failures) EXPECT_EQ(m, n);
  EXPECT_EQ(r.cover_rows + r.cover_columns + r.cover_rays, 1u);
}

TEST(Exceptional, LineCover) {
  std::vector<ExponentPair> pts{{2, 3}, {4, 6}, {6, 9}, {5, 1}, {5, 7}, {1, 8}, {3, 8}};
  EXPECT_TRUE(line_cover_fits(pts, 1, 1, 1));
  EXPECT_FALSE(line_cover_fits(pts, 1, 1, 0));
  EXPECT_FALSE(line_cover_fits(pts, 0, 1, 1));
  auto [rows, cols, rays] = greedy_line_cover(pts);
  EXPECT_EQ(rows + cols + rays, 3u);
  EXPECT_TRUE(line_cover_fits({}, 0, 0, 0));
}

TEST(BassSerreProperty, HomogeneityAndConjugationInvariance) {
  fx::Rng rng(41);
  int samples = 0;
  while (samples < 300) {
    auto ctx = fx::random_context(rng, 5, 0.4, 0.3, 5);
    auto g = fx::random_element(rng, ctx, 1, 6);
    auto lox = ctx->graph().acon(support(g));
    if (lox.empty()) continue;
    ++samples;
    auto c = fx::random_element(rng, ctx, 0, 4);
    for (VertexId v : lox.members()) {
      auto tau = translation_length(g, v);
      EXPECT_GT(tau, 0u);
      EXPECT_EQ(tau % 2, 0u);
      for (Exponent n = 1; n <= 6; ++n) EXPECT_EQ(translation_length(power(g, n), v), n * tau) << fx::describe(g);
      EXPECT_EQ(translation_length(c * g * invert(c), v), tau);
    }
    for (VertexId v = 0; v < ctx->rank(); ++v) {
      auto a = tree_action(g, v);
      EXPECT_EQ(a.kind, tree_action(c * g * invert(c), v).kind);
      EXPECT_EQ(a.tau > 0, a.kind == TreeActionKind::Loxodromic);
      EXPECT_EQ(a.kind == TreeActionKind::Loxodromic, is_loxodromic(g, v));
    }
  }
}

TEST(BassSerreProperty, ExactlyOneComponentIsLoxodromic) {
  fx::Rng rng(42);
  for (int trial = 0; trial < 300; ++trial) {
    auto ctx = fx::random_context(rng, 6, 0.5, 0.3, 4);
    auto g = fx::random_element(rng, ctx, 1, 8);
    auto comps = irreducible_components(g);
    for (VertexId v = 0; v < ctx->rank(); ++v) {
      if (!is_loxodromic(g, v)) continue;
      int lox = 0;
      std::size_t tau = 0;
      for (const auto& c : comps)
        if (is_loxodromic(c, v)) {
          ++lox;
          tau = translation_length(c, v);
        }
      EXPECT_EQ(lox, 1) << fx::describe(g);
      EXPECT_EQ(tau, translation_length(g, v));
    }
  }
}

TEST(BassSerreProperty, FailureSetsAreCoveredByFewLines) {
  fx::Rng rng(43);
  int sampled = 0;
  for (int trial = 0; trial < 60; ++trial) {
    auto ctx = make_context(fx::random_graph_dim(rng, 4, 0.4, 2), fx::random_groups(rng, 4, 0.3, 4));
    auto g = fx::random_element(rng, ctx, 1, 4);
    auto h = fx::random_element(rng, ctx, 1, 4);
    Exponent lo = exceptional_window_floor(*ctx);
    auto r = exceptional_exponents(g, h, lo, lo + 12);
    std::size_t d = std::max<std::size_t>(ctx->dim(), 1);
    EXPECT_TRUE(line_cover_fits(r.failures, d, d, d)) << fx::describe(g) << " / " << fx::describe(h);
    ++sampled;
  }
  EXPECT_EQ(sampled, 60);
}
