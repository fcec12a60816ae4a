#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "fixtures.hpp"

using namespace gpw;
using fx::vs;
using fx::w;

namespace {

std::vector<GroupElement> gens(const Context& ctx) {
  std::vector<GroupElement> out;
  for (VertexId v = 0; v < ctx->rank(); ++v) out.push_back(generator(ctx, v));
  return out;
}

}  // namespace

TEST(Growth, FreeBall) {
  auto f2 = fx::free_group({"a", "b"});
  auto r = ball_sizes(gens(f2), 8);
  ASSERT_EQ(r.sizes.size(), 8u);
  for (std::size_t n = 1; n <= 8; ++n) EXPECT_EQ(r.sizes[n - 1], 2 * static_cast<std::size_t>(std::pow(3, n)) - 1);
  EXPECT_TRUE(r.ball_mode);
  EXPECT_FALSE(r.truncated);
  for (std::size_t n = 1; n <= 8; ++n) EXPECT_GE(r.fekete_upper[n - 1], 3.0);
}

TEST(Growth, AbelianBall) {
  auto z2 = fx::context({"a", "b"}, {"a-b"});
  auto r = ball_sizes(gens(z2), 8);
  for (std::size_t n = 1; n <= 8; ++n) EXPECT_EQ(r.sizes[n - 1], 2 * n * n + 2 * n + 1);
}

TEST(Growth, HexagonLetters) {
  auto hex = fx::hexagon();
  std::vector<GroupElement> U;
  for (const char* x : {"x1", "x2", "x3"}) {
    U.push_back(w(hex, x));
    U.push_back(invert(w(hex, x)));
  }
  EXPECT_EQ(product_set_sizes(U, 1).sizes, std::vector<std::size_t>{6});
}

TEST(Growth, ProductsHaveExactlyNLetters) {
  auto z = fx::context({"a"});
  auto r = product_set_sizes({w(z, "a"), w(z, "a^-1")}, 4);
  EXPECT_EQ(r.sizes, (std::vector<std::size_t>{2, 3, 4, 5}));
  auto z2 = fx::context({"u"}, {}, {2});
  EXPECT_EQ(product_set_sizes({w(z2, "u")}, 3).sizes, (std::vector<std::size_t>{1, 1, 1}));
}

TEST(Growth, InequalityExamples) {
  auto f2 = fx::free_group({"a", "b"});
  auto ball = ball_generators(gens(f2));
  ASSERT_EQ(ball.size(), 5u);
  auto r = growth_inequality_check(ball, 0.2, 1.0, 6);
  EXPECT_EQ(r.per_n_check, std::vector<bool>(6, true));

  auto one = std::vector<GroupElement>{GroupElement::identity(f2)};
  auto r1 = growth_inequality_check(one, 2.0, 1.0, 3);
  EXPECT_EQ(r1.per_n_check, std::vector<bool>(3, false));

  auto z = fx::context({"a"});
  auto zb = ball_generators({w(z, "a")});
  auto r2 = growth_inequality_check(zb, 1.0, 1.0, 3);
  EXPECT_EQ(r2.per_n_check, (std::vector<bool>{true, false, false}));

  EXPECT_THROW(growth_inequality_check(zb, 0.0, 1.0, 3), std::invalid_argument);
  EXPECT_THROW(growth_inequality_check(zb, 1.0, -1.0, 3), std::invalid_argument);
  // Equality is not lost to rounding.
  EXPECT_TRUE(growth_inequality_holds(9, 3, 1.0, 1.0, 2));
}

TEST(Growth, Truncation) {
  auto f2 = fx::free_group({"a", "b"});
  EnumerationOptions opts;
  opts.max_elements = 100;
  auto r = ball_sizes(gens(f2), 8, opts);
  EXPECT_TRUE(r.truncated);
  EXPECT_EQ(r.sizes.size(), 3u);
  EXPECT_NE(r.note.find("budget"), std::string::npos);
}

TEST(GrowthProperty, OrderAndThreadInsensitive) {
  fx::Rng rng(61);
  for (int trial = 0; trial < 40; ++trial) {
    auto ctx = fx::random_context(rng, 4, 0.4, 0.3, 4);
    std::vector<GroupElement> U;
    for (int i = 0; i < 3; ++i) U.push_back(fx::random_element(rng, ctx, 1, 3));
    auto base = product_set_sizes(U, 5).sizes;
    auto shuffled = U;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    EnumerationOptions opts;
    opts.threads = 1 + trial % 4;
    EXPECT_EQ(product_set_sizes(shuffled, 5, opts).sizes, base);
    for (std::size_t m = 1; m <= base.size(); ++m)
      for (std::size_t n = 1; m + n <= base.size(); ++n) EXPECT_LE(base[m + n - 1], base[m - 1] * base[n - 1]);
  }
}

TEST(GrowthProperty, ThreadedLevelsAreIdentical) {
  auto hex = fx::hexagon();
  auto U = ball_generators(gens(hex));
  ProductSetEnumerator one(U), four(U, {4, 1'000'000});
  for (int n = 0; n < 4; ++n) {
    ASSERT_TRUE(one.advance());
    ASSERT_TRUE(four.advance());
    EXPECT_TRUE(one.level() == four.level()) << "level " << n + 1;
  }
}

TEST(GrowthProperty, BallMatchesNaiveOracle) {
  fx::Rng rng(62);
  for (int trial = 0; trial < 25; ++trial) {
    auto ctx = fx::random_context(rng, 2 + trial % 3, 0.5, 0.3, 3);
    auto S = std::vector<GroupElement>{fx::random_element(rng, ctx, 1, 2, 1), fx::random_element(rng, ctx, 1, 2, 1)};
    auto ball = ball_generators(S);
    auto r = product_set_sizes(ball, 4);
    std::vector<oracle::RawWord> raw;
    for (const auto& b : ball) raw.push_back(fx::raw(b));
    auto p = fx::presentation(ctx);
    for (std::size_t n = 1; n <= 4; ++n) {
      auto naive = oracle::naive_product_set(p, raw, n, 1'000'000);
      ASSERT_TRUE(naive.has_value());
      EXPECT_EQ(r.sizes[n - 1], *naive) << "n=" << n << " " << fx::describe(ctx->graph());
    }
  }
}

TEST(GrowthProperty, ProductSetsMatchNaiveOracle) {
  fx::Rng rng(63);
  for (int trial = 0; trial < 40; ++trial) {
    auto ctx = fx::random_context(rng, 4, 0.4, 0.3, 3);
    std::vector<GroupElement> U;
    for (std::size_t i = 0, k = 1 + rng() % 3; i < k; ++i) U.push_back(fx::random_element(rng, ctx, 1, 3));
    U = distinct(U);
    auto r = product_set_sizes(U, 3);
    std::vector<oracle::RawWord> raw;
    for (const auto& u : U) raw.push_back(fx::raw(u));
    for (std::size_t n = 1; n <= 3; ++n)
      EXPECT_EQ(r.sizes[n - 1], oracle::naive_product_set(fx::presentation(ctx), raw, n).value());
  }
}

TEST(Sharpness, Bipartite) {
  EXPECT_THROW(build_bipartite_example(1), std::invalid_argument);
  auto inst = build_bipartite_example(3);
  EXPECT_EQ(inst.context->rank(), 6u);
  EXPECT_EQ(inst.context->dim(), 2u);
  EXPECT_EQ(inst.letters.size(), 6u);
  for (std::size_t m = 2; m <= 3; ++m) {
    auto r = verify_bipartite(m);
    EXPECT_TRUE(r.pass());
    for (const auto& c : r.checks) EXPECT_TRUE(c.pass) << c.name << ": " << c.detail;
  }
  // m = 2 directly: 4 letters, 16 products of length 2.
  auto two = build_bipartite_example(2);
  for (const auto& u : two.letters) EXPECT_FALSE(classify(u).strongly_irreducible);
  int strongly = 0;
  for (const auto& a : two.letters)
    for (const auto& b : two.letters) strongly += classify(a * b).strongly_irreducible;
  EXPECT_EQ(strongly, 8);
}

TEST(Sharpness, Abelian) {
  auto pairs = abelian_pairs(1);
  EXPECT_EQ(pairs.size(), 8u);
  auto inst = build_abelian_example(1);
  EXPECT_EQ(inst.context->rank(), 8u);
  EXPECT_EQ(support_of_set({inst.g, inst.h}).supp, inst.context->graph().all());
  for (Exponent m = -1; m <= 1; ++m)
    for (Exponent n = -1; n <= 1; ++n) {
      auto x = power(inst.g, m) * power(inst.h, n);
      auto missing = inst.context->graph().all() - support(x);
      EXPECT_FALSE(missing.empty());
      if (m == 0 && n == 0) continue;
      auto it = std::find(pairs.begin(), pairs.end(), ExponentPair{m, n});
      ASSERT_NE(it, pairs.end());
      EXPECT_TRUE(missing.contains(static_cast<VertexId>(it - pairs.begin())));
    }
  EXPECT_TRUE(verify_abelian(1).pass());
  EXPECT_TRUE(verify_abelian(2).pass());
}

TEST(Sharpness, StarTree) {
  EXPECT_THROW(build_sharpness_example(3), std::invalid_argument);
  EXPECT_THROW(build_sharpness_example(0), std::invalid_argument);
  auto inst = build_sharpness_example(1);
  EXPECT_EQ(inst.s, 5u);
  EXPECT_EQ(inst.t, 3u);
  EXPECT_EQ(inst.context->rank(), sharpness_vertex_count(1));
  EXPECT_TRUE(inst.context->torsion_free());
  auto r = verify_sharpness(1);
  for (const auto& c : r.checks) EXPECT_TRUE(c.pass) << c.name << ": " << c.detail;
  ASSERT_TRUE(r.certificate);
  EXPECT_TRUE(r.certificate->classification.strongly_irreducible);
  EXPECT_GT(r.certificate->n(), 1u);
  EXPECT_EQ(format_word(replay(inst.letters, r.certificate->letters)), format_word(r.certificate->element));
}
