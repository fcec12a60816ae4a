#ifndef GPW_SHARPNESS_HPP
#define GPW_SHARPNESS_HPP

#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gpw/growth.hpp"
#include "gpw/search.hpp"

namespace gpw {

/// One of the three sharpness constructions, ready to be examined.
struct SharpnessInstance {
  std::string name;
  Context context;
  GroupElement g;
  GroupElement h;
  std::vector<GroupElement> letters;  // the set whose products are examined
  std::size_t parameter = 0;          // m or N
  std::size_t s = 0, t = 0;           // branch count and length (star-tree example only)
};

struct VerifyCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::string example;
  std::size_t parameter = 0;
  std::vector<VerifyCheck> checks;
  std::optional<SearchCertificate> certificate;

  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return !checks.empty();
  }
  void add(std::string name, bool ok, std::string detail = {}) {
    checks.push_back({std::move(name), ok, std::move(detail)});
  }
};

// -- bipartite: 2m vertices, x_i ~ y_j for i != j --------------------------

inline SharpnessInstance build_bipartite_example(std::size_t m) {
  if (m < 2) throw std::invalid_argument("bipartite example needs m >= 2");
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= m; ++i) names.push_back("x" + std::to_string(i));
  for (std::size_t i = 1; i <= m; ++i) names.push_back("y" + std::to_string(i));
  Graph graph(names);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (i != j) graph.add_edge(i, m + j);
  auto ctx = make_context(std::move(graph), std::vector<VertexGroup>(2 * m, VertexGroup::infinite()));
  SharpnessInstance inst;
  inst.name = "bipartite";
  inst.context = ctx;
  inst.parameter = m;
  inst.g = GroupElement::identity(ctx);
  for (VertexId i = 0; i < m; ++i) {
    inst.letters.push_back(generator(ctx, i, 1));
    inst.letters.push_back(generator(ctx, i, -1));
    inst.g = inst.g * generator(ctx, i, 1);
  }
  inst.h = GroupElement::identity(ctx);
  return inst;
}

inline VerifyReport verify_bipartite(std::size_t m, EnumerationOptions opts = {}) {
  auto inst = build_bipartite_example(m);
  const auto& graph = inst.context->graph();
  VerifyReport r{"bipartite", m, {}, std::nullopt};
  ProductSetEnumerator e(inst.letters, opts);
  for (std::size_t k = 1; k < m; ++k) {
    if (!e.advance()) {
      r.add("U^" + std::to_string(k) + " enumerated", false, "element budget exceeded");
      return r;
    }
    std::size_t strongly = 0, perp_empty = 0;
    for (const auto& x : e.level()) {
      VertexSet s = support(x);
      if (strongly_irreducible_support(graph, s)) ++strongly;
      if (graph.perp(s).empty()) ++perp_empty;
    }
    std::ostringstream d;
    d << e.level().size() << " elements, " << strongly << " strongly irreducible";
    r.add("U^" + std::to_string(k) + " has no strongly irreducible element", strongly == 0, d.str());
    r.add("U^" + std::to_string(k) + " elements all have nonempty perp", perp_empty == 0,
          std::to_string(perp_empty) + " with empty perp");
  }
  std::vector<std::size_t> letters;
  for (std::size_t i = 0; i < m; ++i) letters.push_back(2 * i);
  bool member = replay(inst.letters, letters) == inst.g;
  r.add("x1...xm lies in U^m", member);
  r.add("x1...xm is strongly irreducible", is_strongly_irreducible(inst.g));
  return r;
}

// -- abelian: complete graph on (2N+1)^2 - 1 copies of Z -------------------

/// Nonzero pairs (a, b) in [-N, N]^2, lexicographic.
inline std::vector<ExponentPair> abelian_pairs(std::size_t N) {
  auto n = static_cast<Exponent>(N);
  std::vector<ExponentPair> out;
  for (Exponent a = -n; a <= n; ++a)
    for (Exponent b = -n; b <= n; ++b)
      if (a != 0 || b != 0) out.emplace_back(a, b);
  return out;
}

inline SharpnessInstance build_abelian_example(std::size_t N) {
  if (N < 1) throw std::invalid_argument("abelian example needs N >= 1");
  auto pairs = abelian_pairs(N);
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= pairs.size(); ++i) names.push_back("x" + std::to_string(i));
  Graph graph(names);
  for (VertexId i = 0; i < names.size(); ++i)
    for (VertexId j = i + 1; j < names.size(); ++j) graph.add_edge(i, j);
  auto ctx = make_context(std::move(graph), std::vector<VertexGroup>(names.size(), VertexGroup::infinite()));
  std::vector<Syllable> g, h;
  for (VertexId i = 0; i < pairs.size(); ++i) {
    g.push_back({i, pairs[i].second});
    h.push_back({i, -pairs[i].first});
  }
  SharpnessInstance inst;
  inst.name = "abelian";
  inst.context = ctx;
  inst.parameter = N;
  inst.g = reduce(ctx, g);
  inst.h = reduce(ctx, h);
  inst.letters = {inst.g, inst.h};
  return inst;
}

inline VerifyReport verify_abelian(std::size_t N) {
  auto inst = build_abelian_example(N);
  const auto& ctx = *inst.context;
  auto pairs = abelian_pairs(N);
  VerifyReport r{"abelian", N, {}, std::nullopt};
  auto n = static_cast<Exponent>(N);
  std::size_t full = 0, wrong_gap = 0;
  for (Exponent m = -n; m <= n; ++m) {
    for (Exponent k = -n; k <= n; ++k) {
      VertexSet s = support(power(inst.g, m) * power(inst.h, k));
      if (s.size() == ctx.rank()) ++full;
      if (m == 0 && k == 0) continue;
      // g^m h^k has coordinate b_i m - a_i k, which vanishes at (a_i, b_i) = (m, k).
      for (VertexId i = 0; i < pairs.size(); ++i)
        if (pairs[i] == ExponentPair{m, k} && s.contains(i)) ++wrong_gap;
    }
  }
  std::size_t total = (2 * N + 1) * (2 * N + 1);
  r.add("no g^m h^n with |m|,|n| <= N has full support", full == 0,
        std::to_string(total) + " pairs, " + std::to_string(full) + " with full support");
  r.add("the coordinate with (a_i, b_i) = (m, n) is missing", wrong_gap == 0);
  r.add("supp({g, h}) is every vertex", support_of_set(inst.letters).supp.size() == ctx.rank(),
        std::to_string(ctx.rank()) + " vertices");
  return r;
}

// -- doubled star tree ------------------------------------------------------

/// Vertex count of the doubled graph for parameter N.
inline std::size_t sharpness_vertex_count(std::size_t N) {
  std::size_t s = (N + 1) * (2 * N + 1) - 1, t = 2 * N * N + 1;
  return 2 * (1 + s * t);
}

/// Builds Λ (opposite of a star tree with s branches of length t), doubles it
/// into Γ, and forms g, h in the first copy of Λ.
///
/// Vertex order: y, x{i}_{j} branch by branch, then the second copies d_y,
/// d_x{i}_{j} in the same order.
inline SharpnessInstance build_sharpness_example(std::size_t N) {
  if (N < 1 || N > 2) {
    const std::size_t s = (N + 1) * (2 * N + 1) - 1, t = 2 * N * N + 1;
    std::ostringstream os;
    os << "sharpness example supports N in {1, 2}; N = " << N << " needs " << sharpness_vertex_count(N)
       << " vertices, g of up to " << (2 * N * N + N) * s * t + 1 << " syllables and 5^" << N
       << " products to classify";
    throw std::invalid_argument(os.str());
  }
  const std::size_t s = (N + 1) * (2 * N + 1) - 1, t = 2 * N * N + 1;
  const std::size_t half = 1 + s * t;
  auto x = [&](std::size_t i, std::size_t j) -> VertexId { return 1 + (i - 1) * t + (j - 1); };  // 1-based i, j

  std::vector<std::string> names{"y"};
  for (std::size_t i = 1; i <= s; ++i)
    for (std::size_t j = 1; j <= t; ++j) names.push_back("x" + std::to_string(i) + "_" + std::to_string(j));
  for (std::size_t v = 0; v < half; ++v) names.push_back("d_" + names[v]);

  std::vector<std::vector<bool>> tree(half, std::vector<bool>(half, false));
  auto tree_edge = [&](VertexId a, VertexId b) { tree[a][b] = tree[b][a] = true; };
  for (std::size_t i = 1; i <= s; ++i) {
    tree_edge(0, x(i, 1));
    for (std::size_t j = 1; j < t; ++j) tree_edge(x(i, j), x(i, j + 1));
  }
  Graph graph(names);
  for (VertexId a = 0; a < half; ++a)
    for (VertexId b = a + 1; b < half; ++b)
      if (!tree[a][b]) graph.add_edge(a, b);
  for (VertexId v = 0; v < half; ++v)
    for (VertexId w = 0; w < half; ++w)
      if (w != v) graph.add_edge(half + v, w);
  auto ctx = make_context(std::move(graph), std::vector<VertexGroup>(2 * half, VertexGroup::infinite()));

  std::vector<std::vector<Syllable>> u(s + 1);
  for (std::size_t i = 1; i <= s; ++i)
    for (std::size_t j = t; j >= 1; --j) u[i].push_back({x(i, j), 1});
  auto element = [&](const std::vector<Syllable>& w) { return reduce(ctx, w); };

  std::vector<ExponentPair> pairs;
  for (Exponent a = 0; a <= static_cast<Exponent>(N); ++a)
    for (Exponent b = -static_cast<Exponent>(N); b <= static_cast<Exponent>(N); ++b)
      if (a != 0 || b != 0) pairs.emplace_back(a, b);

  GroupElement alpha = GroupElement::identity(ctx), beta = alpha, P = alpha;
  for (std::size_t i = 1; i <= s; ++i) {
    GroupElement ui = element(u[i]);
    alpha = alpha * power(ui, pairs[i - 1].first);
    beta = beta * power(ui, pairs[i - 1].second);
    P = P * ui;
  }
  alpha = alpha * generator(ctx, 0, 1);
  auto n2 = static_cast<Exponent>(N * N);

  SharpnessInstance inst;
  inst.name = "sharpness";
  inst.context = ctx;
  inst.parameter = N;
  inst.s = s;
  inst.t = t;
  inst.g = power(P, -n2) * alpha * power(P, n2);
  inst.h = beta;
  inst.letters = {inst.g, inst.h};
  return inst;
}

inline VerifyReport verify_sharpness(std::size_t N, EnumerationOptions opts = {}) {
  auto inst = build_sharpness_example(N);
  const auto& ctx = *inst.context;
  const auto& graph = ctx.graph();
  const std::size_t half = ctx.rank() / 2;
  VerifyReport r{"sharpness", N, {}, std::nullopt};

  VertexSet lambda(ctx.rank());
  for (VertexId v = 0; v < half; ++v) lambda.insert(v);
  r.add("supp({g, h}) is the first copy of the co-star graph", support_of_set(inst.letters).supp == lambda,
        std::to_string(half) + " vertices");

  auto ball = ball_generators(inst.letters);
  ProductSetEnumerator e(ball, opts);
  for (std::size_t k = 1; k <= N; ++k) {
    if (!e.advance()) {
      r.add("products enumerated", false, "element budget exceeded");
      return r;
    }
  }
  std::size_t strongly = 0;
  for (const auto& z : e.level())
    if (strongly_irreducible_support(graph, support(z))) ++strongly;
  r.add("{1, g, h, g^-1, h^-1}^N has no strongly irreducible element", strongly == 0,
        std::to_string(e.level().size()) + " elements, " + std::to_string(strongly) + " strongly irreducible");

  auto found = find_short(inst.letters, Target::StronglyIrreducible);
  bool ok = found.certificate && found.certificate->classification.strongly_irreducible;
  r.add("a strongly irreducible element exists in some {g, h}^n", ok,
        ok ? "n = " + std::to_string(found.certificate->n()) : to_string(found.feasibility.reason));
  r.certificate = std::move(found.certificate);
  return r;
}

}  // namespace gpw

#endif  // GPW_SHARPNESS_HPP
