#ifndef GPW_SUPPORT_HPP
#define GPW_SUPPORT_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "gpw/word.hpp"

namespace gpw {

/// Essential support: vertices of a cyclically reduced conjugate.
inline VertexSet support(const GroupElement& g) { return cyclic_reduce(g).core.written_vertices(); }

/// pi_v(g) for a cone vertex v of supp(g), as an exponent (0 = identity).
///
/// Every other vertex of the core lies in lk(v), so the core carries a
/// single v-syllable and its exponent is the projection.
inline Exponent projection(const GroupElement& g, VertexId v) {
  const auto& ctx = *g.context();
  auto core = cyclic_reduce(g).core;
  VertexSet supp = core.written_vertices();
  if (!supp.contains(v) || !supp.is_subset_of(ctx.graph().star(v)))
    throw std::invalid_argument("vertex '" + ctx.graph().name(v) + "' is not a cone vertex of the support");
  Exponent out = 0;
  for (const auto& s : core.syllables())
    if (s.vertex == v) out = ctx.group(v).compose(out, s.exponent).value_or(0);
  return out;
}

/// supp(g) minus the cone vertices whose projection has finite order.
inline VertexSet stable_support(const GroupElement& g) {
  const auto& ctx = *g.context();
  VertexSet supp = support(g);
  VertexSet out = supp;
  ctx.graph().cone_vertices(supp).for_each([&](VertexId v) {
    if (ctx.group(v).is_finite()) out.erase(v);
  });
  return out;
}

/// Irreducible components ordered by smallest support vertex; their product
/// (in any order) is g.
inline std::vector<GroupElement> irreducible_components(const GroupElement& g) {
  const auto& ctx = g.context();
  auto [core, conj] = cyclic_reduce(g);
  auto conj_inv = invert(conj);
  std::vector<GroupElement> out;
  for (const auto& factor : ctx->graph().join_factors(core.written_vertices())) {
    std::vector<Syllable> part;
    for (const auto& s : core.syllables())
      if (factor.contains(s.vertex)) part.push_back(s);
    out.push_back(conj * reduce(ctx, part) * conj_inv);
  }
  return out;
}

struct SupportReport {
  VertexSet supp;
  VertexSet cone;    // cone vertices of supp
  VertexSet finite;  // cone vertices with finite-order projection
  VertexSet stsupp;
  std::vector<GroupElement> components;
  bool irreducible = false;
  bool stably_irreducible = false;
  bool strongly_irreducible = false;
  bool regular = false;
};

/// Strong irreducibility of an element with support `supp`: at least two
/// vertices, no join splitting, and empty perp. By parabolic containment
/// supp ⊆ A*B for a join A*B exactly when supp itself splits or some vertex
/// outside supp is adjacent to all of it.
inline bool strongly_irreducible_support(const Graph& graph, const VertexSet& supp) {
  return supp.size() >= 2 && !graph.join_split(supp) && graph.perp(supp).empty();
}

/// Regularity from a stable support: at least two vertices, no join splitting,
/// and perp a clique of finite vertex groups.
inline bool regular_stable_support(const GroupContext& ctx, const VertexSet& stsupp) {
  const auto& graph = ctx.graph();
  if (stsupp.size() < 2 || graph.join_split(stsupp)) return false;
  VertexSet p = graph.perp(stsupp);
  return graph.is_clique(p) && ctx.all_finite(p);
}

inline SupportReport classify(const GroupElement& g) {
  const auto& ctx = *g.context();
  const auto& graph = ctx.graph();
  SupportReport r;
  r.supp = support(g);
  r.cone = graph.cone_vertices(r.supp);
  r.finite = VertexSet(ctx.rank());
  r.cone.for_each([&](VertexId v) {
    if (ctx.group(v).is_finite()) r.finite.insert(v);
  });
  r.stsupp = r.supp - r.finite;
  r.components = irreducible_components(g);
  r.irreducible = !r.supp.empty() && !graph.join_split(r.supp);
  r.stably_irreducible = !r.stsupp.empty() && !graph.join_split(r.stsupp);
  r.strongly_irreducible = strongly_irreducible_support(graph, r.supp);
  r.regular = regular_stable_support(ctx, r.stsupp);
  return r;
}

inline bool is_strongly_irreducible(const GroupElement& g) {
  return strongly_irreducible_support(g.context()->graph(), support(g));
}
inline bool is_regular(const GroupElement& g) { return regular_stable_support(*g.context(), stable_support(g)); }

struct SetSupport {
  VertexSet supp;
  VertexSet acon;
};

/// supp(U) and acon(supp(U)) from the elements of U and U².
///
/// Each x in ⟨U⟩ satisfies supp(x) ⊆ supp(U) by parabolic containment, so the
/// union is a lower bound. Conversely every v in acon(supp(U)) is loxodromic
/// in the tree T_v for some x ∈ U², since a finitely generated subgroup that
/// is not elliptic has a loxodromic generator or two generators with
/// disjoint fixed sets; and every cone vertex of supp(U) lies in supp(u) for
/// some u ∈ U. A vertex in acon(supp(x)) always stays aconical in supp(U).
inline SetSupport support_of_set(const std::vector<GroupElement>& U) {
  if (U.empty()) return {};
  const auto& ctx = U.front().context();
  const auto& graph = ctx->graph();
  SetSupport out{VertexSet(ctx->rank()), VertexSet(ctx->rank())};
  auto absorb = [&](const GroupElement& x) {
    VertexSet s = support(x);
    out.supp |= s;
    out.acon |= graph.acon(s);
  };
  for (const auto& u : U) absorb(u);
  for (const auto& u : U)
    for (const auto& w : U) absorb(u * w);
  return out;
}

inline VertexSet acon_support_of_set(const std::vector<GroupElement>& U) { return support_of_set(U).acon; }

}  // namespace gpw

#endif  // GPW_SUPPORT_HPP
