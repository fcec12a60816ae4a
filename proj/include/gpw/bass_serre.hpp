#ifndef GPW_BASS_SERRE_HPP
#define GPW_BASS_SERRE_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "gpw/support.hpp"

namespace gpw {

// Actions on the Bass–Serre trees T_v of the splittings
// G = G_St(v) *_G_lk(v) G_{Γ∖v}. Nothing here builds a tree: the type of
// the action and the translation length are read off a cyclically reduced
// conjugate.

enum class TreeActionKind { Loxodromic, EllipticComplement, EllipticStarOnly };

inline const char* to_string(TreeActionKind k) {
  switch (k) {
    case TreeActionKind::Loxodromic: return "loxodromic";
    case TreeActionKind::EllipticComplement: return "elliptic-complement";
    case TreeActionKind::EllipticStarOnly: return "elliptic-star-only";
  }
  return "?";
}

struct TreeAction {
  TreeActionKind kind = TreeActionKind::EllipticComplement;
  std::size_t tau = 0;  // positive and even exactly when loxodromic
};

/// Translation length in T_v: twice the number of v-syllables of a cyclically
/// reduced conjugate when v ∈ acon(supp(g)), else 0.
///
/// Consecutive v-syllables (cyclically) are separated by at least one syllable
/// outside St(v), otherwise they would merge, so each v-syllable contributes
/// one star-type and one complement-type factor to the cyclic normal form in
/// the amalgam.
inline std::size_t translation_length(const GroupElement& g, VertexId v) {
  const auto& graph = g.context()->graph();
  auto core = cyclic_reduce(g).core;
  VertexSet supp = core.written_vertices();
  if (!supp.contains(v) || supp.is_subset_of(graph.star(v))) return 0;
  std::size_t count = 0;
  for (const auto& s : core.syllables())
    if (s.vertex == v) ++count;
  return 2 * count;
}

inline TreeAction tree_action(const GroupElement& g, VertexId v) {
  const auto& graph = g.context()->graph();
  VertexSet supp = support(g);
  if (!supp.contains(v)) return {TreeActionKind::EllipticComplement, 0};
  if (supp.is_subset_of(graph.star(v))) return {TreeActionKind::EllipticStarOnly, 0};
  return {TreeActionKind::Loxodromic, translation_length(g, v)};
}

inline bool is_loxodromic(const GroupElement& g, VertexId v) {
  return g.context()->graph().acon(support(g)).contains(v);
}

/// True when some irreducible component of g has order 2. Such a component
/// is a single vertex syllable of order 2: an irreducible component with
/// clique support has exactly one vertex.
inline bool has_order_two_component(const GroupElement& g) {
  const auto& ctx = *g.context();
  auto core = cyclic_reduce(g).core;
  for (const auto& factor : ctx.graph().join_factors(core.written_vertices())) {
    if (!ctx.graph().is_clique(factor)) continue;
    bool all_divide_two = true;
    for (const auto& s : core.syllables()) {
      if (!factor.contains(s.vertex)) continue;
      auto ord = ctx.group(s.vertex).element_order(s.exponent);
      if (!ord || 2 % *ord != 0) all_divide_two = false;
    }
    if (all_divide_two) return true;
  }
  return false;
}

using ExponentPair = std::pair<Exponent, Exponent>;

struct ExceptionalExponentReport {
  Exponent lo = 0;
  Exponent hi = 0;
  std::vector<ExponentPair> failures;
  std::size_t excluded = 0;  // pairs skipped because g^m or h^n has an order-2 component
  std::size_t cover_rows = 0;
  std::size_t cover_columns = 0;
  std::size_t cover_rays = 0;
};

namespace detail {

inline ExponentPair ray_of(ExponentPair p) {
  Exponent g = std::gcd(p.first, p.second);
  return {p.first / g, p.second / g};
}

}  // namespace detail

/// Greedy cover of a point set by rows (fixed m), columns (fixed n) and rays
/// m/n = const. Returns {rows, columns, rays}.
inline std::tuple<std::size_t, std::size_t, std::size_t> greedy_line_cover(std::vector<ExponentPair> points) {
  std::size_t rows = 0, cols = 0, rays = 0;
  while (!points.empty()) {
    std::map<Exponent, std::size_t> by_row, by_col;
    std::map<ExponentPair, std::size_t> by_ray;
    for (auto p : points) {
      ++by_row[p.first];
      ++by_col[p.second];
      ++by_ray[detail::ray_of(p)];
    }
    auto best = [](const auto& m) {
      return std::max_element(m.begin(), m.end(), [](auto& a, auto& b) { return a.second < b.second; });
    };
    auto r = best(by_row);
    auto c = best(by_col);
    auto y = best(by_ray);
    if (r->second >= c->second && r->second >= y->second) {
      ++rows;
      std::erase_if(points, [&](auto p) { return p.first == r->first; });
    } else if (c->second >= y->second) {
      ++cols;
      std::erase_if(points, [&](auto p) { return p.second == c->first; });
    } else {
      ++rays;
      auto ray = y->first;
      std::erase_if(points, [&](auto p) { return detail::ray_of(p) == ray; });
    }
  }
  return {rows, cols, rays};
}

/// Exact test: can the points be covered by at most `max_rows` rows,
/// `max_cols` columns and `max_rays` rays through the origin?
inline bool line_cover_fits(const std::vector<ExponentPair>& points, std::size_t max_rows,
                            std::size_t max_cols, std::size_t max_rays) {
  if (points.empty()) return true;
  std::vector<ExponentPair> ray_list;
  {
    std::set<ExponentPair> s;
    for (auto p : points) s.insert(detail::ray_of(p));
    ray_list.assign(s.begin(), s.end());
  }
  auto rows_then_cols = [&](const std::vector<ExponentPair>& pts) {
    std::set<Exponent> row_set;
    for (auto p : pts) row_set.insert(p.first);
    std::vector<Exponent> row_list(row_set.begin(), row_set.end());
    std::vector<Exponent> chosen;
    // Depth-first over row subsets of size <= max_rows.
    auto dfs = [&](auto&& self, std::size_t start) -> bool {
      std::set<Exponent> cols;
      for (auto p : pts)
        if (std::find(chosen.begin(), chosen.end(), p.first) == chosen.end()) cols.insert(p.second);
      if (cols.size() <= max_cols) return true;
      if (chosen.size() == max_rows) return false;
      for (std::size_t i = start; i < row_list.size(); ++i) {
        chosen.push_back(row_list[i]);
        if (self(self, i + 1)) return true;
        chosen.pop_back();
      }
      return false;
    };
    return dfs(dfs, 0);
  };
  std::vector<ExponentPair> chosen_rays;
  auto dfs = [&](auto&& self, std::size_t start) -> bool {
    std::vector<ExponentPair> rest;
    for (auto p : points)
      if (std::find(chosen_rays.begin(), chosen_rays.end(), detail::ray_of(p)) == chosen_rays.end())
        rest.push_back(p);
    if (rows_then_cols(rest)) return true;
    if (chosen_rays.size() == max_rays) return false;
    for (std::size_t i = start; i < ray_list.size(); ++i) {
      chosen_rays.push_back(ray_list[i]);
      if (self(self, i + 1)) return true;
      chosen_rays.pop_back();
    }
    return false;
  };
  return dfs(dfs, 0);
}

/// Scans (m, n) ∈ [lo, hi]² for pairs where g^m h^n loses part of
/// acon(stsupp(g) ∪ stsupp(h)) from its aconical stable support. Pairs where
/// g^m or h^n has an order-2 irreducible component are excluded.
inline ExceptionalExponentReport exceptional_exponents(const GroupElement& g, const GroupElement& h, Exponent lo,
                                                       Exponent hi) {
  require_same_context(g, h);
  const auto& graph = g.context()->graph();
  ExceptionalExponentReport r;
  r.lo = lo;
  r.hi = hi;
  if (lo > hi) return r;
  VertexSet target = graph.acon(stable_support(g) | stable_support(h));
  std::vector<GroupElement> gp, hp;
  std::vector<bool> g_bad, h_bad;
  GroupElement gm = power(g, lo), hn = power(h, lo);
  for (Exponent k = lo; k <= hi; ++k) {
    gp.push_back(gm);
    hp.push_back(hn);
    g_bad.push_back(has_order_two_component(gm));
    h_bad.push_back(has_order_two_component(hn));
    gm = gm * g;
    hn = hn * h;
  }
  for (Exponent m = lo; m <= hi; ++m) {
    for (Exponent n = lo; n <= hi; ++n) {
      auto i = static_cast<std::size_t>(m - lo), j = static_cast<std::size_t>(n - lo);
      if (g_bad[i] || h_bad[j]) {
        ++r.excluded;
        continue;
      }
      if (!target.is_subset_of(graph.acon(stable_support(gp[i] * hp[j])))) r.failures.emplace_back(m, n);
    }
  }
  std::tie(r.cover_rows, r.cover_columns, r.cover_rays) = greedy_line_cover(r.failures);
  return r;
}

/// Lower end of the window where the combination guarantee applies: 4·dim + 5.
inline Exponent exceptional_window_floor(const GroupContext& ctx) {
  return static_cast<Exponent>(4 * ctx.dim() + 5);
}

}  // namespace gpw

#endif  // GPW_BASS_SERRE_HPP
