#ifndef GPW_TESTS_FIXTURES_HPP
#define GPW_TESTS_FIXTURES_HPP

#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gpw/gpw.hpp"
#include "gpw/oracles.hpp"

namespace fx {

using namespace gpw;

/// Graph from names and "a-b" edge strings.
inline Graph graph(const std::vector<std::string>& names, const std::vector<std::string>& edges = {}) {
  Graph g(names);
  for (const auto& e : edges) {
    auto dash = e.find('-');
    g.add_edge(g.vertex(e.substr(0, dash)), g.vertex(e.substr(dash + 1)));
  }
  return g;
}

inline Context context(const std::vector<std::string>& names, const std::vector<std::string>& edges = {},
                       std::vector<std::uint64_t> orders = {}) {
  std::vector<VertexGroup> groups;
  for (std::size_t i = 0; i < names.size(); ++i) {
    std::uint64_t n = i < orders.size() ? orders[i] : 0;
    groups.push_back(n ? VertexGroup::cyclic(n) : VertexGroup::infinite());
  }
  return make_context(graph(names, edges), std::move(groups));
}

/// The bipartite hexagon x_i ~ y_j (i != j), all groups Z.
inline Context hexagon() {
  return context({"x1", "x2", "x3", "y1", "y2", "y3"},
                 {"x1-y2", "x1-y3", "x2-y1", "x2-y3", "x3-y1", "x3-y2"});
}

inline Context free_group(std::vector<std::string> names = {"a", "b", "c"}) { return context(names); }

inline GroupElement w(const Context& ctx, const std::string& text) { return parse_word(ctx, text); }

inline VertexSet vs(const Context& ctx, const std::vector<std::string>& names) {
  VertexSet s(ctx->rank());
  for (const auto& n : names) s.insert(ctx->graph().vertex(n));
  return s;
}

inline oracle::RawWord raw(const GroupElement& g) {
  oracle::RawWord out;
  for (const auto& s : g.syllables()) out.push_back({s.vertex, s.exponent});
  return out;
}

inline oracle::RawWord raw(const std::vector<Syllable>& word) {
  oracle::RawWord out;
  for (const auto& s : word) out.push_back({s.vertex, s.exponent});
  return out;
}

inline oracle::Presentation presentation(const Context& ctx) { return {ctx->graph(), ctx->groups()}; }

// -- random instances --------------------------------------------------------

using Rng = std::mt19937_64;

inline Graph random_graph(Rng& rng, std::size_t n, double p) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
  Graph g(names);
  std::bernoulli_distribution edge(p);
  for (VertexId a = 0; a < n; ++a)
    for (VertexId b = a + 1; b < n; ++b)
      if (edge(rng)) g.add_edge(a, b);
  return g;
}

/// Random graph whose clique number is at most max_dim.
inline Graph random_graph_dim(Rng& rng, std::size_t n, double p, std::size_t max_dim) {
  for (;;) {
    Graph g = random_graph(rng, n, p);
    if (g.dim() <= max_dim) return g;
  }
}

/// Orders: 0 (Z) with probability 1 - torsion, else uniform in [2, max_order].
inline std::vector<VertexGroup> random_groups(Rng& rng, std::size_t n, double torsion, std::uint64_t max_order) {
  std::bernoulli_distribution finite(torsion);
  std::uniform_int_distribution<std::uint64_t> order(2, max_order);
  std::vector<VertexGroup> out;
  for (std::size_t i = 0; i < n; ++i)
    out.push_back(finite(rng) ? VertexGroup::cyclic(order(rng)) : VertexGroup::infinite());
  return out;
}

inline Context random_context(Rng& rng, std::size_t n, double p, double torsion = 0.0, std::uint64_t max_order = 6) {
  return make_context(random_graph(rng, n, p), random_groups(rng, n, torsion, max_order));
}

/// Raw syllable sequence (not reduced) of length in [min_len, max_len].
inline std::vector<Syllable> random_raw(Rng& rng, const GroupContext& ctx, std::size_t min_len, std::size_t max_len,
                                        Exponent max_exp = 2) {
  std::uniform_int_distribution<std::size_t> len(min_len, max_len);
  std::uniform_int_distribution<VertexId> vertex(0, ctx.rank() - 1);
  std::uniform_int_distribution<Exponent> exp(1, max_exp);
  std::bernoulli_distribution neg(0.5);
  std::vector<Syllable> out;
  for (std::size_t i = len(rng); i > 0; --i) {
    VertexId v = vertex(rng);
    Exponent e = exp(rng);
    if (neg(rng)) e = -e;
    if (ctx.group(v).is_identity(e)) e = 1;
    out.push_back({v, e});
  }
  return out;
}

inline GroupElement random_element(Rng& rng, const Context& ctx, std::size_t min_len, std::size_t max_len,
                                   Exponent max_exp = 2) {
  auto r = random_raw(rng, *ctx, min_len, max_len, max_exp);
  return reduce(ctx, r);
}

inline std::string describe(const GroupElement& g) { return format_word(g); }

inline std::string describe(const Graph& g) {
  std::ostringstream os;
  os << g.size() << " vertices, edges:";
  for (auto [a, b] : g.edges()) os << ' ' << g.name(a) << '-' << g.name(b);
  return os.str();
}

}  // namespace fx

#endif  // GPW_TESTS_FIXTURES_HPP
