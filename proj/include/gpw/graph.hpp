#ifndef GPW_GRAPH_HPP
#define GPW_GRAPH_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gpw/vertex_set.hpp"

namespace gpw {

/// A nontrivial partition of a vertex set into two mutually adjacent halves.
struct JoinSplit {
  VertexSet a;
  VertexSet b;
};

/// Finite simplicial graph with named vertices.
///
/// Vertex indices follow declaration order; that order also seeds the
/// canonical forms of group elements.
class Graph {
public:
  Graph() = default;

  explicit Graph(std::vector<std::string> names) : names_(std::move(names)) {
    for (VertexId v = 0; v < names_.size(); ++v) {
      if (!index_.emplace(names_[v], v).second)
        throw std::invalid_argument("duplicate vertex '" + names_[v] + "'");
      adj_.emplace_back(names_.size());
    }
  }

  Graph(std::vector<std::string> names, const std::vector<std::pair<VertexId, VertexId>>& edges)
      : Graph(std::move(names)) {
    for (auto [u, v] : edges) add_edge(u, v);
  }

  void add_edge(VertexId u, VertexId v) {
    check(u);
    check(v);
    if (u == v) throw std::invalid_argument("loop edge at '" + names_[u] + "'");
    adj_[u].insert(v);
    adj_[v].insert(u);
  }

  std::size_t size() const { return names_.size(); }
  const std::string& name(VertexId v) const {
    check(v);
    return names_[v];
  }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<VertexId> find(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  VertexId vertex(const std::string& name) const {
    auto v = find(name);
    if (!v) throw std::invalid_argument("unknown vertex '" + name + "'");
    return *v;
  }

  bool adjacent(VertexId u, VertexId v) const {
    check(u);
    return adj_[u].contains(v);
  }

  VertexSet empty_set() const { return VertexSet(size()); }
  VertexSet all() const { return VertexSet::full(size()); }

  const VertexSet& link(VertexId v) const {
    check(v);
    return adj_[v];
  }
  VertexSet star(VertexId v) const {
    VertexSet s = link(v);
    s.insert(v);
    return s;
  }

  /// Vertices adjacent to every member of `set`; the whole graph for the empty set.
  VertexSet perp(const VertexSet& set) const {
    VertexSet out = all();
    set.for_each([&](VertexId v) { out &= adj_[v]; });
    return out;
  }

  /// Members v of `set` with set ⊆ St(v).
  VertexSet cone_vertices(const VertexSet& set) const {
    VertexSet out(size());
    set.for_each([&](VertexId v) {
      if (set.is_subset_of(star(v))) out.insert(v);
    });
    return out;
  }

  /// Aconical part: `set` minus its cone vertices.
  VertexSet acon(const VertexSet& set) const { return set - cone_vertices(set); }

  bool is_clique(const VertexSet& set) const {
    bool ok = true;
    set.for_each([&](VertexId v) {
      if (ok && !(set - star(v)).empty()) ok = false;
    });
    return ok;
  }

  /// Connected components of the opposite graph restricted to `set`, each
  /// listed once and ordered by smallest member. These are the join factors.
  std::vector<VertexSet> join_factors(const VertexSet& set) const {
    std::vector<VertexSet> out;
    VertexSet remaining = set;
    while (!remaining.empty()) {
      VertexSet comp(size());
      std::vector<VertexId> stack{remaining.front()};
      comp.insert(stack.back());
      remaining.erase(stack.back());
      while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        VertexSet next = remaining - adj_[v];
        next.for_each([&](VertexId w) {
          comp.insert(w);
          stack.push_back(w);
        });
        remaining -= next;
      }
      out.push_back(std::move(comp));
    }
    return out;
  }

  /// A = the join factor holding the smallest vertex, B = everything else.
  std::optional<JoinSplit> join_split(const VertexSet& set) const {
    auto factors = join_factors(set);
    if (factors.size() < 2) return std::nullopt;
    return JoinSplit{factors.front(), set - factors.front()};
  }

  /// Largest clique cardinality.
  std::size_t dim() const {
    std::size_t best = 0;
    clique_expand(all(), 0, best);
    return best;
  }

  /// Length of the shortest cycle; nullopt for forests.
  std::optional<std::size_t> girth() const {
    std::optional<std::size_t> best;
    const std::size_t none = size();
    for (VertexId root = 0; root < size(); ++root) {
      std::vector<std::size_t> dist(size(), none), parent(size(), none);
      std::queue<VertexId> q;
      dist[root] = 0;
      q.push(root);
      while (!q.empty()) {
        VertexId u = q.front();
        q.pop();
        adj_[u].for_each([&](VertexId w) {
          if (dist[w] == none) {
            dist[w] = dist[u] + 1;
            parent[w] = u;
            q.push(w);
          } else if (parent[u] != w) {
            std::size_t len = dist[u] + dist[w] + 1;
            if (!best || len < *best) best = len;
          }
        });
      }
    }
    return best;
  }

  /// Same vertices, complementary edge set.
  Graph opposite() const {
    Graph g(names_);
    for (VertexId u = 0; u < size(); ++u)
      for (VertexId v = u + 1; v < size(); ++v)
        if (!adjacent(u, v)) g.add_edge(u, v);
    return g;
  }

  /// Full subgraph on `set`, vertices renumbered in increasing order.
  Graph induced(const VertexSet& set) const {
    auto members = set.members();
    std::vector<std::string> names;
    for (auto v : members) names.push_back(names_[v]);
    Graph g(std::move(names));
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j)
        if (adjacent(members[i], members[j])) g.add_edge(i, j);
    return g;
  }

  std::vector<std::pair<VertexId, VertexId>> edges() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    for (VertexId u = 0; u < size(); ++u)
      adj_[u].for_each([&](VertexId v) {
        if (u < v) out.emplace_back(u, v);
      });
    return out;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.names_ == b.names_ && a.adj_ == b.adj_;
  }

private:
  void check(VertexId v) const {
    if (v >= names_.size()) throw std::out_of_range("vertex index outside the graph");
  }

  // Branch and bound with a greedy colouring bound.
  void clique_expand(VertexSet cand, std::size_t depth, std::size_t& best) const {
    if (cand.empty()) {
      best = std::max(best, depth);
      return;
    }
    std::vector<std::pair<VertexId, std::size_t>> coloured;
    VertexSet uncoloured = cand;
    std::size_t colour = 0;
    while (!uncoloured.empty()) {
      ++colour;
      VertexSet avail = uncoloured;
      while (!avail.empty()) {
        VertexId v = avail.front();
        avail.erase(v);
        avail -= adj_[v];
        uncoloured.erase(v);
        coloured.emplace_back(v, colour);
      }
    }
    for (auto it = coloured.rbegin(); it != coloured.rend(); ++it) {
      if (depth + it->second <= best) return;
      clique_expand(cand & adj_[it->first], depth + 1, best);
      cand.erase(it->first);
    }
  }

  std::vector<std::string> names_;
  std::unordered_map<std::string, VertexId> index_;
  std::vector<VertexSet> adj_;
};

}  // namespace gpw

#endif  // GPW_GRAPH_HPP
