#ifndef GPW_WORD_HPP
#define GPW_WORD_HPP

#include <compare>
#include <cstddef>
#include <functional>
#include <memory>
#include <mutex>
#include <queue>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gpw/coefficients.hpp"
#include "gpw/graph.hpp"
#include "gpw/vertex_set.hpp"

namespace gpw {

/// A nonidentity element of one vertex group.
struct Syllable {
  VertexId vertex = 0;
  Exponent exponent = 0;

  friend auto operator<=>(const Syllable&, const Syllable&) = default;
};

/// The ambient graph product: a graph plus one cyclic group per vertex.
class GroupContext {
public:
  GroupContext(Graph graph, std::vector<VertexGroup> groups)
      : graph_(std::move(graph)), groups_(std::move(groups)) {
    if (groups_.size() != graph_.size())
      throw std::invalid_argument("every vertex needs a vertex group");
    noncommuting_.resize(graph_.size());
    for (VertexId v = 0; v < graph_.size(); ++v)
      for (VertexId u = 0; u < graph_.size(); ++u)
        if (u == v || !graph_.adjacent(u, v)) noncommuting_[v].push_back(u);
  }

  GroupContext(const GroupContext&) = delete;
  GroupContext& operator=(const GroupContext&) = delete;

  const Graph& graph() const { return graph_; }
  std::size_t rank() const { return graph_.size(); }
  const VertexGroup& group(VertexId v) const { return groups_.at(v); }
  const std::vector<VertexGroup>& groups() const { return groups_; }

  /// Vertices that fail to commute with v, v included.
  const std::vector<VertexId>& noncommuting(VertexId v) const { return noncommuting_[v]; }

  /// Clique number of the graph, computed once.
  std::size_t dim() const {
    std::call_once(dim_once_, [this] { dim_ = graph_.dim(); });
    return dim_;
  }

  bool torsion_free() const {
    for (const auto& g : groups_)
      if (g.is_finite()) return false;
    return true;
  }
  bool has_two_torsion() const {
    for (const auto& g : groups_)
      if (g.is_finite() && g.order % 2 == 0) return true;
    return false;
  }
  bool all_finite(const VertexSet& set) const {
    bool ok = true;
    set.for_each([&](VertexId v) { ok = ok && groups_[v].is_finite(); });
    return ok;
  }

private:
  Graph graph_;
  std::vector<VertexGroup> groups_;
  std::vector<std::vector<VertexId>> noncommuting_;
  mutable std::once_flag dim_once_;
  mutable std::size_t dim_ = 0;
};

using Context = std::shared_ptr<const GroupContext>;

inline Context make_context(Graph graph, std::vector<VertexGroup> groups) {
  return std::make_shared<const GroupContext>(std::move(graph), std::move(groups));
}

namespace detail {

/// Multiplies a reduced word on the right by one syllable, keeping it reduced.
///
/// The only possible merge partner is the last syllable on `v` that can be
/// shuffled to the end; deleting a syllable from a reduced word that can be
/// moved to the end leaves a reduced word, so no further cascade occurs.
inline void append_reduced(const GroupContext& ctx, std::vector<Syllable>& word, Syllable s) {
  const auto& group = ctx.group(s.vertex);
  s.exponent = group.normalize(s.exponent);
  if (s.exponent == 0) return;
  const auto& link = ctx.graph().link(s.vertex);
  for (std::size_t j = word.size(); j-- > 0;) {
    if (word[j].vertex == s.vertex) {
      if (auto merged = group.compose(word[j].exponent, s.exponent))
        word[j].exponent = *merged;
      else
        word.erase(word.begin() + static_cast<std::ptrdiff_t>(j));
      return;
    }
    if (!link.contains(word[j].vertex)) break;
  }
  word.push_back(s);
}

/// Lexicographically least shuffle of a reduced word: repeatedly emit the
/// smallest vertex among syllables that commute with everything before them.
inline std::vector<Syllable> canonicalize(const GroupContext& ctx, const std::vector<Syllable>& word) {
  const std::size_t k = word.size();
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::vector<std::size_t>> succ(k);
  std::vector<std::size_t> indegree(k, 0);
  std::vector<std::size_t> last(ctx.rank(), none);
  for (std::size_t i = 0; i < k; ++i) {
    const VertexId v = word[i].vertex;
    for (VertexId u : ctx.noncommuting(v)) {
      if (last[u] != none) {
        succ[last[u]].push_back(i);
        ++indegree[i];
      }
    }
    last[v] = i;
  }
  using Entry = std::pair<VertexId, std::size_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> ready;
  for (std::size_t i = 0; i < k; ++i)
    if (indegree[i] == 0) ready.emplace(word[i].vertex, i);
  std::vector<Syllable> out;
  out.reserve(k);
  while (!ready.empty()) {
    auto [v, i] = ready.top();
    ready.pop();
    out.push_back(word[i]);
    for (auto j : succ[i])
      if (--indegree[j] == 0) ready.emplace(word[j].vertex, j);
  }
  return out;
}

}  // namespace detail

/// An element of the graph product, held as its canonical reduced word.
class GroupElement {
public:
  GroupElement() = default;

  static GroupElement identity(Context ctx) { return GroupElement(std::move(ctx), {}); }

  const Context& context() const { return ctx_; }
  const std::vector<Syllable>& syllables() const { return syllables_; }
  std::size_t length() const { return syllables_.size(); }
  bool is_identity() const { return syllables_.empty(); }

  /// Vertices occurring in the reduced word (not conjugation invariant).
  VertexSet written_vertices() const {
    VertexSet s(ctx_ ? ctx_->rank() : 0);
    for (const auto& x : syllables_) s.insert(x.vertex);
    return s;
  }

  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    if (a.ctx_ != b.ctx_) throw std::invalid_argument("elements of different graph products");
    return a.syllables_ == b.syllables_;
  }

  std::size_t hash() const {
    std::size_t h = syllables_.size();
    for (const auto& s : syllables_)
      h = (h * 0x100000001b3ULL) ^ (s.vertex * 0x9e3779b97f4a7c15ULL + static_cast<std::size_t>(s.exponent));
    return h;
  }

private:
  friend GroupElement from_canonical(Context, std::vector<Syllable>);
  GroupElement(Context ctx, std::vector<Syllable> canonical)
      : ctx_(std::move(ctx)), syllables_(std::move(canonical)) {}

  Context ctx_;
  std::vector<Syllable> syllables_;
};

/// Wraps a word already known to be reduced and canonical.
inline GroupElement from_canonical(Context ctx, std::vector<Syllable> canonical) {
  return GroupElement(std::move(ctx), std::move(canonical));
}

/// Reduced, canonical element represented by an arbitrary syllable sequence.
inline GroupElement reduce(const Context& ctx, std::span<const Syllable> raw) {
  std::vector<Syllable> word;
  word.reserve(raw.size());
  for (const auto& s : raw) {
    if (s.vertex >= ctx->rank()) throw std::out_of_range("syllable on unknown vertex");
    detail::append_reduced(*ctx, word, s);
  }
  return from_canonical(ctx, detail::canonicalize(*ctx, word));
}

inline GroupElement generator(const Context& ctx, VertexId v, Exponent e = 1) {
  Syllable s{v, e};
  return reduce(ctx, std::span<const Syllable>(&s, 1));
}

inline const std::vector<Syllable>& canonical_form(const GroupElement& g) { return g.syllables(); }

inline bool equal(const GroupElement& g, const GroupElement& h) { return g == h; }

inline void require_same_context(const GroupElement& g, const GroupElement& h) {
  if (g.context() != h.context()) throw std::invalid_argument("elements of different graph products");
}

inline GroupElement multiply(const GroupElement& g, const GroupElement& h) {
  require_same_context(g, h);
  const auto& ctx = *g.context();
  std::vector<Syllable> word = g.syllables();
  for (const auto& s : h.syllables()) detail::append_reduced(ctx, word, s);
  return from_canonical(g.context(), detail::canonicalize(ctx, word));
}

inline GroupElement operator*(const GroupElement& g, const GroupElement& h) { return multiply(g, h); }

inline GroupElement invert(const GroupElement& g) {
  const auto& ctx = *g.context();
  std::vector<Syllable> word(g.syllables().rbegin(), g.syllables().rend());
  for (auto& s : word) s.exponent = ctx.group(s.vertex).inverse(s.exponent);
  return from_canonical(g.context(), detail::canonicalize(ctx, word));
}

inline GroupElement power(const GroupElement& g, Exponent n) {
  GroupElement base = n < 0 ? invert(g) : g;
  std::uint64_t e = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
  GroupElement acc = GroupElement::identity(g.context());
  while (e) {
    if (e & 1u) acc = multiply(acc, base);
    e >>= 1;
    if (e) base = multiply(base, base);
  }
  return acc;
}

struct CyclicReduction {
  GroupElement core;
  GroupElement conjugator;  // g = conjugator * core * conjugator^-1
};

/// Shortest conjugate of g, with the conjugator that realises it.
///
/// While some vertex has a front-movable syllable s and a different
/// back-movable syllable, replace the word by s^-1 w s. Ties go to the
/// smallest vertex.
inline CyclicReduction cyclic_reduce(const GroupElement& g) {
  const auto& ctx = *g.context();
  const auto& graph = ctx.graph();
  std::vector<Syllable> word = g.syllables();
  std::vector<Syllable> conj;
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  for (;;) {
    const std::size_t k = word.size();
    std::vector<std::size_t> front(ctx.rank(), none), back(ctx.rank(), none);
    VertexSet seen(ctx.rank());
    for (std::size_t i = 0; i < k; ++i) {
      VertexId v = word[i].vertex;
      if (seen.is_subset_of(graph.link(v))) front[v] = i;
      seen.insert(v);
    }
    seen = VertexSet(ctx.rank());
    for (std::size_t i = k; i-- > 0;) {
      VertexId v = word[i].vertex;
      if (seen.is_subset_of(graph.link(v))) back[v] = i;
      seen.insert(v);
    }
    std::size_t chosen = none;
    for (VertexId v = 0; v < ctx.rank(); ++v) {
      if (front[v] != none && back[v] != none && front[v] != back[v]) {
        chosen = front[v];
        break;
      }
    }
    if (chosen == none) break;
    Syllable s = word[chosen];
    word.erase(word.begin() + static_cast<std::ptrdiff_t>(chosen));
    detail::append_reduced(ctx, word, s);
    conj.push_back(s);
  }
  return {from_canonical(g.context(), detail::canonicalize(ctx, word)), reduce(g.context(), conj)};
}

}  // namespace gpw

template <>
struct std::hash<gpw::GroupElement> {
  std::size_t operator()(const gpw::GroupElement& g) const { return g.hash(); }
};

#endif  // GPW_WORD_HPP
