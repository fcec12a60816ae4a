#ifndef GPW_ORACLES_HPP
#define GPW_ORACLES_HPP

// Deliberately naive reference implementations. Nothing here calls into the
// word, support or search layers: words are plain letter vectors and every
// reduction is done by exhaustive pair scanning.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gpw/coefficients.hpp"
#include "gpw/graph.hpp"
#include "gpw/vertex_set.hpp"

namespace gpw::oracle {

struct Letter {
  VertexId v = 0;
  Exponent e = 0;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

using RawWord = std::vector<Letter>;

struct Presentation {
  const Graph& graph;
  const std::vector<VertexGroup>& groups;
};

inline bool commute(const Presentation& p, VertexId a, VertexId b) { return a != b && p.graph.adjacent(a, b); }

/// Fixpoint of: merge w[i], w[j] on the same vertex when everything strictly
/// between them commutes with that vertex.
inline RawWord naive_reduce(const Presentation& p, RawWord w) {
  RawWord clean;
  for (auto l : w) {
    l.e = p.groups.at(l.v).normalize(l.e);
    if (l.e != 0) clean.push_back(l);
  }
  w = std::move(clean);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < w.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < w.size() && !changed; ++j) {
        if (w[j].v != w[i].v) {
          if (!commute(p, w[j].v, w[i].v)) break;
          continue;
        }
        auto merged = p.groups[w[i].v].compose(w[i].e, w[j].e);
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(j));
        if (merged)
          w[i].e = *merged;
        else
          w.erase(w.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
      }
    }
  }
  return w;
}

inline RawWord naive_inverse(const Presentation& p, const RawWord& w) {
  RawWord out(w.rbegin(), w.rend());
  for (auto& l : out) l.e = p.groups.at(l.v).inverse(l.e);
  return out;
}

inline RawWord concat(RawWord a, const RawWord& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

inline RawWord naive_power(const Presentation& p, const RawWord& w, std::size_t n) {
  RawWord out;
  for (std::size_t i = 0; i < n; ++i) out = naive_reduce(p, concat(std::move(out), w));
  return out;
}

inline VertexSet letters_of(const Presentation& p, const RawWord& w) {
  VertexSet s(p.graph.size());
  for (const auto& l : w) s.insert(l.v);
  return s;
}

/// Breadth-first search from w1 over adjacent commuting swaps and adjacent
/// merges. nullopt when more than `budget` states were visited.
inline std::optional<bool> shuffle_equal(const Presentation& p, const RawWord& w1, const RawWord& w2,
                                         std::size_t budget = 200000) {
  if (w1.size() != w2.size()) return false;
  std::set<RawWord> seen{w1};
  std::deque<RawWord> queue{w1};
  while (!queue.empty()) {
    RawWord w = std::move(queue.front());
    queue.pop_front();
    if (w == w2) return true;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      RawWord next = w;
      if (w[i].v == w[i + 1].v) {
        auto merged = p.groups[w[i].v].compose(w[i].e, w[i + 1].e);
        next.erase(next.begin() + static_cast<std::ptrdiff_t>(i) + 1);
        if (merged)
          next[i].e = *merged;
        else
          next.erase(next.begin() + static_cast<std::ptrdiff_t>(i));
      } else if (commute(p, w[i].v, w[i + 1].v)) {
        std::swap(next[i], next[i + 1]);
      } else {
        continue;
      }
      if (seen.insert(next).second) {
        if (seen.size() > budget) return std::nullopt;
        queue.push_back(std::move(next));
      }
    }
  }
  return false;
}

/// A shortest conjugate found by conjugating with single letters of the
/// current word: take any strictly shorter result and restart; once none is
/// shorter, explore up to `plateau` equal-length conjugates looking for one
/// that is.
inline RawWord min_conjugate(const Presentation& p, const RawWord& w, std::size_t plateau = 16) {
  auto neighbours = [&](const RawWord& cur, auto&& visit) {
    for (std::size_t i = 0; i < cur.size(); ++i)
      for (Exponent sign : {1, -1}) {
        Letter s{cur[i].v, sign * cur[i].e};
        Letter s_inv{s.v, p.groups[s.v].inverse(s.e)};
        if (visit(naive_reduce(p, concat(concat({s_inv}, cur), {s})))) return true;
      }
    return false;
  };
  RawWord best = naive_reduce(p, w);
  for (;;) {
    RawWord shorter;
    auto take_shorter = [&](RawWord next) {
      if (next.size() >= best.size()) return false;
      shorter = std::move(next);
      return true;
    };
    if (neighbours(best, take_shorter)) {
      best = std::move(shorter);
      continue;
    }
    std::set<RawWord> seen{best};
    std::deque<RawWord> queue{best};
    bool found = false;
    while (!queue.empty() && !found) {
      RawWord cur = std::move(queue.front());
      queue.pop_front();
      found = neighbours(cur, [&](RawWord next) {
        if (next.size() < best.size()) return take_shorter(std::move(next));
        if (next.size() == best.size() && seen.size() < plateau && seen.insert(next).second)
          queue.push_back(std::move(next));
        return false;
      });
    }
    if (!found) return best;
    best = std::move(shorter);
  }
}

inline VertexSet brute_support(const Presentation& p, const RawWord& w) { return letters_of(p, min_conjugate(p, w)); }

/// ∩_{n=1..n_max} supp(w^n).
/// Powers are taken of a shortest conjugate of w, which has the same
/// supports since (c w c^-1)^n = c w^n c^-1.
inline VertexSet brute_stable_support(const Presentation& p, const RawWord& w, std::size_t n_max) {
  VertexSet out = VertexSet::full(p.graph.size());
  const RawWord base = min_conjugate(p, w);
  RawWord pw;
  for (std::size_t n = 1; n <= n_max; ++n) {
    pw = naive_reduce(p, concat(std::move(pw), base));
    out &= brute_support(p, pw);
  }
  return out;
}

/// Smallest vertex union of c^-1 u c over u ∈ U, minimized over conjugators c
/// of at most L letters drawn from the letters of U, their inverses and all
/// residues of finite vertex groups occurring in U.
inline VertexSet brute_support_set(const Presentation& p, const std::vector<RawWord>& U, std::size_t L) {
  std::set<Letter> alphabet_set;
  for (const auto& u : U)
    for (const auto& l : u) {
      const auto& grp = p.groups[l.v];
      if (grp.is_finite()) {
        for (std::uint64_t r = 1; r < grp.order; ++r) alphabet_set.insert({l.v, static_cast<Exponent>(r)});
      } else {
        alphabet_set.insert({l.v, l.e});
        alphabet_set.insert({l.v, -l.e});
      }
    }
  std::vector<Letter> alphabet(alphabet_set.begin(), alphabet_set.end());
  VertexSet best = VertexSet::full(p.graph.size());
  bool have = false;
  RawWord c;
  auto visit = [&]() {
    RawWord c_inv = naive_inverse(p, c);
    VertexSet s(p.graph.size());
    for (const auto& u : U) s |= letters_of(p, naive_reduce(p, concat(concat(c_inv, u), c)));
    if (!have || s.size() < best.size()) {
      best = s;
      have = true;
    }
  };
  auto dfs = [&](auto&& self, std::size_t depth) -> void {
    visit();
    if (depth == L) return;
    for (const auto& a : alphabet) {
      c.push_back(a);
      self(self, depth + 1);
      c.pop_back();
    }
  };
  dfs(dfs, 0);
  return best;
}

/// |U^n| by enumerating all letter sequences and comparing reduced words with
/// shuffle_equal inside buckets of equal letter multiset.
inline std::optional<std::size_t> naive_product_set(const Presentation& p, const std::vector<RawWord>& U,
                                                    std::size_t n, std::size_t budget = 200000) {
  if (U.empty()) return 0;
  std::map<RawWord, std::vector<RawWord>> buckets;
  std::size_t count = 0, visited = 0;
  std::vector<std::size_t> idx(n, 0);
  for (;;) {
    if (++visited > budget) return std::nullopt;
    RawWord w;
    for (auto i : idx) w = concat(std::move(w), U[i]);
    w = naive_reduce(p, std::move(w));
    RawWord key = w;
    std::sort(key.begin(), key.end());
    auto& bucket = buckets[key];
    bool found = false;
    for (const auto& r : bucket) {
      auto eq = shuffle_equal(p, r, w);
      if (!eq) return std::nullopt;
      if (*eq) {
        found = true;
        break;
      }
    }
    if (!found) {
      bucket.push_back(std::move(w));
      ++count;
    }
    std::size_t k = 0;
    while (k < n && ++idx[k] == U.size()) idx[k++] = 0;
    if (k == n) break;
  }
  return count;
}

/// Join partition of `set` by enumerating bipartitions (small sets only).
inline bool brute_has_join_split(const Graph& g, const VertexSet& set) {
  auto m = set.members();
  if (m.size() < 2 || m.size() > 20) {
    if (m.size() > 20) throw std::invalid_argument("brute_has_join_split is limited to 20 vertices");
    return false;
  }
  const std::uint64_t top = std::uint64_t{1} << (m.size() - 1);
  for (std::uint64_t mask = 1; mask < top; ++mask) {
    // Vertex m.back() always on side B, so each split is visited once.
    bool ok = true;
    for (std::size_t i = 0; i < m.size() && ok; ++i)
      for (std::size_t j = 0; j < m.size() && ok; ++j)
        if (((mask >> i) & 1) && !((mask >> j) & 1) && !g.adjacent(m[i], m[j])) ok = false;
    if (ok) return true;
  }
  return false;
}

/// Clique number by subset enumeration (at most 20 vertices).
inline std::size_t brute_dim(const Graph& g) {
  const std::size_t n = g.size();
  if (n > 20) throw std::invalid_argument("brute_dim is limited to 20 vertices");
  std::size_t best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::size_t size = 0;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (!((mask >> i) & 1)) continue;
      ++size;
      for (std::size_t j = i + 1; j < n && ok; ++j)
        if (((mask >> j) & 1) && !g.adjacent(i, j)) ok = false;
    }
    if (ok) best = std::max(best, size);
  }
  return best;
}

/// Length of the shortest cycle by trying every edge removal and BFS; nullopt
/// for forests.
inline std::optional<std::size_t> brute_girth(const Graph& g) {
  std::optional<std::size_t> best;
  for (auto [a, b] : g.edges()) {
    std::vector<std::size_t> dist(g.size(), SIZE_MAX);
    std::deque<VertexId> q{a};
    dist[a] = 0;
    while (!q.empty()) {
      VertexId x = q.front();
      q.pop_front();
      for (VertexId y = 0; y < g.size(); ++y) {
        if (!g.adjacent(x, y) || dist[y] != SIZE_MAX) continue;
        if ((x == a && y == b) || (x == b && y == a)) continue;
        dist[y] = dist[x] + 1;
        q.push_back(y);
      }
    }
    if (dist[b] != SIZE_MAX && (!best || dist[b] + 1 < *best)) best = dist[b] + 1;
  }
  return best;
}

}  // namespace gpw::oracle

#endif  // GPW_ORACLES_HPP
