#ifndef GPW_SEARCH_HPP
#define GPW_SEARCH_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gpw/bass_serre.hpp"
#include "gpw/errors.hpp"
#include "gpw/support.hpp"

namespace gpw {

/// An element of U^n together with the positive word in U that produces it.
struct SearchCertificate {
  GroupElement element;
  std::vector<std::size_t> letters;  // indices into U; n = letters.size()
  std::vector<ExponentPair> exponent_trace;
  VertexSet achieved;
  SupportReport classification;
  std::uint64_t bound = 0;  // guaranteed bound on n for this branch
  std::string bound_formula;

  std::size_t n() const { return letters.size(); }
};

/// Multiplies out a letter sequence over U.
inline GroupElement replay(const std::vector<GroupElement>& U, const std::vector<std::size_t>& letters) {
  if (U.empty()) throw std::invalid_argument("empty letter set");
  GroupElement acc = GroupElement::identity(U.front().context());
  for (auto i : letters) acc = acc * U.at(i);
  return acc;
}

namespace detail {

inline std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && out > std::numeric_limits<std::uint64_t>::max() / base)
      return std::numeric_limits<std::uint64_t>::max();
    out *= base;
  }
  return out;
}

/// Calls visit(m, n) over [1, max_m] x [1, max_n] ordered by max(m, n), then
/// m + n, then m, stopping when visit returns true.
template <class F>
bool scan_exponent_pairs(Exponent max_m, Exponent max_n, F&& visit) {
  for (Exponent level = 1; level <= std::max(max_m, max_n); ++level) {
    for (Exponent j = 1; j <= level; ++j) {
      if (j <= max_m && level <= max_n && visit(j, level)) return true;
      if (j != level && level <= max_m && j <= max_n && visit(level, j)) return true;
    }
  }
  return false;
}

/// Lazily extended table of positive powers.
class PowerTable {
public:
  explicit PowerTable(GroupElement base) : base_(std::move(base)) { powers_.push_back(base_); }
  const GroupElement& operator[](Exponent k) {
    while (static_cast<Exponent>(powers_.size()) < k) powers_.push_back(powers_.back() * base_);
    return powers_[static_cast<std::size_t>(k - 1)];
  }

private:
  GroupElement base_;
  std::vector<GroupElement> powers_;
};

inline std::string describe_pair(const GroupElement& g, const GroupElement& h) {
  std::ostringstream os;
  auto dump = [&](const GroupElement& x) {
    os << '[';
    for (const auto& s : x.syllables()) os << ' ' << g.context()->graph().name(s.vertex) << '^' << s.exponent;
    os << " ]";
  };
  dump(g);
  os << " , ";
  dump(h);
  return os.str();
}

}  // namespace detail

/// Exponent cap for combining two elements: 6d+5 without 2-torsion,
/// 2^(d+3)·d in general (d = clique number, at least 1).
inline Exponent combine_cap(const GroupContext& ctx) {
  auto d = static_cast<Exponent>(std::max<std::size_t>(ctx.dim(), 1));
  if (!ctx.has_two_torsion()) return 6 * d + 5;
  return (Exponent{1} << (d + 3)) * d;
}

struct CombineResult {
  Exponent m = 0;
  Exponent n = 0;
  GroupElement product;
};

/// First (m, n) in scan order with
/// acon(stsupp(g) ∪ stsupp(h)) ⊆ acon(stsupp(g^m h^n)).
inline CombineResult combine_pair(const GroupElement& g, const GroupElement& h) {
  require_same_context(g, h);
  const auto& ctx = *g.context();
  const auto& graph = ctx.graph();
  const VertexSet target = graph.acon(stable_support(g) | stable_support(h));
  const Exponent cap = combine_cap(ctx);
  detail::PowerTable gp(g), hp(h);
  CombineResult out;
  bool found = detail::scan_exponent_pairs(cap, cap, [&](Exponent m, Exponent n) {
    GroupElement x = gp[m] * hp[n];
    if (!target.is_subset_of(graph.acon(stable_support(x)))) return false;
    out = {m, n, std::move(x)};
    return true;
  });
  if (!found)
    throw CapExceeded("combine_pair found no exponents up to " + std::to_string(cap), detail::describe_pair(g, h));
  return out;
}

/// Bound on n for full_support_element: κ^k with κ = combine_cap and
/// k = min(|U|², |V|).
inline std::uint64_t full_support_bound(const GroupContext& ctx, std::size_t set_size) {
  auto k = std::min<std::uint64_t>(static_cast<std::uint64_t>(set_size) * set_size, ctx.rank());
  return detail::saturating_pow(static_cast<std::uint64_t>(combine_cap(ctx)), k);
}

/// An element g of some U^n with acon(supp(U)) ⊆ stsupp(g).
///
/// Greedily picks u_1..u_k from U ∪ U² whose aconical stable supports cover
/// acon(supp(U)) (largest new coverage, ties to the earliest candidate), then
/// folds them together with combine_pair. Products of at most three letters
/// are tried first, in lexicographic order of letter sequences, while there
/// are at most 4096 of them per length.
inline SearchCertificate full_support_element(const std::vector<GroupElement>& U) {
  if (U.empty()) throw std::invalid_argument("full_support_element needs a nonempty set");
  const auto& ctx = U.front().context();
  const auto& graph = ctx->graph();
  const VertexSet target = acon_support_of_set(U);

  auto finish = [&](SearchCertificate cert) {
    cert.achieved = stable_support(cert.element);
    cert.classification = classify(cert.element);
    cert.bound = full_support_bound(*ctx, U.size());
    cert.bound_formula = ctx->has_two_torsion() ? "(2^(d+3)*d)^min(|U|^2,|V|)" : "(6d+5)^min(|U|^2,|V|)";
    return cert;
  };

  for (std::size_t len = 1, count = U.size(); len <= 3 && count <= 4096; ++len, count *= U.size()) {
    std::vector<std::size_t> idx(len, 0);
    for (;;) {
      GroupElement x = replay(U, idx);
      if (target.is_subset_of(graph.acon(stable_support(x)))) {
        SearchCertificate cert;
        cert.element = std::move(x);
        cert.letters = idx;
        return finish(std::move(cert));
      }
      std::size_t k = len;
      while (k > 0 && ++idx[k - 1] == U.size()) idx[--k] = 0;
      if (k == 0) break;
    }
  }

  struct Candidate {
    std::vector<std::size_t> letters;
    GroupElement element;
    VertexSet cover;
  };
  std::vector<Candidate> candidates;
  auto add = [&](std::vector<std::size_t> letters, GroupElement x) {
    VertexSet cover = graph.acon(stable_support(x)) & target;
    candidates.push_back({std::move(letters), std::move(x), std::move(cover)});
  };
  for (std::size_t i = 0; i < U.size(); ++i) add({i}, U[i]);
  for (std::size_t i = 0; i < U.size(); ++i)
    for (std::size_t j = 0; j < U.size(); ++j) add({i, j}, U[i] * U[j]);

  std::vector<std::size_t> chosen;
  VertexSet covered(ctx->rank());
  while (!target.is_subset_of(covered)) {
    std::size_t best = candidates.size(), best_gain = 0;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      std::size_t gain = (candidates[c].cover - covered).size();
      if (gain > best_gain) {
        best = c;
        best_gain = gain;
      }
    }
    if (best == candidates.size())
      throw std::logic_error("U ∪ U² does not cover acon(supp(U)); support_of_set is inconsistent");
    chosen.push_back(best);
    covered |= candidates[best].cover;
  }
  if (chosen.empty()) chosen.push_back(0);

  SearchCertificate cert;
  cert.element = candidates[chosen.front()].element;
  cert.letters = candidates[chosen.front()].letters;
  for (std::size_t i = 1; i < chosen.size(); ++i) {
    const auto& next = candidates[chosen[i]];
    auto [m, n, product] = combine_pair(cert.element, next.element);
    std::vector<std::size_t> letters;
    for (Exponent r = 0; r < m; ++r) letters.insert(letters.end(), cert.letters.begin(), cert.letters.end());
    for (Exponent r = 0; r < n; ++r) letters.insert(letters.end(), next.letters.begin(), next.letters.end());
    cert.element = std::move(product);
    cert.letters = std::move(letters);
    cert.exponent_trace.emplace_back(m, n);
  }
  return finish(std::move(cert));
}

/// Bound on n for full_support_torsion_free: (7d+5)^(d + min(|U|², |V|)).
inline std::uint64_t torsion_free_bound(const GroupContext& ctx, std::size_t set_size) {
  auto d = static_cast<std::uint64_t>(std::max<std::size_t>(ctx.dim(), 1));
  auto k = d + std::min<std::uint64_t>(static_cast<std::uint64_t>(set_size) * set_size, ctx.rank());
  return detail::saturating_pow(7 * d + 5, k);
}

/// In a torsion-free graph product, an element g of some U^n with
/// supp(g) = stsupp(g) = supp(U).
///
/// Starts from full_support_element, then for each cone vertex v of supp(U)
/// still missing folds in the first u ∈ U with v ∈ supp(u) as u^a·h^b,
/// a ≤ 7d+5, b ≤ 5d+5, checking directly that every secured vertex survives.
inline SearchCertificate full_support_torsion_free(const std::vector<GroupElement>& U) {
  if (U.empty()) throw std::invalid_argument("full_support_torsion_free needs a nonempty set");
  const auto& ctx = U.front().context();
  if (!ctx->torsion_free()) throw TorsionPresent("full_support_torsion_free requires all vertex groups to be Z");
  const auto d = static_cast<Exponent>(std::max<std::size_t>(ctx->dim(), 1));
  const auto set_support = support_of_set(U);
  const VertexSet cones = set_support.supp - set_support.acon;

  SearchCertificate cert = full_support_element(U);
  VertexSet secured = set_support.acon;
  std::vector<VertexSet> u_supp;
  for (const auto& u : U) u_supp.push_back(support(u));

  for (VertexId v : cones.members()) {
    secured.insert(v);
    if (secured.is_subset_of(support(cert.element))) continue;
    std::size_t w = 0;
    while (w < U.size() && !u_supp[w].contains(v)) ++w;
    if (w == U.size()) throw std::logic_error("cone vertex of supp(U) missing from every element of U");
    detail::PowerTable up(U[w]), hp(cert.element);
    Exponent a_found = 0, b_found = 0;
    GroupElement next;
    bool found = detail::scan_exponent_pairs(7 * d + 5, 5 * d + 5, [&](Exponent a, Exponent b) {
      GroupElement x = up[a] * hp[b];
      if (!secured.is_subset_of(support(x))) return false;
      a_found = a;
      b_found = b;
      next = std::move(x);
      return true;
    });
    if (!found)
      throw CapExceeded("cone-vertex phase found no exponents within 7d+5 x 5d+5",
                        detail::describe_pair(U[w], cert.element));
    std::vector<std::size_t> letters(static_cast<std::size_t>(a_found), w);
    for (Exponent r = 0; r < b_found; ++r) letters.insert(letters.end(), cert.letters.begin(), cert.letters.end());
    cert.element = std::move(next);
    cert.letters = std::move(letters);
    cert.exponent_trace.emplace_back(a_found, b_found);
  }
  cert.achieved = support(cert.element);
  cert.classification = classify(cert.element);
  cert.bound = torsion_free_bound(*ctx, U.size());
  cert.bound_formula = "(7d+5)^(d+min(|U|^2,|V|))";
  return cert;
}

enum class Target { Regular, StronglyIrreducible };

inline const char* to_string(Target t) { return t == Target::Regular ? "regular" : "strongly-irreducible"; }

enum class InfeasibleReason { None, AconTooSmall, AconIsJoin, ConeCliqueInfinite, PerpObstruction };

inline const char* to_string(InfeasibleReason r) {
  switch (r) {
    case InfeasibleReason::None: return "none";
    case InfeasibleReason::AconTooSmall: return "acon too small";
    case InfeasibleReason::AconIsJoin: return "acon is a join";
    case InfeasibleReason::ConeCliqueInfinite: return "cone clique has infinite group";
    case InfeasibleReason::PerpObstruction: return "perp obstruction";
  }
  return "?";
}

struct Feasibility {
  Target target = Target::Regular;
  bool feasible = false;
  InfeasibleReason reason = InfeasibleReason::None;
};

/// Whether ⟨U⟩ contains an element of the target class, decided from
/// A = acon(supp(U)) and the cone clique C = supp(U) ∖ A.
inline Feasibility feasibility(const std::vector<GroupElement>& U, Target target) {
  Feasibility f{target, false, InfeasibleReason::None};
  if (U.empty()) {
    f.reason = InfeasibleReason::AconTooSmall;
    return f;
  }
  const auto& ctx = *U.front().context();
  const auto& graph = ctx.graph();
  auto s = support_of_set(U);
  const VertexSet& A = s.acon;
  const VertexSet C = s.supp - A;
  if (A.size() < 2) {
    f.reason = InfeasibleReason::AconTooSmall;
  } else if (graph.join_split(A)) {
    f.reason = InfeasibleReason::AconIsJoin;
  } else if (target == Target::Regular) {
    VertexSet p = graph.perp(A);
    if (!ctx.all_finite(C))
      f.reason = InfeasibleReason::ConeCliqueInfinite;
    else if (!graph.is_clique(p) || !ctx.all_finite(p))
      f.reason = InfeasibleReason::PerpObstruction;
  } else if (!graph.perp(A).empty()) {
    f.reason = InfeasibleReason::PerpObstruction;
  }
  f.feasible = f.reason == InfeasibleReason::None;
  return f;
}

struct FindResult {
  Feasibility feasibility;
  std::optional<SearchCertificate> certificate;
};

/// A short element of the target class in some U^n, or the reason none exists
/// in ⟨U⟩. Any g ∈ ⟨U⟩ with acon(supp(U)) ⊆ stsupp(g) is in the class once
/// the feasibility conditions hold.
inline FindResult find_short(const std::vector<GroupElement>& U, Target target) {
  FindResult r{feasibility(U, target), std::nullopt};
  if (!r.feasibility.feasible) return r;
  auto cert = full_support_element(U);
  bool ok = target == Target::Regular ? cert.classification.regular : cert.classification.strongly_irreducible;
  if (!ok) throw std::logic_error("full-support certificate lacks the target property");
  r.certificate = std::move(cert);
  return r;
}

/// Exponent sum of each vertex in a RAAG element.
inline std::vector<Exponent> exponent_sums(const GroupElement& g) {
  std::vector<Exponent> p(g.context()->rank(), 0);
  for (const auto& s : g.syllables()) p[s.vertex] += s.exponent;
  return p;
}

inline std::uint64_t exponent_sum_bound(std::size_t m) { return (m + 1) * (m + 2) / 2; }

/// Exponent-sum search in a right-angled Artin group: an element
/// g = u_1^{n_1}⋯u_m^{n_m} ∈ U^n with Γ_U ⊆ supp(g), n ≤ (m+1)(m+2)/2.
///
/// u_j is the first letter with nonzero exponent sum at the j-th vertex of
/// Γ_U; n_j is the least value in 1..j+1 keeping every earlier sum nonzero.
inline SearchCertificate exponent_sum_search(const std::vector<GroupElement>& U) {
  if (U.empty()) throw std::invalid_argument("exponent_sum_search needs a nonempty set");
  const auto& ctx = U.front().context();
  if (!ctx->torsion_free()) throw TorsionPresent("exponent_sum_search requires a right-angled Artin group");
  std::vector<std::vector<Exponent>> p;
  for (const auto& u : U) p.push_back(exponent_sums(u));

  VertexSet gamma_u(ctx->rank());
  for (const auto& row : p)
    for (VertexId v = 0; v < row.size(); ++v)
      if (row[v] != 0) gamma_u.insert(v);
  const auto order = gamma_u.members();

  SearchCertificate cert;
  std::vector<Exponent> total(ctx->rank(), 0);
  if (order.empty()) cert.letters.push_back(0);
  for (std::size_t j = 0; j < order.size(); ++j) {
    std::size_t u = 0;
    while (p[u][order[j]] == 0) ++u;
    Exponent chosen = 0;
    for (Exponent n = 1; n <= static_cast<Exponent>(j) + 2 && chosen == 0; ++n) {
      bool ok = true;
      for (std::size_t i = 0; i <= j; ++i)
        if (total[order[i]] + n * p[u][order[i]] == 0) ok = false;
      if (ok) chosen = n;
    }
    if (chosen == 0) throw std::logic_error("exponent-sum induction found no admissible power");
    for (VertexId v = 0; v < ctx->rank(); ++v) total[v] += chosen * p[u][v];
    cert.letters.insert(cert.letters.end(), static_cast<std::size_t>(chosen), u);
    cert.exponent_trace.emplace_back(static_cast<Exponent>(u), chosen);
  }
  cert.element = replay(U, cert.letters);
  cert.achieved = gamma_u;
  if (!gamma_u.is_subset_of(support(cert.element)))
    throw std::logic_error("exponent-sum certificate misses part of Γ_U");
  cert.classification = classify(cert.element);
  cert.bound = exponent_sum_bound(order.size());
  cert.bound_formula = "(m+1)(m+2)/2";
  return cert;
}

/// M = (2k)^k (2k+1).
inline std::uint64_t simultaneous_loxodromic_bound(std::size_t k) {
  auto kk = static_cast<std::uint64_t>(k);
  auto base = detail::saturating_pow(2 * kk, kk);
  if (base > std::numeric_limits<std::uint64_t>::max() / (2 * kk + 1)) return std::numeric_limits<std::uint64_t>::max();
  return base * (2 * kk + 1);
}

/// Smallest (m, n) in scan order with 1 <= m, n <= (2k)^k(2k+1) such that
/// g^m h^n is loxodromic in every T_v, v ∈ V.
inline ExponentPair simultaneous_loxodromic(const GroupElement& g, const GroupElement& h,
                                            const std::vector<VertexId>& V) {
  require_same_context(g, h);
  const auto& graph = g.context()->graph();
  VertexSet want(graph.size());
  for (auto v : V) want.insert(v);
  const VertexSet g_lox = graph.acon(support(g)), h_lox = graph.acon(support(h));
  want.for_each([&](VertexId v) {
    if (!g_lox.contains(v) && !h_lox.contains(v))
      throw PreconditionFailed("both elements are elliptic in the tree of '" + graph.name(v) + "'");
  });
  const auto bound = simultaneous_loxodromic_bound(want.size());
  const auto cap = static_cast<Exponent>(std::min<std::uint64_t>(bound, 1u << 20));
  detail::PowerTable gp(g), hp(h);
  ExponentPair out{0, 0};
  bool found = detail::scan_exponent_pairs(cap, cap, [&](Exponent m, Exponent n) {
    if (!want.is_subset_of(graph.acon(support(gp[m] * hp[n])))) return false;
    out = {m, n};
    return true;
  });
  if (!found)
    throw CapExceeded("no simultaneous loxodromic up to M = " + std::to_string(bound), detail::describe_pair(g, h));
  return out;
}

}  // namespace gpw

#endif  // GPW_SEARCH_HPP
