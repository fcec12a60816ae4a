#ifndef GPW_GROWTH_HPP
#define GPW_GROWTH_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdlib>
#include <optional>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

#include "gpw/word.hpp"

namespace gpw {

struct EnumerationOptions {
  std::size_t threads = 1;
  std::size_t max_elements = 20'000'000;  // per level; exceeded => truncated report
};

/// Worker count from GPW_THREADS when set, else `fallback`.
inline std::size_t thread_budget(std::size_t fallback) {
  if (const char* env = std::getenv("GPW_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) return static_cast<std::size_t>(v);
  }
  return std::max<std::size_t>(fallback, 1);
}

/// Distinct elements of U, in first-occurrence order.
inline std::vector<GroupElement> distinct(const std::vector<GroupElement>& U) {
  std::vector<GroupElement> out;
  std::unordered_set<GroupElement> seen;
  for (const auto& u : U)
    if (seen.insert(u).second) out.push_back(u);
  return out;
}

/// Breadth-first enumeration of U, U², U³, … (products of exactly n letters),
/// each level deduplicated by canonical form.
class ProductSetEnumerator {
public:
  ProductSetEnumerator(std::vector<GroupElement> U, EnumerationOptions opts = {})
      : letters_(distinct(U)), opts_(opts) {
    if (letters_.empty()) throw std::invalid_argument("product sets need a nonempty letter set");
  }

  /// Advances to the next level. Returns false, leaving the level unchanged,
  /// if the level would exceed the element budget.
  bool advance() {
    if (level_index_ == 0) {
      level_ = letters_;
      level_index_ = 1;
      return true;
    }
    const std::size_t workers = std::min(std::max<std::size_t>(opts_.threads, 1), level_.size());
    std::vector<std::vector<GroupElement>> parts(workers);
    auto work = [&](std::size_t w) {
      std::unordered_set<GroupElement> local;
      const std::size_t begin = level_.size() * w / workers, end = level_.size() * (w + 1) / workers;
      for (std::size_t i = begin; i < end; ++i)
        for (const auto& u : letters_) {
          auto x = level_[i] * u;
          if (local.insert(x).second) parts[w].push_back(std::move(x));
        }
    };
    if (workers == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
      for (auto& t : pool) t.join();
    }
    std::unordered_set<GroupElement> seen;
    std::vector<GroupElement> next;
    for (auto& part : parts)
      for (auto& x : part) {
        if (seen.size() >= opts_.max_elements) return false;
        if (seen.insert(x).second) next.push_back(std::move(x));
      }
    level_ = std::move(next);
    ++level_index_;
    return true;
  }

  std::size_t level_index() const { return level_index_; }
  const std::vector<GroupElement>& level() const { return level_; }
  const std::vector<GroupElement>& letters() const { return letters_; }

private:
  std::vector<GroupElement> letters_;
  EnumerationOptions opts_;
  std::vector<GroupElement> level_;
  std::size_t level_index_ = 0;
};

struct GrowthReport {
  std::vector<std::size_t> sizes;  // sizes[n-1] = |U^n|
  std::size_t letter_count = 0;    // |U| as a set
  bool truncated = false;
  bool ball_mode = false;
  std::optional<double> alpha;
  std::optional<double> beta;
  std::vector<bool> per_n_check;    // |U^n| >= (alpha |U|)^(beta n)
  std::vector<double> fekete_upper;  // |B(n)|^(1/n), ball mode only
  std::string note;
};

inline GrowthReport product_set_sizes(const std::vector<GroupElement>& U, std::size_t n_max,
                                      EnumerationOptions opts = {}) {
  if (n_max < 1) throw std::invalid_argument("n_max must be at least 1");
  ProductSetEnumerator e(U, opts);
  GrowthReport r;
  r.letter_count = e.letters().size();
  while (e.level_index() < n_max) {
    if (!e.advance()) {
      r.truncated = true;
      r.note = "element budget exceeded at n = " + std::to_string(e.level_index() + 1);
      break;
    }
    r.sizes.push_back(e.level().size());
  }
  return r;
}

/// Symmetrizes the generators and adjoins the identity.
inline std::vector<GroupElement> ball_generators(const std::vector<GroupElement>& S) {
  if (S.empty()) throw std::invalid_argument("ball needs a nonempty generating set");
  std::vector<GroupElement> out{GroupElement::identity(S.front().context())};
  for (const auto& s : S) {
    out.push_back(s);
    out.push_back(invert(s));
  }
  return distinct(out);
}

/// |B_S(n)| for n ≤ n_max, with |B(n)|^(1/n) reported as upper bounds on the
/// exponential growth rate (submultiplicativity); no lower bound is claimed.
inline GrowthReport ball_sizes(const std::vector<GroupElement>& S, std::size_t n_max, EnumerationOptions opts = {}) {
  GrowthReport r = product_set_sizes(ball_generators(S), n_max, opts);
  r.ball_mode = true;
  for (std::size_t n = 1; n <= r.sizes.size(); ++n)
    r.fekete_upper.push_back(std::pow(static_cast<double>(r.sizes[n - 1]), 1.0 / static_cast<double>(n)));
  if (!r.note.empty()) r.note += "; ";
  r.note += "fekete_upper entries are upper bounds on the growth rate only";
  return r;
}

/// |U^n| >= (alpha |U|)^(beta n), compared in log space with a relative slack
/// of 1e-12 so that exact equality is not lost to rounding.
inline bool growth_inequality_holds(std::size_t product_size, std::size_t letter_count, double alpha, double beta,
                                    std::size_t n) {
  double base = alpha * static_cast<double>(letter_count);
  if (base <= 0) return true;
  double lhs = std::log(static_cast<double>(product_size));
  double rhs = beta * static_cast<double>(n) * std::log(base);
  return lhs >= rhs - 1e-12 * std::max(1.0, std::abs(rhs));
}

inline void apply_inequality(GrowthReport& r, double alpha, double beta) {
  if (!(alpha > 0) || !(beta > 0)) throw std::invalid_argument("alpha and beta must be positive");
  r.alpha = alpha;
  r.beta = beta;
  r.per_n_check.clear();
  for (std::size_t n = 1; n <= r.sizes.size(); ++n)
    r.per_n_check.push_back(growth_inequality_holds(r.sizes[n - 1], r.letter_count, alpha, beta, n));
}

inline GrowthReport growth_inequality_check(const std::vector<GroupElement>& U, double alpha, double beta,
                                            std::size_t n_max, EnumerationOptions opts = {}) {
  if (!(alpha > 0) || !(beta > 0)) throw std::invalid_argument("alpha and beta must be positive");
  GrowthReport r = product_set_sizes(U, n_max, opts);
  apply_inequality(r, alpha, beta);
  return r;
}

}  // namespace gpw

#endif  // GPW_GROWTH_HPP
