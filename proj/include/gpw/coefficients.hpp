#ifndef GPW_COEFFICIENTS_HPP
#define GPW_COEFFICIENTS_HPP

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>

namespace gpw {

using Exponent = std::int64_t;

/// A cyclic vertex group: Z when `order == 0`, otherwise Z/order with order >= 2.
struct VertexGroup {
  std::uint64_t order = 0;

  static VertexGroup infinite() { return {}; }
  static VertexGroup cyclic(std::uint64_t n) {
    if (n < 2) throw std::invalid_argument("finite vertex groups need order >= 2");
    return {n};
  }

  bool is_finite() const { return order != 0; }

  /// Canonical representative: residue in [0, n) for Z/n, the value itself for Z.
  Exponent normalize(Exponent a) const {
    if (!is_finite()) return a;
    auto n = static_cast<Exponent>(order);
    Exponent r = a % n;
    return r < 0 ? r + n : r;
  }

  bool is_identity(Exponent a) const { return normalize(a) == 0; }

  /// Group product; nullopt when it is the identity.
  std::optional<Exponent> compose(Exponent a, Exponent b) const {
    Exponent sum;
    if (is_finite()) {
      sum = normalize(normalize(a) + normalize(b));
    } else if (__builtin_add_overflow(a, b, &sum)) {
      throw std::overflow_error("exponent overflow in infinite cyclic vertex group");
    }
    if (sum == 0) return std::nullopt;
    return sum;
  }

  Exponent inverse(Exponent a) const {
    if (is_finite()) return normalize(-normalize(a));
    if (a == INT64_MIN) throw std::overflow_error("exponent overflow in inversion");
    return -a;
  }

  /// k-th power of a.
  Exponent power(Exponent a, Exponent k) const {
    if (is_finite()) {
      auto n = static_cast<__int128>(order);
      auto r = (static_cast<__int128>(normalize(a)) * (k % static_cast<Exponent>(order))) % n;
      if (r < 0) r += n;
      return static_cast<Exponent>(r);
    }
    Exponent out;
    if (__builtin_mul_overflow(a, k, &out))
      throw std::overflow_error("exponent overflow in power");
    return out;
  }

  /// Order of a nonidentity element; nullopt means infinite.
  std::optional<std::uint64_t> element_order(Exponent a) const {
    if (is_identity(a)) throw std::invalid_argument("order of the identity requested");
    if (!is_finite()) return std::nullopt;
    auto r = static_cast<std::uint64_t>(normalize(a));
    return order / std::gcd(order, r);
  }

  std::string to_string() const { return is_finite() ? "Z/" + std::to_string(order) : "Z"; }

  friend bool operator==(const VertexGroup&, const VertexGroup&) = default;
};

}  // namespace gpw

#endif  // GPW_COEFFICIENTS_HPP
