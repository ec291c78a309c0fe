#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "clifford/metric.hpp"

namespace clifford {

using Index = std::uint16_t;

/// Largest generator index a Blade may hold. Indices are 1-based.
inline constexpr std::uint32_t kMaxIndex = 65535;

/// A basis blade e_{i1 i2 ... ik} stored as strictly increasing generator
/// indices. The empty blade is the scalar unit.
class Blade {
 public:
  Blade() = default;

  /// Throws std::invalid_argument unless `indices` is strictly increasing
  /// with every entry in [1, kMaxIndex].
  explicit Blade(std::span<const std::uint32_t> indices);
  Blade(std::initializer_list<std::uint32_t> indices);

  [[nodiscard]] std::span<const Index> indices() const noexcept { return indices_; }
  [[nodiscard]] std::size_t grade() const noexcept { return indices_.size(); }
  [[nodiscard]] bool is_scalar() const noexcept { return indices_.empty(); }

  friend bool operator==(const Blade&, const Blade&) = default;

 private:
  friend class BladeBuilder;
  std::vector<Index> indices_;
};

/// Result of multiplying two blades. A zero sign means the product vanished
/// and `blade` carries no meaning.
struct SignedBlade {
  int sign = 0;
  Blade blade;

  friend bool operator==(const SignedBlade&, const SignedBlade&) = default;
};

/// Canonical term order: ascending little-endian bitmask, i.e. the blade
/// whose largest differing index is larger sorts later. Works for any index
/// range, not only indices that fit a 64-bit key.
[[nodiscard]] std::strong_ordering compare_blades(const Blade& a, const Blade& b) noexcept;

struct BladeOrder {
  bool operator()(const Blade& a, const Blade& b) const noexcept {
    return compare_blades(a, b) < 0;
  }
};

/// Sum of 2^(i-1) over the blade's indices. Throws std::out_of_range when an
/// index exceeds 64.
[[nodiscard]] std::uint64_t blade_key(const Blade& a);

/// Geometric product of two basis blades under `sig`.
[[nodiscard]] SignedBlade blade_product(const Blade& a, const Blade& b, const Signature& sig);

/// Exterior product of two basis blades; zero whenever they share an index.
[[nodiscard]] SignedBlade blade_wedge(const Blade& a, const Blade& b);

/// Sorts an arbitrary duplicate-free index list, returning the blade with
/// the permutation parity. Throws std::invalid_argument on a repeated index
/// or an index outside [1, kMaxIndex].
[[nodiscard]] SignedBlade canonicalize(std::span<const std::uint32_t> indices);

}  // namespace clifford
