#pragma once

#include <cstdint>
#include <string>

namespace clifford {

/// Marker for an unbounded generator count in a Signature.
struct Unbounded {
  friend constexpr bool operator==(Unbounded, Unbounded) noexcept { return true; }
};

inline constexpr Unbounded unbounded{};

/// A generator count: either a finite non-negative integer or Unbounded.
class Count {
 public:
  Count(long long n);  // NOLINT(google-explicit-constructor)
  constexpr Count(Unbounded) noexcept {}  // NOLINT(google-explicit-constructor)

  [[nodiscard]] constexpr bool is_unbounded() const noexcept { return unbounded_; }
  /// Only meaningful when !is_unbounded().
  [[nodiscard]] constexpr std::uint32_t value() const noexcept { return value_; }

  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Count&, const Count&) = default;

 private:
  std::uint32_t value_ = 0;
  bool unbounded_ = true;
};

/// Metric signature (p, q). Generators 1..p square to +1, the next q square
/// to -1, and any beyond p+q square to 0.
class Signature {
 public:
  /// Single-count form: q = 0, so every generator past p squares to 0.
  explicit Signature(Count p) : p_(p), q_(0) {}
  Signature(Count p, Count q) : p_(p), q_(q) {}

  [[nodiscard]] const Count& p() const noexcept { return p_; }
  [[nodiscard]] const Count& q() const noexcept { return q_; }

  /// Square of generator e_i, i >= 1. Returns +1, -1 or 0.
  [[nodiscard]] int generator_square(std::uint32_t i) const;

  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  Count p_;
  Count q_;
};

/// Every generator squares to +1; equal to Signature(unbounded, 0).
[[nodiscard]] Signature euclidean();

/// The all-null metric; products reduce to the exterior product.
[[nodiscard]] Signature grassmann();

[[nodiscard]] inline int generator_square(const Signature& sig, std::uint32_t i) {
  return sig.generator_square(i);
}

}  // namespace clifford
