#pragma once

#include <array>
#include <cstdint>

#include "clifford/multivector.hpp"

namespace clifford {

/// xoshiro256** seeded by expanding a 64-bit seed with splitmix64. The
/// algorithm is fixed so a (spec, seed) pair yields the same multivector on
/// every platform; std:: engines and distributions are deliberately unused.
class Xoshiro256 {
 public:
  explicit Xoshiro256(std::uint64_t seed) noexcept;

  std::uint64_t next() noexcept;

  /// Uniform integer in [0, bound) by rejection; bound must be > 0.
  std::uint64_t below(std::uint64_t bound) noexcept;

 private:
  std::array<std::uint64_t, 4> s_{};
};

/// Shape of a random multivector, mirroring rcliff(d, g, include.fewer).
struct RandomSpec {
  std::uint32_t dimension = 6;
  std::uint32_t max_grade = 4;
  std::uint32_t num_terms = 9;
  bool include_fewer = false;
  std::int32_t coeff_min = -5;  // 0 is never drawn
  std::int32_t coeff_max = 5;
  std::uint64_t seed = 0;
};

/// Draws spec.num_terms distinct blades over indices 1..dimension. Each has
/// grade exactly max_grade, or a grade uniform on 0..max_grade when
/// include_fewer is set. Coefficients are nonzero integers in
/// [coeff_min, coeff_max]. When fewer distinct blades exist than requested,
/// every available blade is used.
///
/// Throws std::invalid_argument for dimension 0, max_grade > dimension,
/// num_terms 0, or a coefficient range with no nonzero integer.
[[nodiscard]] Multivector random_multivector(const RandomSpec& spec);

}  // namespace clifford
