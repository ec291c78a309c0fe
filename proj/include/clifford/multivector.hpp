#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "clifford/blade.hpp"

namespace clifford {

/// A sparse Clifford element: a map from canonical blades to nonzero real
/// coefficients, iterated in canonical blade order.
///
/// Values never carry a signature; metric-dependent products live in
/// products.hpp and take the Signature explicitly. No stored coefficient is
/// ever exactly 0.0.
class Multivector {
 public:
  using TermMap = std::map<Blade, double, BladeOrder>;

  Multivector() = default;

  /// Builds from parallel lists of index lists and coefficients. Each index
  /// list may be in any order but must not repeat an index; its permutation
  /// parity is applied to the coefficient. Repeated blades are summed.
  static Multivector from_terms(std::span<const std::vector<std::uint32_t>> blades,
                                std::span<const double> coeffs);
  static Multivector from_terms(const std::vector<std::vector<std::uint32_t>>& blades,
                                const std::vector<double>& coeffs) {
    return from_terms(std::span(blades), std::span(coeffs));
  }

  static Multivector from_scalar(double c);
  static Multivector from_blade(const Blade& b, double c = 1.0);
  /// v[0] e_1 + v[1] e_2 + ...
  static Multivector as_1vector(std::span<const double> v);
  /// The generator e_i; throws std::invalid_argument when i is out of range.
  static Multivector basis(std::uint32_t i);

  [[nodiscard]] const TermMap& terms() const noexcept { return terms_; }
  [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }
  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
  [[nodiscard]] double coefficient(const Blade& b) const;
  [[nodiscard]] double scalar_part() const { return coefficient(Blade{}); }
  /// True when every term is the scalar blade (including the zero element).
  [[nodiscard]] bool is_scalar() const noexcept;

  /// Adds c to the coefficient of b, dropping the term if it becomes zero.
  void accumulate(const Blade& b, double c);

  Multivector& operator+=(const Multivector& rhs);
  Multivector& operator-=(const Multivector& rhs);

  friend bool operator==(const Multivector&, const Multivector&) = default;

 private:
  TermMap terms_;
};

[[nodiscard]] Multivector operator+(Multivector a, const Multivector& b);
[[nodiscard]] Multivector operator-(Multivector a, const Multivector& b);
[[nodiscard]] Multivector operator-(const Multivector& a);
[[nodiscard]] Multivector operator*(double c, const Multivector& a);

[[nodiscard]] inline Multivector add(const Multivector& a, const Multivector& b) { return a + b; }
[[nodiscard]] inline Multivector subtract(const Multivector& a, const Multivector& b) { return a - b; }
[[nodiscard]] inline Multivector negate(const Multivector& a) { return -a; }
[[nodiscard]] inline Multivector scalar_multiply(double c, const Multivector& a) { return c * a; }

/// One grade per stored term, ascending.
[[nodiscard]] std::vector<std::size_t> grades(const Multivector& a);

/// The grade-r terms of a.
[[nodiscard]] Multivector grade_part(const Multivector& a, std::size_t r);

[[nodiscard]] inline bool equals(const Multivector& a, const Multivector& b) { return a == b; }
[[nodiscard]] inline bool is_zero(const Multivector& a) { return a.is_zero(); }

/// Same blades up to coefficients that differ by at most eps; a term missing
/// on one side counts as 0.
[[nodiscard]] bool equals_within(const Multivector& a, const Multivector& b, double eps);

}  // namespace clifford
