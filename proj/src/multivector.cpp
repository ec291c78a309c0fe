#include "clifford/multivector.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace clifford {

Multivector Multivector::from_terms(std::span<const std::vector<std::uint32_t>> blades,
                                    std::span<const double> coeffs) {
  if (blades.size() != coeffs.size()) {
    throw std::invalid_argument("from_terms: " + std::to_string(blades.size()) + " blades but " +
                                std::to_string(coeffs.size()) + " coefficients");
  }
  Multivector out;
  for (std::size_t k = 0; k < blades.size(); ++k) {
    auto sb = canonicalize(blades[k]);
    out.accumulate(sb.blade, sb.sign * coeffs[k]);
  }
  return out;
}

Multivector Multivector::from_scalar(double c) { return from_blade(Blade{}, c); }

Multivector Multivector::from_blade(const Blade& b, double c) {
  Multivector out;
  out.accumulate(b, c);
  return out;
}

Multivector Multivector::as_1vector(std::span<const double> v) {
  Multivector out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    out.accumulate(Blade{static_cast<std::uint32_t>(k + 1)}, v[k]);
  }
  return out;
}

Multivector Multivector::basis(std::uint32_t i) { return from_blade(Blade{i}); }

double Multivector::coefficient(const Blade& b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? 0.0 : it->second;
}

bool Multivector::is_scalar() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_scalar());
}

void Multivector::accumulate(const Blade& b, double c) {
  if (c == 0.0) return;
  auto [it, inserted] = terms_.try_emplace(b, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0.0) terms_.erase(it);
}

Multivector& Multivector::operator+=(const Multivector& rhs) {
  for (const auto& [b, c] : rhs.terms_) accumulate(b, c);
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& rhs) {
  for (const auto& [b, c] : rhs.terms_) accumulate(b, -c);
  return *this;
}

Multivector operator+(Multivector a, const Multivector& b) { return a += b; }

Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }

Multivector operator-(const Multivector& a) { return -1.0 * a; }

Multivector operator*(double c, const Multivector& a) {
  Multivector out;
  for (const auto& [b, v] : a.terms()) out.accumulate(b, c * v);
  return out;
}

std::vector<std::size_t> grades(const Multivector& a) {
  std::vector<std::size_t> out;
  out.reserve(a.size());
  for (const auto& [b, c] : a.terms()) out.push_back(b.grade());
  std::sort(out.begin(), out.end());
  return out;
}

Multivector grade_part(const Multivector& a, std::size_t r) {
  Multivector out;
  for (const auto& [b, c] : a.terms()) {
    if (b.grade() == r) out.accumulate(b, c);
  }
  return out;
}

bool equals_within(const Multivector& a, const Multivector& b, double eps) {
  for (const auto& [blade, c] : a.terms()) {
    if (!(std::abs(c - b.coefficient(blade)) <= eps)) return false;
  }
  for (const auto& [blade, c] : b.terms()) {
    if (!(std::abs(c - a.coefficient(blade)) <= eps)) return false;
  }
  return true;
}

}  // namespace clifford
