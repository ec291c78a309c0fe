#include "clifford/blade.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace clifford {

namespace {

void check_range(std::uint32_t i) {
  if (i < 1 || i > kMaxIndex) {
    throw std::invalid_argument("generator index out of range [1, 65535]: " + std::to_string(i));
  }
}

}  // namespace

class BladeBuilder {
 public:
  static Blade adopt(std::vector<Index> indices) {
    Blade b;
    b.indices_ = std::move(indices);
    return b;
  }
};

Blade::Blade(std::span<const std::uint32_t> indices) {
  indices_.reserve(indices.size());
  for (std::size_t k = 0; k < indices.size(); ++k) {
    check_range(indices[k]);
    if (k > 0 && indices[k] <= indices[k - 1]) {
      throw std::invalid_argument("blade indices must be strictly increasing");
    }
    indices_.push_back(static_cast<Index>(indices[k]));
  }
}

Blade::Blade(std::initializer_list<std::uint32_t> indices)
    : Blade(std::span<const std::uint32_t>(indices.begin(), indices.size())) {}

std::strong_ordering compare_blades(const Blade& a, const Blade& b) noexcept {
  auto ia = a.indices();
  auto ib = b.indices();
  auto ra = ia.rbegin();
  auto rb = ib.rbegin();
  for (; ra != ia.rend() && rb != ib.rend(); ++ra, ++rb) {
    if (*ra != *rb) return *ra <=> *rb;
  }
  // Common top part; the one with remaining (lower) indices has the larger key.
  return ia.size() <=> ib.size();
}

std::uint64_t blade_key(const Blade& a) {
  std::uint64_t key = 0;
  for (Index i : a.indices()) {
    if (i > 64) throw std::out_of_range("blade_key needs indices <= 64");
    key |= std::uint64_t{1} << (i - 1);
  }
  return key;
}

SignedBlade blade_product(const Blade& a, const Blade& b, const Signature& sig) {
  auto ia = a.indices();
  auto ib = b.indices();
  std::vector<Index> out;
  out.reserve(ia.size() + ib.size());

  // Merge; each b element passes over the a elements still ahead of it.
  int sign = 1;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < ia.size() && j < ib.size()) {
    if (ia[i] < ib[j]) {
      out.push_back(ia[i++]);
    } else if (ib[j] < ia[i]) {
      if ((ia.size() - i) % 2 == 1) sign = -sign;
      out.push_back(ib[j++]);
    } else {
      // b[j] moves past a[i+1..]; the pair e_k e_k collapses to sigma(k).
      if ((ia.size() - i - 1) % 2 == 1) sign = -sign;
      const int sq = sig.generator_square(ia[i]);
      if (sq == 0) return {};
      sign *= sq;
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), ia.begin() + static_cast<std::ptrdiff_t>(i), ia.end());
  out.insert(out.end(), ib.begin() + static_cast<std::ptrdiff_t>(j), ib.end());
  return {sign, BladeBuilder::adopt(std::move(out))};
}

SignedBlade blade_wedge(const Blade& a, const Blade& b) {
  auto ia = a.indices();
  auto ib = b.indices();
  std::vector<Index> out;
  out.reserve(ia.size() + ib.size());

  int sign = 1;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < ia.size() && j < ib.size()) {
    if (ia[i] == ib[j]) return {};
    if (ia[i] < ib[j]) {
      out.push_back(ia[i++]);
    } else {
      if ((ia.size() - i) % 2 == 1) sign = -sign;
      out.push_back(ib[j++]);
    }
  }
  out.insert(out.end(), ia.begin() + static_cast<std::ptrdiff_t>(i), ia.end());
  out.insert(out.end(), ib.begin() + static_cast<std::ptrdiff_t>(j), ib.end());
  return {sign, BladeBuilder::adopt(std::move(out))};
}

SignedBlade canonicalize(std::span<const std::uint32_t> indices) {
  std::vector<std::uint32_t> v(indices.begin(), indices.end());
  for (auto i : v) check_range(i);
  // Insertion sort: each adjacent swap flips the sign.
  int sign = 1;
  for (std::size_t k = 1; k < v.size(); ++k) {
    for (std::size_t m = k; m > 0 && v[m - 1] >= v[m]; --m) {
      if (v[m - 1] == v[m]) {
        throw std::invalid_argument("repeated index " + std::to_string(v[m]) + " in one term");
      }
      std::swap(v[m - 1], v[m]);
      sign = -sign;
    }
  }
  std::vector<Index> out(v.begin(), v.end());
  return {sign, BladeBuilder::adopt(std::move(out))};
}

}  // namespace clifford
