#include "clifford/random.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

namespace clifford {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) noexcept {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept { return (x << k) | (x >> (64 - k)); }

// Number of blades available, capped at `cap`. Binomials are tracked in
// double; they are exact well past any cap a uint32 can express.
std::uint64_t available_blades(std::uint32_t d, std::uint32_t g, bool fewer, std::uint32_t cap) {
  double total = 0.0;
  double binom = 1.0;
  for (std::uint32_t k = 0; k <= g; ++k) {
    if (k > 0) binom = binom * (d - k + 1) / k;
    if (fewer || k == g) total += binom;
  }
  return total >= cap ? cap : static_cast<std::uint64_t>(total + 0.5);
}

}  // namespace

Xoshiro256::Xoshiro256(std::uint64_t seed) noexcept {
  for (auto& word : s_) word = splitmix64(seed);
}

std::uint64_t Xoshiro256::next() noexcept {
  const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

std::uint64_t Xoshiro256::below(std::uint64_t bound) noexcept {
  // Reject the top partial bucket so every residue is equally likely.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = next();
  while (x >= limit) x = next();
  return x % bound;
}

Multivector random_multivector(const RandomSpec& spec) {
  if (spec.dimension == 0 || spec.dimension > kMaxIndex) {
    throw std::invalid_argument("random_multivector: dimension must be in [1, 65535]");
  }
  if (spec.max_grade > spec.dimension) {
    throw std::invalid_argument("random_multivector: max_grade exceeds dimension");
  }
  if (spec.num_terms == 0) throw std::invalid_argument("random_multivector: num_terms must be >= 1");

  // Nonzero integers in [coeff_min, coeff_max], indexed 0..n-1.
  const std::int64_t lo = spec.coeff_min;
  const std::int64_t hi = spec.coeff_max;
  const std::int64_t span = hi - lo + 1;
  const bool has_zero = lo <= 0 && 0 <= hi;
  const std::int64_t n_coeffs = span - (has_zero ? 1 : 0);
  if (lo > hi || n_coeffs <= 0) {
    throw std::invalid_argument("random_multivector: empty coefficient range");
  }
  auto coeff_at = [&](std::int64_t k) {
    std::int64_t c = lo + k;
    if (has_zero && c >= 0) ++c;
    return static_cast<double>(c);
  };

  const std::uint64_t want =
      available_blades(spec.dimension, spec.max_grade, spec.include_fewer, spec.num_terms);

  Xoshiro256 rng(spec.seed);
  std::vector<std::uint32_t> pool(spec.dimension);
  std::set<Blade, BladeOrder> seen;
  Multivector out;
  while (seen.size() < want) {
    const std::uint32_t grade =
        spec.include_fewer ? static_cast<std::uint32_t>(rng.below(spec.max_grade + 1ULL))
                           : spec.max_grade;
    // Partial Fisher-Yates over 1..d.
    std::iota(pool.begin(), pool.end(), 1U);
    for (std::uint32_t k = 0; k < grade; ++k) {
      const auto pick = k + rng.below(spec.dimension - k);
      std::swap(pool[k], pool[pick]);
    }
    std::vector<std::uint32_t> chosen(pool.begin(), pool.begin() + grade);
    std::sort(chosen.begin(), chosen.end());
    Blade blade(chosen);
    const double c = coeff_at(static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(n_coeffs))));
    if (seen.insert(blade).second) out.accumulate(blade, c);
  }
  return out;
}

}  // namespace clifford
