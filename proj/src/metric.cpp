#include "clifford/metric.hpp"

#include <limits>
#include <stdexcept>

namespace clifford {

Count::Count(long long n) : value_(0), unbounded_(false) {
  if (n < 0 || n > std::numeric_limits<std::uint32_t>::max()) {
    throw std::invalid_argument("signature count out of range: " + std::to_string(n));
  }
  value_ = static_cast<std::uint32_t>(n);
}

std::string Count::to_string() const {
  return unbounded_ ? std::string("inf") : std::to_string(value_);
}

int Signature::generator_square(std::uint32_t i) const {
  if (i == 0) throw std::invalid_argument("generator index must be >= 1");
  if (p_.is_unbounded() || i <= p_.value()) return 1;
  if (q_.is_unbounded()) return -1;
  // 64-bit sum so p + q cannot overflow.
  if (std::uint64_t{i} <= std::uint64_t{p_.value()} + q_.value()) return -1;
  return 0;
}

std::string Signature::to_string() const {
  return "(" + p_.to_string() + ", " + q_.to_string() + ")";
}

Signature euclidean() { return Signature(unbounded, 0); }

Signature grassmann() { return Signature(0, 0); }

}  // namespace clifford
