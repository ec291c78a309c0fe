#pragma once

#include "clifford/metric.hpp"
#include "clifford/multivector.hpp"

namespace clifford {

/// Bilinear extension of blade_product over all term pairs.
[[nodiscard]] Multivector geometric_product(const Multivector& a, const Multivector& b,
                                            const Signature& sig);

/// Exterior product. Never consults a signature.
[[nodiscard]] Multivector wedge(const Multivector& a, const Multivector& b);

// Contractions are computed term-wise: a blade pair of grades r and s
// contributes its geometric product only when that product has grade s - r
// (left) or r - s (right).
[[nodiscard]] Multivector left_contraction(const Multivector& a, const Multivector& b,
                                           const Signature& sig);
[[nodiscard]] Multivector right_contraction(const Multivector& a, const Multivector& b,
                                            const Signature& sig);

/// a multiplied by itself k times; power(a, 0) is the scalar 1.
[[nodiscard]] Multivector power(const Multivector& a, unsigned k, const Signature& sig);

}  // namespace clifford
