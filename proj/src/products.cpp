#include "clifford/products.hpp"

namespace clifford {

namespace {

template <typename BladeOp>
Multivector bilinear(const Multivector& a, const Multivector& b, BladeOp op) {
  Multivector out;
  for (const auto& [ba, ca] : a.terms()) {
    for (const auto& [bb, cb] : b.terms()) {
      SignedBlade sb = op(ba, bb);
      if (sb.sign != 0) out.accumulate(sb.blade, sb.sign * ca * cb);
    }
  }
  return out;
}

}  // namespace

Multivector geometric_product(const Multivector& a, const Multivector& b, const Signature& sig) {
  return bilinear(a, b, [&](const Blade& x, const Blade& y) { return blade_product(x, y, sig); });
}

Multivector wedge(const Multivector& a, const Multivector& b) {
  return bilinear(a, b, [](const Blade& x, const Blade& y) { return blade_wedge(x, y); });
}

Multivector left_contraction(const Multivector& a, const Multivector& b, const Signature& sig) {
  return bilinear(a, b, [&](const Blade& x, const Blade& y) -> SignedBlade {
    if (x.grade() > y.grade()) return {};
    SignedBlade sb = blade_product(x, y, sig);
    if (sb.blade.grade() != y.grade() - x.grade()) return {};
    return sb;
  });
}

Multivector right_contraction(const Multivector& a, const Multivector& b, const Signature& sig) {
  return bilinear(a, b, [&](const Blade& x, const Blade& y) -> SignedBlade {
    if (y.grade() > x.grade()) return {};
    SignedBlade sb = blade_product(x, y, sig);
    if (sb.blade.grade() != x.grade() - y.grade()) return {};
    return sb;
  });
}

Multivector power(const Multivector& a, unsigned k, const Signature& sig) {
  Multivector out = Multivector::from_scalar(1.0);
  for (unsigned n = 0; n < k; ++n) out = geometric_product(out, a, sig);
  return out;
}

}  // namespace clifford
