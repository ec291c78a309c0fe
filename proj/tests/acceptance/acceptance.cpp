// Acceptance suite: one PASS/FAIL line per criterion; exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "clifford/clifford.hpp"
#include "support/goldens.hpp"
#include "support/oracle.hpp"

using namespace clifford;
using Clock = std::chrono::steady_clock;

namespace {

constexpr double kFastProductMs = 1.0;
constexpr double kSuiteSeconds = 10.0;
constexpr int kRandomTrials = 1000;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

PrintOptions comma() {
  PrintOptions o;
  o.basis_sep = ",";
  return o;
}

Multivector random_mv(std::uint64_t seed) {
  RandomSpec spec;
  spec.dimension = 6;
  spec.max_grade = 4;
  spec.include_fewer = true;
  spec.seed = seed;
  return random_multivector(spec);
}

Outcome ac1() {
  Outcome o;
  const auto x = goldens::x_small();
  const auto t0 = Clock::now();
  const auto xx = geometric_product(x, x, euclidean());
  const double ms = ms_since(t0);
  const auto expected = Multivector::from_terms({{}, {1}, {2}, {2, 3}, {1, 2, 3}}, {-2, 4, 6, 8, 16});
  o.require(xx == expected, "x*x value mismatch");
  o.require(render(xx) == goldens::kXSmallSquared, "render mismatch: " + render(xx));
  o.require(ms < kFastProductMs, "product took " + std::to_string(ms) + " ms");
  o.detail = o.pass ? "product " + std::to_string(ms) + " ms" : o.detail;
  return o;
}

Outcome ac2() {
  Outcome o;
  const auto z = Multivector::as_1vector(std::vector<double>{1, 2, 3, 4, 5, 6, 7});
  const auto x = goldens::x_small();
  const auto t0 = Clock::now();
  const auto zx = geometric_product(z, x, euclidean());
  const double ms = ms_since(t0);
  o.require(zx.size() == 24, "expected 24 terms, got " + std::to_string(zx.size()));
  o.require(render(zx) == goldens::kZTimesX, "render mismatch: " + render(zx));
  o.require(parse_multivector(goldens::kZTimesX) == zx, "printed terms do not parse to the product");
  o.require(ms < kFastProductMs, "product took " + std::to_string(ms) + " ms");
  o.detail = o.pass ? "product " + std::to_string(ms) + " ms" : o.detail;
  return o;
}

Outcome ac3() {
  Outcome o;
  const auto w = wedge(goldens::wedge_lhs(), goldens::wedge_rhs());
  const auto expected =
      Multivector::from_terms({{1, 2, 3, 4, 5, 6}, {1, 2, 3, 4, 5, 7}, {2, 3, 4, 5, 6, 7}}, {9, -8, -12});
  o.require(w == expected, "wedge value mismatch: " + render(w));
  o.require(render(w) == goldens::kWedge, "render mismatch");
  return o;
}

// Evaluated exactly as stated: signature (7, unbounded). The published
// eleven terms are the product under (7, 0); Cl(7,3) has a twelfth term
// -10e_6,7,10 from e_8^2 = -1, so this criterion cannot hold as written.
Outcome ac4() {
  Outcome o;
  const auto x = goldens::abl_x();
  const auto y = goldens::abl_y();
  o.require(render(x, comma()) == goldens::kAblX, "x renders as " + render(x, comma()));
  o.require(render(y, comma()) == goldens::kAblY, "y renders as " + render(y, comma()));
  const auto t0 = Clock::now();
  const auto xy = geometric_product(x, y, Signature(7, unbounded));
  const double ms = ms_since(t0);
  const auto as_published = geometric_product(x, y, Signature(7, 0));
  const std::string note = "; under (7, 0) the product has " + std::to_string(as_published.size()) +
                           " terms and " +
                           (render(as_published, comma()) == goldens::kAblProduct ? "matches" : "does not match") +
                           " the published string";
  o.require(xy.size() == 11, "under (7, inf) expected 11 terms, got " + std::to_string(xy.size()) + ": " +
                                 render(xy, comma()));
  o.require(xy.coefficient({2, 3, 5, 8, 10}) == -40, "e_2,3,5,8,10 coefficient");
  o.require(xy.coefficient({1, 5, 7, 8, 10}) == 10, "e_1,5,7,8,10 coefficient");
  o.require(render(xy, comma()) == goldens::kAblProduct, "render mismatch: " + render(xy, comma()));
  o.require(ms < kFastProductMs, "product took " + std::to_string(ms) + " ms");
  o.detail = (o.pass ? "product " + std::to_string(ms) + " ms" : o.detail) + note;
  return o;
}

Outcome ac5() {
  Outcome o;
  auto sq = [](std::uint32_t i, const Signature& s) { return power(Multivector::basis(i), 2, s); };
  o.require(sq(2, Signature(1, 1)) == Multivector::from_scalar(-1), "e_2^2 under (1,1)");
  o.require(sq(5, Signature(0, 0)).is_zero(), "e_5^2 under (0,0)");
  o.require(sq(53, Signature(unbounded, 0)) == Multivector::from_scalar(1), "e_53^2 under (inf,0)");
  o.require(sq(4, Signature(3, 1)) == Multivector::from_scalar(-1), "e_4^2 under (3,1)");
  return o;
}

Outcome ac6() {
  Outcome o;
  const auto e1 = Multivector::basis(1);
  const auto e2 = Multivector::basis(2);
  const auto sig = euclidean();
  o.require(left_contraction(e2, geometric_product(e1, e2, sig), sig) == -e1, "e2 _| (e1 e2) != -e1");
  o.require(geometric_product(left_contraction(e2, e1, sig), e2, sig).is_zero(), "(e2 _| e1) e2 != 0");
  Session s;
  o.require(run_command("e(2) _| e(1) * e(2)", s).output == "- 1e_1", "calculator reading of e2 _| e1 e2");
  o.require(run_command("(e(2) _| e(1)) * e(2)", s).output == "the zero clifford element (0)",
            "calculator reading of (e2 _| e1) e2");
  return o;
}

Outcome ac7() {
  Outcome o;
  const auto t0 = Clock::now();
  std::size_t checks = 0;
  for (const auto& sig : {euclidean(), Signature(3, 1), Signature(0, 0)}) {
    for (int n = 0; n < kRandomTrials; ++n) {
      const auto base = static_cast<std::uint64_t>(3 * n);
      const auto a = random_mv(base);
      const auto b = random_mv(base + 1);
      const auto c = random_mv(base + 2);
      o.require(left_contraction(a, right_contraction(b, c, sig), sig) ==
                    right_contraction(left_contraction(a, b, sig), c, sig),
                "A _| (B |_ C) = (A _| B) |_ C failed at trial " + std::to_string(n) + " " + sig.to_string());
      o.require(left_contraction(a, left_contraction(b, c, sig), sig) == left_contraction(wedge(a, b), c, sig),
                "A _| (B _| C) = (A ^ B) _| C failed at trial " + std::to_string(n) + " " + sig.to_string());
      o.require(right_contraction(a, wedge(b, c), sig) == right_contraction(right_contraction(a, b, sig), c, sig),
                "A |_ (B ^ C) = (A |_ B) |_ C failed at trial " + std::to_string(n) + " " + sig.to_string());
      checks += 3;
    }
  }
  const double s = ms_since(t0) / 1000.0;
  o.require(s < kSuiteSeconds, "took " + std::to_string(s) + " s");
  if (o.pass) o.detail = std::to_string(checks) + " identity checks in " + std::to_string(s) + " s";
  return o;
}

Outcome ac8() {
  Outcome o;
  const auto t0 = Clock::now();
  const Signature sigs[] = {euclidean(), Signature(3, 1), Signature(1, 1), Signature(0, 0), Signature(7)};
  const auto blades = oracle::all_blades(5);
  std::vector<Multivector> units;
  for (const auto& b : blades) units.push_back(Multivector::from_blade(b));

  for (const auto& sig : sigs) {
    for (const auto& a : units) {
      for (const auto& b : units) {
        const auto ab = geometric_product(a, b, sig);
        for (const auto& c : units) {
          o.require(geometric_product(ab, c, sig) == geometric_product(a, geometric_product(b, c, sig), sig),
                    "blade associativity " + sig.to_string());
          o.require(geometric_product(a, b + c, sig) == ab + geometric_product(a, c, sig),
                    "blade distributivity " + sig.to_string());
        }
      }
    }
    for (std::uint32_t i = 1; i <= 5; ++i) {
      for (std::uint32_t j = 1; j <= 5; ++j) {
        const auto ei = Multivector::basis(i);
        const auto ej = Multivector::basis(j);
        const double expected = i == j ? 2.0 * sig.generator_square(i) : 0.0;
        o.require(geometric_product(ei, ej, sig) + geometric_product(ej, ei, sig) == Multivector::from_scalar(expected),
                  "generator relation " + sig.to_string());
      }
    }
    for (int n = 0; n < kRandomTrials; ++n) {
      const auto base = static_cast<std::uint64_t>(3 * n + 100000);
      const auto a = random_mv(base);
      const auto b = random_mv(base + 1);
      const auto c = random_mv(base + 2);
      o.require(geometric_product(geometric_product(a, b, sig), c, sig) ==
                    geometric_product(a, geometric_product(b, c, sig), sig),
                "random associativity " + sig.to_string());
      o.require(geometric_product(a, b + c, sig) == geometric_product(a, b, sig) + geometric_product(a, c, sig),
                "random distributivity " + sig.to_string());
    }
  }
  const double s = ms_since(t0) / 1000.0;
  o.require(s < kSuiteSeconds, "took " + std::to_string(s) + " s");
  if (o.pass) o.detail = std::to_string(s) + " s";
  return o;
}

Outcome ac9() {
  Outcome o;
  const auto blades = oracle::all_blades(5);
  std::size_t pairs = 0;
  for (const auto& sig : {euclidean(), Signature(3, 1), Signature(0, 0)}) {
    for (const auto& a : blades) {
      for (const auto& b : blades) {
        auto w = oracle::word_of(a);
        const auto wb = oracle::word_of(b);
        w.insert(w.end(), wb.begin(), wb.end());
        const auto expected = oracle::rewrite(w, sig);
        const auto got = blade_product(a, b, sig);
        bool same = got.sign == expected.coeff;
        if (same && got.sign != 0) same = oracle::word_of(got.blade) == expected.word;
        o.require(same, "blade pair disagrees with rewriter under " + sig.to_string());
        ++pairs;
      }
    }
  }
  if (o.pass) o.detail = std::to_string(pairs) + " blade pairs";
  return o;
}

Outcome ac10() {
  Outcome o;
  const auto path = std::filesystem::temp_directory_path() / "clifford_acceptance_roundtrip.mv";
  for (int n = 0; n < kRandomTrials; ++n) {
    RandomSpec spec;
    spec.include_fewer = true;
    spec.seed = static_cast<std::uint64_t>(n) + 500000;
    const auto a = random_multivector(spec);
    o.require(parse_multivector(render(a)) == a, "parse(render(A)) default separator, seed " + std::to_string(n));
    o.require(parse_multivector(render(a, comma()), comma()) == a,
              "parse(render(A)) comma separator, seed " + std::to_string(n));
    save(a, path);
    o.require(load(path) == a, "load(save(A)), seed " + std::to_string(n));
  }
  std::filesystem::remove(path);
  return o;
}

Outcome ac11() {
  Outcome o;
  const auto g = grades(goldens::graded_example());
  o.require(g == std::vector<std::size_t>{0, 1, 1, 1, 3, 4, 5, 5}, "grades mismatch");
  o.require(render(goldens::graded_example()) == goldens::kGradedExample, "render mismatch");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"AC1  golden x*x", ac1},
      {"AC2  golden z*x (24 terms)", ac2},
      {"AC3  golden Grassmann wedge", ac3},
      {"AC4  golden Cl(7,3) product (11 terms)", ac4},
      {"AC5  signature semantics", ac5},
      {"AC6  contraction goldens", ac6},
      {"AC7  contraction identities, 1000 triples x 3 signatures", ac7},
      {"AC8  associativity, distributivity, generator relation", ac8},
      {"AC9  blade_product vs rewriting oracle", ac9},
      {"AC10 render/parse and save/load round-trips", ac10},
      {"AC11 grades golden", ac11},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome out;
    try {
      out = run();
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail = std::string("exception: ") + e.what();
    }
    if (!out.pass) ++failed;
    std::cout << (out.pass ? "[PASS] " : "[FAIL] ") << name;
    if (!out.detail.empty()) std::cout << "  (" << out.detail << ")";
    std::cout << '\n';
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
