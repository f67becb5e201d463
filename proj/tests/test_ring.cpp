#include <algorithm>
#include <string>
#include <vector>

#include "doctest.h"
#include "zdg/catalog.hpp"
#include "zdg/ring.hpp"

using namespace zdg;

TEST_CASE("Zn tables are modular arithmetic") {
  FiniteRing r = build_ring("Z12");
  CHECK(r.order == 12);
  CHECK(r.zero == 0);
  CHECK(r.one == 1);
  for (int a = 0; a < 12; ++a) {
    CHECK(r.labels[a] == std::to_string(a));
    for (int b = 0; b < 12; ++b) {
      CHECK(r.add(a, b) == (a + b) % 12);
      CHECK(r.mul(a, b) == (a * b) % 12);
    }
  }
}

TEST_CASE("annihilators match hand computation") {
  FiniteRing z12 = build_ring("Z12");
  CHECK(annihilator(z12, 4) == std::vector<int>{0, 3, 6, 9});
  CHECK(annihilator(z12, 6) == std::vector<int>{0, 2, 4, 6, 8, 10});
  CHECK(annihilator(z12, 5) == std::vector<int>{0});

  FiniteRing z9 = build_ring("Z9");
  CHECK(annihilator(z9, 3) == std::vector<int>{0, 3, 6});

  FiniteRing z8 = build_ring("Z8");
  CHECK(annihilator(z8, 2) == std::vector<int>{0, 4});
}

TEST_CASE("GF(4) is a field of characteristic two") {
  FiniteRing f = build_ring("GF(4)");
  CHECK(f.order == 4);
  check_ring_axioms(f);
  for (int a = 0; a < 4; ++a) {
    CHECK(f.add(a, a) == f.zero);
    if (a == f.zero) continue;
    bool has_inverse = false;
    for (int b = 0; b < 4; ++b) has_inverse |= f.mul(a, b) == f.one;
    CHECK(has_inverse);
  }
}

TEST_CASE("quotient rings have the right order") {
  CHECK(build_ring("Z4[x]/(2x,x^2-2)").order == 8);
  CHECK(build_ring("Z2[x]/(x^3)").order == 8);
  CHECK(build_ring("Z9[x]/(x^2-3,3x)").order == 27);
  CHECK(build_ring("Z2[x,y]/(x^2+x+1,y^2)").order == 16);
  CHECK(build_ring("Z2[x,y]/(x^2,xy,y^2)").order == 8);
  CHECK(build_ring("Z4[x]/(2x,x^2)").order == 8);
}

TEST_CASE("product rings use row-major element indexing") {
  FiniteRing r = build_ring("Z2xZ9");
  CHECK(r.order == 18);
  // (1,0) sits at index 1*9 + 0.
  CHECK(r.labels[9] == "(1,0)");
  CHECK(r.mul(9, 9) == 9);          // idempotent
  CHECK(r.add(9, 9) == 0);          // 2*(1,0) = (0,0)
  CHECK(r.labels[r.one] == "(1,1)");
  CHECK(r.mul(9, 3) == 0);          // (1,0)*(0,3) = (0,0)
}

TEST_CASE("axioms hold across the catalog sample") {
  for (const auto& e : catalog(30)) {
    FiniteRing r = build_ring(e.descriptor);
    CHECK_NOTHROW(check_ring_axioms(r));
    CHECK(r.descriptor_string == e.descriptor);
  }
}

TEST_CASE("collapsed quotients are rejected") {
  // The ideal (x, x+1) contains 1, so the quotient is the zero ring.
  try {
    build_ring("Z2[x]/(x,x+1)");
    FAIL("zero ring accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotUnital);
  }
  // An ideal with no unit-leading generator cannot bound the carrier.
  try {
    build_ring("Z2[x]/(1)");
    FAIL("unbounded carrier accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MalformedDescriptor);
  }
}

TEST_CASE("order cap applies to results and carriers") {
  try {
    build_ring("Z5000");
    FAIL("Z5000 built");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OrderCapExceeded);
    CHECK(std::string(e.what()) ==
          "Z5000 has size 5000, above the cap of 4096");
  }
  // 11^4 carrier exceeds the default cap even though each step is small.
  CHECK_THROWS_AS(build_ring("Z11[x]/(x^4)"), Error);
  CHECK_NOTHROW(build_ring("Z11[x]/(x^2)"));
  // The cap parameter is honored in both directions.
  try {
    build_ring("Z100", 50);
    FAIL("tightened cap ignored");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OrderCapExceeded);
  }
  CHECK(build_ring("Z100", 100).order == 100);
}

TEST_CASE("element classification") {
  FiniteRing z12 = build_ring("Z12");
  CHECK(classify_element(z12, 0).kind == ElementKind::Zero);
  CHECK(classify_element(z12, 5).kind == ElementKind::Unit);
  ElementClass six = classify_element(z12, 6);
  CHECK(six.kind == ElementKind::ZeroDivisor);
  CHECK(six.nilpotent_index == 2);
  ElementClass four = classify_element(z12, 4);
  CHECK(four.kind == ElementKind::ZeroDivisor);
  CHECK_FALSE(four.nilpotent_index.has_value());
}

TEST_CASE("additive orders divide the characteristic") {
  FiniteRing z12 = build_ring("Z12");
  CHECK(additive_order(z12, 0) == 1);
  CHECK(additive_order(z12, 1) == 12);
  CHECK(additive_order(z12, 4) == 3);
  CHECK(additive_order(z12, 6) == 2);

  FiniteRing r = build_ring("Z2xZ9");
  CHECK(additive_order(r, r.one) == 18);
  CHECK(additive_order(r, 9) == 2);   // (1,0)
  CHECK(additive_order(r, 3) == 3);   // (0,3)
}

TEST_CASE("quotient labels render residue polynomials") {
  FiniteRing r = build_ring("Z2[x]/(x^2)");
  std::vector<std::string> want = {"0", "1", "x", "x+1"};
  std::vector<std::string> got = r.labels;
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  CHECK(got == want);
  CHECK(r.labels[r.zero] == "0");
  CHECK(r.labels[r.one] == "1");
}
