#include <vector>

#include "doctest.h"
#include "zdg/analysis.hpp"
#include "zdg/ring.hpp"

using namespace zdg;

TEST_CASE("Z9 is local and colocal with core (3)") {
  FiniteRing r = build_ring("Z9");
  RingAnalysis a = analyze_ring(r);
  CHECK_FALSE(a.is_field);
  CHECK(a.is_local);
  CHECK(a.characteristic == 9);
  CHECK(a.zero_divisors_star == std::vector<int>{3, 6});
  CHECK(a.nilradical == std::vector<int>{0, 3, 6});
  REQUIRE(a.maximal_ideal.has_value());
  CHECK(*a.maximal_ideal == std::vector<int>{0, 3, 6});
  CHECK(a.is_colocal);
  REQUIRE(a.colocal_core.has_value());
  CHECK(*a.colocal_core == std::vector<int>{0, 3, 6});
  CHECK(a.full_annihilator_set == std::vector<int>{3, 6});
  CHECK_FALSE(a.is_reduced);
}

TEST_CASE("Z6 is reduced and not local") {
  FiniteRing r = build_ring("Z6");
  RingAnalysis a = analyze_ring(r);
  CHECK(a.is_reduced);
  CHECK_FALSE(a.is_local);
  CHECK_FALSE(a.maximal_ideal.has_value());
  CHECK(a.units == std::vector<int>{1, 5});
  CHECK(a.zero_divisors_star == std::vector<int>{2, 3, 4});
  CHECK(a.nilradical == std::vector<int>{0});
  CHECK(a.characteristic == 6);
}

TEST_CASE("Z12 nilradical and additive orders") {
  FiniteRing r = build_ring("Z12");
  RingAnalysis a = analyze_ring(r);
  CHECK(a.nilradical == std::vector<int>{0, 6});
  CHECK(a.nilpotent_index[6] == 2);
  CHECK(a.nilpotent_index[4] == 0);
  CHECK(a.nilpotent_index[0] == 1);
  CHECK(a.additive_orders[1] == 12);
  CHECK(a.additive_orders[4] == 3);
  CHECK_FALSE(a.is_reduced);
  CHECK_FALSE(a.is_local);
}

TEST_CASE("Z2xZ2 has two minimal ideals") {
  FiniteRing r = build_ring("Z2xZ2");
  RingAnalysis a = analyze_ring(r);
  CHECK_FALSE(a.is_colocal);
  CHECK_FALSE(a.colocal_core.has_value());
  CHECK(a.is_reduced);
  CHECK_FALSE(a.is_local);
  CHECK(a.characteristic == 2);
}

TEST_CASE("Z8 colocal core is the annihilator of the maximal ideal") {
  FiniteRing r = build_ring("Z8");
  RingAnalysis a = analyze_ring(r);
  CHECK(a.is_local);
  CHECK(a.is_colocal);
  REQUIRE(a.colocal_core.has_value());
  CHECK(*a.colocal_core == std::vector<int>{0, 4});
  CHECK(a.nilradical == std::vector<int>{0, 2, 4, 6});
  CHECK(a.nilpotent_index[2] == 3);
}

TEST_CASE("fields are vacuously colocal without a core") {
  FiniteRing r = build_ring("GF(9)");
  RingAnalysis a = analyze_ring(r);
  CHECK(a.is_field);
  CHECK(a.is_local);
  CHECK(a.is_colocal);
  CHECK_FALSE(a.colocal_core.has_value());
  CHECK(a.zero_divisors_star.empty());
  CHECK(a.units.size() == 8);
  CHECK(a.characteristic == 3);
  CHECK(a.is_reduced);
}

TEST_CASE("product characteristic is the lcm of the factors") {
  FiniteRing r = build_ring("Z2xZ9");
  RingAnalysis a = analyze_ring(r);
  CHECK(a.characteristic == 18);
  CHECK(a.units.size() == 6);
  CHECK(a.zero_divisors_star.size() == 11);
  CHECK_FALSE(a.is_reduced);  // (0,3) squares to zero
  CHECK_FALSE(a.is_local);
}

TEST_CASE("full annihilator set singles out the star centers") {
  // In Z8 only 4 annihilates every zero divisor.
  FiniteRing r = build_ring("Z8");
  RingAnalysis a = analyze_ring(r);
  CHECK(a.full_annihilator_set == std::vector<int>{4});

  // In Z2[x]/(x^3) the center is x^2.
  FiniteRing q = build_ring("Z2[x]/(x^3)");
  RingAnalysis qa = analyze_ring(q);
  CHECK(qa.full_annihilator_set.size() == 1);
  CHECK(q.labels[qa.full_annihilator_set[0]] == "x^2");
}
