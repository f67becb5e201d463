#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zdg/descriptor.hpp"

namespace zdg {

// Finite commutative ring with identity, given by full operation tables.
// Elements are dense indices 0..order-1; zero and one are element indices.
struct FiniteRing {
  int order = 0;
  int zero = 0;
  int one = 0;
  RingDescriptor descriptor;
  std::string descriptor_string;        // canonical form
  std::vector<std::string> labels;      // one human-readable label per element
  std::vector<uint16_t> add_table;      // order*order, row-major
  std::vector<uint16_t> mul_table;

  int add(int a, int b) const { return add_table[a * order + b]; }
  int mul(int a, int b) const { return mul_table[a * order + b]; }
};

inline constexpr int kDefaultOrderCap = 4096;

// Builds the ring named by a descriptor. Throws OrderCapExceeded when the
// result (or, for quotients, the polynomial carrier m^slots that has to be
// materialized) would exceed the cap, and NotUnital when a quotient collapses
// to the zero ring.
FiniteRing build_ring(const RingDescriptor& d, int order_cap = kDefaultOrderCap);
FiniteRing build_ring(const std::string& descriptor_text, int order_cap = kDefaultOrderCap);

// Verifies commutative unital ring axioms: exhaustive triple scan for
// order <= 64, deterministic sampled scan above. Throws MalformedDescriptor
// with the violated law on failure.
void check_ring_axioms(const FiniteRing& r);

// Ann(x) = { u : u*x = 0 }, ascending element indices.
std::vector<int> annihilator(const FiniteRing& r, int x);

enum class ElementKind { Zero, Unit, ZeroDivisor };

struct ElementClass {
  ElementKind kind;
  std::optional<int> nilpotent_index;  // smallest k >= 1 with x^k = 0, when nilpotent
};

ElementClass classify_element(const FiniteRing& r, int x);

// Smallest t >= 1 with t*x = 0.
int additive_order(const FiniteRing& r, int x);

}  // namespace zdg
