#pragma once

#include <string>
#include <vector>

namespace zdg {

struct CatalogEntry {
  std::string name;        // unique label; equals the canonical descriptor
  std::string descriptor;  // canonical descriptor string
  int order = 0;
  std::string provenance;  // "named" entries back the classification lists
};

// Deterministic list of study rings: cyclic rings Z_n, small Galois fields,
// products of two and three small fields, the quotient rings from the
// classification lists, and a grid of field x small-ring products. One entry
// per distinct canonical descriptor; ring order filtered to max_order.
// Requires max_order >= 4.
std::vector<CatalogEntry> catalog(int max_order);

// Rings whose graph has offensive alliance number one: seven individual
// rings plus Z2 x F for every field order in {2,...,9}. Canonical strings.
std::vector<std::string> gamma_one_rings();

// Rings whose graph has offensive alliance number two: seventeen individual
// rings plus Z3 x K for every field order in {3,...,9}.
std::vector<std::string> gamma_two_rings();

// "Z<q>" for prime q, "GF(<q>)" for proper prime powers.
std::string field_descriptor(int q);

inline constexpr int kSmallFieldOrders[] = {2, 3, 4, 5, 7, 8, 9};

}  // namespace zdg
