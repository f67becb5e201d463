#pragma once

#include <optional>
#include <vector>

#include "zdg/ring.hpp"

namespace zdg {

// Structural facts about a ring that the checks consume. All element lists
// are ascending index order.
struct RingAnalysis {
  std::vector<int> units;
  std::vector<int> zero_divisors_star;   // proper zero divisors, 0 excluded
  std::vector<int> nilradical;           // includes 0
  std::vector<int> nilpotent_index;      // per element; 0 when not nilpotent
  std::vector<int> additive_orders;      // per element
  int characteristic = 0;
  bool is_field = false;
  bool is_local = false;                 // Z(R) closed under addition
  std::optional<std::vector<int>> maximal_ideal;  // Z(R)* U {0} when local
  bool is_colocal = false;               // unique minimal nonzero ideal (fields: vacuously)
  std::optional<std::vector<int>> colocal_core;   // absent for fields
  std::vector<int> full_annihilator_set; // X* = { x in Z(R)* : Ann(x) = Z(R) }
  bool is_reduced = false;
};

RingAnalysis analyze_ring(const FiniteRing& r);

}  // namespace zdg
