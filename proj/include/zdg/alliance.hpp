#pragma once

#include <optional>
#include <vector>

#include "zdg/graph.hpp"

namespace zdg {

// Global offensive alliance S: every vertex outside S has strictly more
// neighbors inside S than outside, i.e. at least floor(d/2) + 1 inside.
// Global defensive alliance S: S is dominating and every member has at
// least floor(d/2) neighbors inside S.
enum class AllianceKind { Offensive, Defensive };

bool is_offensive_alliance(const ZeroDivisorGraph& g,
                           const std::vector<int>& members);
bool is_defensive_alliance(const ZeroDivisorGraph& g,
                           const std::vector<int>& members);

struct AllianceResult {
  AllianceKind kind = AllianceKind::Offensive;
  int number = 0;                 // minimum alliance size
  std::vector<int> witness;       // lexicographically least minimum alliance
  std::optional<std::vector<std::vector<int>>> all_minimum;
  bool enumeration_truncated = false;
  long long nodes_explored = 0;
};

inline constexpr long long kDefaultNodeBudget = 20'000'000;
inline constexpr int kDefaultEnumerationCap = 10'000;

// Exact minimum by branch and bound: greedy upper bound, unit propagation
// over per-vertex demand counters, deficit lower bounds and interchangeable-
// vertex (twin) pruning, then a second pass that extracts the
// lexicographically least witness of optimal size. Throws when the
// deterministic node budget runs out.
AllianceResult solve_min_alliance(const ZeroDivisorGraph& g, AllianceKind kind,
                                  long long node_budget = kDefaultNodeBudget);

// All minimum alliances in lexicographic order, up to `cap` of them. Twin
// pruning stays off here so every witness is listed. Sets
// enumeration_truncated instead of failing when the cap or budget is hit.
AllianceResult enumerate_min_alliances(const ZeroDivisorGraph& g,
                                       AllianceKind kind,
                                       int cap = kDefaultEnumerationCap,
                                       long long node_budget = kDefaultNodeBudget);

// Reference implementation: try every vertex subset by size then
// lexicographic order. Only for graphs with at most 24 vertices.
AllianceResult brute_force_min_alliance(const ZeroDivisorGraph& g,
                                        AllianceKind kind);

}  // namespace zdg
