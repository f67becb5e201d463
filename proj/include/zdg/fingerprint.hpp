#pragma once

#include <string>
#include <vector>

#include "zdg/graph.hpp"
#include "zdg/ring.hpp"

namespace zdg {

// Invariant bundle used to compare rings across different presentations.
// Two isomorphic rings always produce equal fingerprints; the canonical
// graph form makes the last component exact for the graphs themselves.
struct Fingerprint {
  int order = 0;
  int characteristic = 0;
  int unit_count = 0;
  int zero_divisor_count = 0;            // proper zero divisors
  std::vector<int> nilpotent_indices;    // sorted, one entry per nilpotent
  std::vector<int> additive_orders;      // sorted, one entry per element
  std::vector<int> degree_sequence;      // sorted vertex degrees
  std::string graph_form;                // canonical form of the graph

  bool operator==(const Fingerprint&) const = default;
  std::string to_string() const;
};

Fingerprint fingerprint(const FiniteRing& r);

// Canonical string for a graph: collapse twin classes to a weighted quotient
// (class size plus whether the class is internally a clique), then take the
// lexicographically least encoding over admissible node orders. Equal strings
// hold exactly for isomorphic graphs.
std::string canonical_graph_form(const ZeroDivisorGraph& g);

// Exact isomorphism test by backtracking over structure-preserving
// bijections. Intended for small orders; cost grows quickly with size.
bool rings_isomorphic(const FiniteRing& a, const FiniteRing& b);

}  // namespace zdg
