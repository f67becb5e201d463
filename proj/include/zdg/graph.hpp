#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zdg/bitset.hpp"
#include "zdg/ring.hpp"

namespace zdg {

// Zero-divisor graph: vertices are the proper zero divisors of a ring, edges
// join distinct elements whose product is zero. Simple and undirected; a
// vertex with v*v = 0 is flagged instead of looped.
struct ZeroDivisorGraph {
  int vertex_count = 0;
  std::string ring_descriptor;
  std::vector<int> vertex_elements;     // ring element index per vertex
  std::vector<std::string> labels;
  std::vector<Bits> adj;
  std::vector<int> degree;
  std::vector<char> self_annihilating;  // v*v == 0
};

ZeroDivisorGraph build_zdg(const FiniteRing& r);

// Number of neighbors of v inside s. v's own membership does not matter.
int subset_degree(const ZeroDivisorGraph& g, const Bits& s, int v);

// Partition of the vertices into interchangeability classes: vertices with
// equal open neighborhoods, and among the rest vertices with equal closed
// neighborhoods. Any permutation within a class is a graph automorphism.
// Classes are sorted internally; their order is deterministic.
std::vector<std::vector<int>> twin_classes(const ZeroDivisorGraph& g);

// Shape recognition for the families the classification results talk about.
struct StructureReport {
  bool is_complete = false;                   // K_n (true for K_1)
  bool is_star = false;                       // K_{1,t}, t >= 1
  std::optional<int> star_center;
  bool is_complete_bipartite = false;         // K_{m,n}; K_2 sets this and is_complete
  std::optional<std::pair<int, int>> bipartition_sizes;  // (smaller, larger)
  bool is_4book = false;  // pages of size 3-4 glued along two common vertices
  std::optional<std::pair<int, int>> book_centers;
  std::vector<std::vector<int>> book_pages;   // each sorted, centers included
  bool book_centers_adjacent = false;
  int min_degree = 0;
};

StructureReport recognize_structure(const ZeroDivisorGraph& g);

// Deterministic, byte-stable rendering. Formats: "dot", "json".
std::string export_graph(const ZeroDivisorGraph& g, const std::string& format);

}  // namespace zdg
