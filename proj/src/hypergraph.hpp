#pragma once

#include <vector>

#include "template.hpp"

namespace ahg::tmpl {

// k-uniform hypergraph on integer vertex ids. Edges are sorted k-sets, the
// edge list itself sorted; equality is structural.
struct FiniteHypergraph {
  int k = 0;
  std::vector<int> vertices;
  std::vector<std::vector<int>> edges;

  bool operator==(const FiniteHypergraph&) const = default;
};

// Finite product grid. Vertex ids are row-major flattened coordinates.
struct Grid {
  std::vector<int> sizes;

  explicit Grid(std::vector<int> sizes_);
  long long count() const;
  int flatten(const std::vector<int>& coords) const;
  std::vector<int> unflatten(int id) const;
  std::vector<std::vector<int>> all_points() const;
};

enum class HgRoute {
  subset_scan,   // scan all k-subsets of the grid, keep homomorphic images
  block_assign,  // assign grid values to template blocks, collect distinct images
};

// L(grid, t): edges are the k-subsets of the grid that are homomorphic images
// of t. edge_cap bounds the number of scanned subsets (subset_scan) or
// generated assignments (block_assign); exceeding it is an error, never a
// silent truncation.
FiniteHypergraph template_hypergraph(const Template& t, const std::vector<int>& sizes,
                                     long long edge_cap, HgRoute route = HgRoute::subset_scan);

// Exact chromatic number by backtracking. node_cap bounds the search tree.
int chromatic_number_finite(const FiniteHypergraph& h, long long node_cap = 50'000'000);

}  // namespace ahg::tmpl
