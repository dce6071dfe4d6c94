#pragma once

namespace ahg {

// Search budgets. Results are deterministic for a fixed budget; the time
// budget is the one knob that can make a run machine-dependent, so it
// defaults to off and is recorded in every report.
struct Budget {
  int grid_max = 8;                       // largest M tried per template refutation
  long long edge_cap = 2'000'000;         // cap on scanned k-subsets per hypergraph
  long long branch_cap = 4'000'000;       // cap on explored branch nodes per refutation
  int affine_height = 2;                  // rational coefficient height of affine catalog
  int curve_degree = 3;                   // max degree of univariate curve catalog
  int curve_height = 1;                   // integer coefficient bound of curve catalog
  int rational_height = 2;                // value height for the sat-only rational search
  long long rational_nodes = 2'000'000;   // node cap for the rational search
  int catalog_slice = 64;                 // immersion candidates per dovetail turn
  int time_budget_seconds = 0;            // 0 = unlimited
};

}  // namespace ahg
