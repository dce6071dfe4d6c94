#pragma once

#include <vector>

#include "rat.hpp"

namespace ahg::lin {

// Incremental exact linear system a.x = c over Q, kept in row echelon form
// with distinct pivot columns. Rows are only appended, so a branch search can
// roll back by truncating to an earlier size.
class Echelon {
 public:
  explicit Echelon(int ncols) : n_(ncols) {}

  enum class AddResult { redundant, added, inconsistent };

  // Reduces the equation against the current rows. `inconsistent` rows are
  // not stored; the caller treats the branch as dead.
  AddResult add(std::vector<Rat> a, Rat c);

  // Whether a.x = c holds on the whole solution space.
  bool implies(std::vector<Rat> a, Rat c) const;

  size_t size() const { return rows_.size(); }
  void rollback(size_t nrows);
  int ncols() const { return n_; }

  struct Solution {
    std::vector<Rat> particular;            // free variables set to 0
    std::vector<std::vector<Rat>> null_basis;  // one vector per free column
  };
  Solution solve() const;

 private:
  struct Row {
    std::vector<Rat> a;
    Rat c;
    int pivot;
  };

  // Returns the leading column of the reduced row, or -1 if it vanished.
  int reduce(std::vector<Rat>& a, Rat& c) const;

  int n_;
  std::vector<Row> rows_;
};

}  // namespace ahg::lin
