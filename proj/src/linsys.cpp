#include "linsys.hpp"

#include <algorithm>

#include "error.hpp"

namespace ahg::lin {

int Echelon::reduce(std::vector<Rat>& a, Rat& c) const {
  while (true) {
    int lead = -1;
    for (int i = 0; i < n_; ++i)
      if (a[i] != 0) {
        lead = i;
        break;
      }
    if (lead == -1) return -1;
    const Row* match = nullptr;
    for (const Row& r : rows_)
      if (r.pivot == lead) {
        match = &r;
        break;
      }
    if (!match) return lead;
    Rat f = a[lead] / match->a[lead];
    for (int i = lead; i < n_; ++i)
      if (match->a[i] != 0) a[i] -= f * match->a[i];
    a[lead] = 0;  // guard against drift; exact arithmetic makes this a no-op
    c -= f * match->c;
  }
}

Echelon::AddResult Echelon::add(std::vector<Rat> a, Rat c) {
  if (static_cast<int>(a.size()) != n_) fail(Errc::arity, "row width mismatch");
  int lead = reduce(a, c);
  if (lead == -1) return c == 0 ? AddResult::redundant : AddResult::inconsistent;
  rows_.push_back(Row{std::move(a), std::move(c), lead});
  return AddResult::added;
}

bool Echelon::implies(std::vector<Rat> a, Rat c) const {
  if (static_cast<int>(a.size()) != n_) fail(Errc::arity, "row width mismatch");
  return reduce(a, c) == -1 && c == 0;
}

void Echelon::rollback(size_t nrows) {
  if (nrows > rows_.size()) fail(Errc::contract, "rollback beyond current size");
  rows_.resize(nrows);
}

Echelon::Solution Echelon::solve() const {
  // Fresh reduced row echelon over a copy of the rows.
  std::vector<std::vector<Rat>> m;
  for (const Row& r : rows_) {
    std::vector<Rat> row = r.a;
    row.push_back(r.c);
    m.push_back(std::move(row));
  }
  std::vector<int> pivot_of_col(n_, -1);
  int rank = 0;
  for (int col = 0; col < n_ && rank < static_cast<int>(m.size()); ++col) {
    int sel = -1;
    for (int r = rank; r < static_cast<int>(m.size()); ++r)
      if (m[r][col] != 0) {
        sel = r;
        break;
      }
    if (sel == -1) continue;
    std::swap(m[rank], m[sel]);
    Rat inv = 1 / m[rank][col];
    for (int j = col; j <= n_; ++j) m[rank][j] *= inv;
    for (int r = 0; r < static_cast<int>(m.size()); ++r) {
      if (r == rank || m[r][col] == 0) continue;
      Rat f = m[r][col];
      for (int j = col; j <= n_; ++j) m[r][j] -= f * m[rank][j];
    }
    pivot_of_col[col] = rank;
    ++rank;
  }
  for (int r = rank; r < static_cast<int>(m.size()); ++r)
    if (m[r][n_] != 0) fail(Errc::contract, "solve() called on an inconsistent system");

  Solution s;
  s.particular.assign(n_, Rat(0));
  for (int col = 0; col < n_; ++col)
    if (pivot_of_col[col] != -1) s.particular[col] = m[pivot_of_col[col]][n_];
  for (int col = 0; col < n_; ++col) {
    if (pivot_of_col[col] != -1) continue;
    std::vector<Rat> v(n_, Rat(0));
    v[col] = 1;
    for (int c2 = 0; c2 < n_; ++c2)
      if (pivot_of_col[c2] != -1) v[c2] = -m[pivot_of_col[c2]][col];
    s.null_basis.push_back(std::move(v));
  }
  return s;
}

}  // namespace ahg::lin
