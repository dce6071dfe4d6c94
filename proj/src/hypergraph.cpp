#include "hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "error.hpp"

namespace ahg::tmpl {

Grid::Grid(std::vector<int> sizes_) : sizes(std::move(sizes_)) {
  if (sizes.empty()) fail(Errc::invalid, "grid needs at least one axis");
  for (int m : sizes)
    if (m < 1) fail(Errc::invalid, "grid axis sizes must be >= 1");
}

long long Grid::count() const {
  long long n = 1;
  for (int m : sizes) {
    n *= m;
    if (n > (1ll << 40)) fail(Errc::budget, "grid too large");
  }
  return n;
}

int Grid::flatten(const std::vector<int>& coords) const {
  int id = 0;
  for (size_t i = 0; i < sizes.size(); ++i) id = id * sizes[i] + coords[i];
  return id;
}

std::vector<int> Grid::unflatten(int id) const {
  std::vector<int> coords(sizes.size());
  for (int i = static_cast<int>(sizes.size()) - 1; i >= 0; --i) {
    coords[i] = id % sizes[i];
    id /= sizes[i];
  }
  return coords;
}

std::vector<std::vector<int>> Grid::all_points() const {
  long long n = count();
  std::vector<std::vector<int>> pts;
  pts.reserve(n);
  for (long long id = 0; id < n; ++id) pts.push_back(unflatten(static_cast<int>(id)));
  return pts;
}

namespace {

long long binomial(long long n, int k) {
  if (k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > (1ll << 60)) return 1ll << 60;
  }
  return r;
}

FiniteHypergraph by_subset_scan(const Template& t, const Grid& grid, long long edge_cap) {
  const int k = t.k();
  const long long n = grid.count();
  if (binomial(n, k) > edge_cap)
    fail(Errc::budget, "edge enumeration budget exceeded: C(" + std::to_string(n) + "," +
                           std::to_string(k) + ") subsets");
  std::vector<std::vector<int>> pts = grid.all_points();
  FiniteHypergraph h;
  h.k = k;
  h.vertices.resize(n);
  std::iota(h.vertices.begin(), h.vertices.end(), 0);
  std::vector<int> comb(k);
  std::iota(comb.begin(), comb.end(), 0);
  if (n < k) return h;
  while (true) {
    std::vector<std::vector<int>> sel;
    sel.reserve(k);
    for (int i : comb) sel.push_back(pts[i]);
    if (is_homomorphic_image(t, sel)) h.edges.push_back(comb);
    int i = k - 1;
    while (i >= 0 && comb[i] == static_cast<int>(n) - k + i) --i;
    if (i < 0) break;
    ++comb[i];
    for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
  }
  return h;
}

FiniteHypergraph by_block_assign(const Template& t, const Grid& grid, long long edge_cap) {
  const int k = t.k();
  const int d = t.d();
  const long long n = grid.count();
  if (static_cast<int>(grid.sizes.size()) != d)
    fail(Errc::arity, "grid dimension must match template dimension");
  long long total = 1;
  for (int i = 0; i < d; ++i) {
    for (int b = 0; b < t.blocks(i); ++b) {
      total *= grid.sizes[i];
      if (total > edge_cap) fail(Errc::budget, "edge enumeration budget exceeded");
    }
  }

  FiniteHypergraph h;
  h.k = k;
  h.vertices.resize(n);
  std::iota(h.vertices.begin(), h.vertices.end(), 0);

  // Odometer over one value per (coordinate, block).
  std::vector<std::pair<int, int>> slots;  // (coord, block)
  for (int i = 0; i < d; ++i)
    for (int b = 0; b < t.blocks(i); ++b) slots.emplace_back(i, b);
  std::vector<int> val(slots.size(), 0);
  std::set<std::vector<int>> edges;
  while (true) {
    // image of point p: coordinate i = value assigned to p's block
    std::vector<int> ids(k);
    bool distinct = true;
    {
      std::vector<std::vector<int>> img(k, std::vector<int>(d));
      for (size_t s = 0; s < slots.size(); ++s) {
        auto [i, b] = slots[s];
        for (int p = 0; p < k; ++p)
          if (t.parts()[i][p] == b) img[p][i] = val[s];
      }
      for (int p = 0; p < k && distinct; ++p)
        for (int q = p + 1; q < k; ++q)
          if (img[p] == img[q]) {
            distinct = false;
            break;
          }
      if (distinct)
        for (int p = 0; p < k; ++p) ids[p] = grid.flatten(img[p]);
    }
    if (distinct) {
      std::sort(ids.begin(), ids.end());
      edges.insert(ids);
    }
    size_t s = 0;
    while (s < slots.size() && ++val[s] == grid.sizes[slots[s].first]) val[s++] = 0;
    if (s == slots.size()) break;
  }
  h.edges.assign(edges.begin(), edges.end());
  return h;
}

}  // namespace

FiniteHypergraph template_hypergraph(const Template& t, const std::vector<int>& sizes,
                                     long long edge_cap, HgRoute route) {
  Grid grid(sizes);
  if (static_cast<int>(sizes.size()) != t.d())
    fail(Errc::arity, "grid dimension must match template dimension");
  FiniteHypergraph h = route == HgRoute::subset_scan ? by_subset_scan(t, grid, edge_cap)
                                                     : by_block_assign(t, grid, edge_cap);
  std::sort(h.edges.begin(), h.edges.end());
  return h;
}

int chromatic_number_finite(const FiniteHypergraph& h, long long node_cap) {
  if (h.vertices.empty()) fail(Errc::invalid, "chromatic number needs a nonempty vertex set");
  const int n = static_cast<int>(h.vertices.size());
  // vertex id -> position
  std::vector<int> pos_of(n);
  {
    std::vector<int> sorted = h.vertices;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < n; ++i) pos_of[i] = sorted[i];
  }
  // edges as positions into the vertex ordering
  std::vector<std::vector<int>> edges;
  for (const auto& e : h.edges) {
    std::vector<int> pe;
    for (int v : e) {
      auto it = std::lower_bound(pos_of.begin(), pos_of.end(), v);
      if (it == pos_of.end() || *it != v) fail(Errc::invalid, "edge vertex missing");
      pe.push_back(static_cast<int>(it - pos_of.begin()));
    }
    std::sort(pe.begin(), pe.end());
    edges.push_back(pe);
  }
  // edges ending at each vertex position, for incremental checking
  std::vector<std::vector<int>> ending(n);
  for (size_t ei = 0; ei < edges.size(); ++ei) ending[edges[ei].back()].push_back(static_cast<int>(ei));

  long long nodes = 0;
  std::vector<int> color(n, -1);
  auto feasible = [&](auto&& self, int v, int c) -> bool {
    if (++nodes > node_cap) fail(Errc::budget, "coloring search budget exceeded");
    if (v == n) return true;
    int used = 0;
    for (int i = 0; i < v; ++i) used = std::max(used, color[i] + 1);
    for (int col = 0; col < std::min(c, used + 1); ++col) {
      color[v] = col;
      bool ok = true;
      for (int ei : ending[v]) {
        bool mono = true;
        for (int p : edges[ei])
          if (color[p] != col) {
            mono = false;
            break;
          }
        if (mono) {
          ok = false;
          break;
        }
      }
      if (ok && self(self, v + 1, c)) return true;
      color[v] = -1;
    }
    return false;
  };
  for (int c = 1; c <= n; ++c) {
    std::fill(color.begin(), color.end(), -1);
    if (feasible(feasible, 0, c)) return c;
  }
  fail(Errc::invalid, "no proper coloring found");  // unreachable: n colors always work
}

}  // namespace ahg::tmpl
