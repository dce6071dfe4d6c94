#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <tuple>

#include "error.hpp"
#include "hypergraph.hpp"
#include "jsonio.hpp"
#include "template.hpp"

using namespace ahg;
using namespace ahg::tmpl;

namespace {

Template grid4() {
  // (0,0),(0,1),(1,0),(1,1): coord 0 blocks {01}{23}, coord 1 blocks {02}{13}
  return Template(4, 2, {{0, 0, 1, 1}, {0, 1, 0, 1}});
}

// Labeled brute force: all d-tuples of set partitions with singleton meet.
std::vector<std::vector<std::vector<int>>> labeled_tuples(int k, int d) {
  std::vector<std::vector<int>> rgs;
  std::vector<int> cur(k, 0);
  auto rec = [&](auto&& self, int p, int mx) -> void {
    if (p == k) {
      rgs.push_back(cur);
      return;
    }
    for (int b = 0; b <= mx + 1; ++b) {
      cur[p] = b;
      self(self, p + 1, std::max(mx, b));
    }
  };
  rec(rec, 0, -1);
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<int> idx(d, 0);
  while (true) {
    std::vector<std::vector<int>> tuple;
    for (int i = 0; i < d; ++i) tuple.push_back(rgs[idx[i]]);
    bool ok = true;
    for (int p = 0; p < k && ok; ++p)
      for (int q = p + 1; q < k; ++q) {
        bool split = false;
        for (const auto& part : tuple)
          if (part[p] != part[q]) split = true;
        if (!split) {
          ok = false;
          break;
        }
      }
    if (ok) out.push_back(tuple);
    int i = d - 1;
    while (i >= 0 && ++idx[i] == static_cast<int>(rgs.size())) idx[i--] = 0;
    if (i < 0) break;
  }
  return out;
}

// Independent distinguisher oracle over realized tuples.
int brute_min_distinguisher(const Template& t) {
  auto pts = realize(t);
  int best = t.d() + 1;
  for (int mask = 1; mask < (1 << t.d()); ++mask) {
    bool distinguishes = true;
    for (size_t a = 0; a < pts.size() && distinguishes; ++a)
      for (size_t b = a + 1; b < pts.size(); ++b) {
        bool split = false;
        for (int i = 0; i < t.d(); ++i)
          if ((mask >> i) & 1 && pts[a][i] != pts[b][i]) split = true;
        if (!split) {
          distinguishes = false;
          break;
        }
      }
    if (distinguishes) best = std::min(best, __builtin_popcount(mask));
  }
  return best;
}

bool brute_is_hom_image(const Template& t, const std::vector<std::vector<int>>& pts) {
  std::vector<int> perm(t.k());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int a = 0; a < t.k() && ok; ++a)
      for (int b = 0; b < t.k() && ok; ++b)
        for (int i = 0; i < t.d(); ++i)
          if (t.parts()[i][a] == t.parts()[i][b] && pts[perm[a]][i] != pts[perm[b]][i]) {
            ok = false;
            break;
          }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

Template random_template(std::mt19937& rng, int k, int d) {
  while (true) {
    std::vector<std::vector<int>> parts(d, std::vector<int>(k));
    for (int i = 0; i < d; ++i)
      for (int p = 0; p < k; ++p) parts[i][p] = static_cast<int>(rng() % k);
    try {
      return Template(k, d, parts);
    } catch (const Error&) {
      // meet not singleton; retry
    }
  }
}

}  // namespace

TEST_CASE("template validation") {
  CHECK_THROWS_AS(Template(3, 1, {{0, 0, 1}}), Error);             // two points collide
  CHECK_THROWS_AS(Template(3, 2, {{0, 0, 0}, {0, 1, 1}}), Error);  // points 1,2 collide
  CHECK_THROWS_AS(Template(1, 1, {{0}}), Error);                   // k too small
  CHECK_NOTHROW(Template(3, 2, {{0, 0, 1}, {0, 1, 0}}));
}

TEST_CASE("canonicalize is idempotent and constant on orbits") {
  Template t(3, 1, {{0, 1, 2}});
  CHECK(canonicalize(t) == t);  // only 1-dim 3-template

  Template g = grid4();
  CHECK(canonicalize(g) == g);

  // all 24 relabelings canonicalize to one image
  std::vector<int> perm(4);
  std::iota(perm.begin(), perm.end(), 0);
  std::set<std::string> images;
  do {
    std::vector<std::vector<int>> parts(2, std::vector<int>(4));
    for (int i = 0; i < 2; ++i)
      for (int p = 0; p < 4; ++p) parts[i][p] = g.parts()[i][perm[p]];
    images.insert(canonicalize(Template(4, 2, parts)).key());
  } while (std::next_permutation(perm.begin(), perm.end()));
  CHECK(images.size() == 1);
  CHECK(*images.begin() == g.key());

  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    Template t2 = random_template(rng, 2 + static_cast<int>(rng() % 4), 1 + static_cast<int>(rng() % 3));
    Template c = canonicalize(t2);
    CHECK(canonicalize(c) == c);
  }
}

TEST_CASE("enumerate_templates matches labeled brute force") {
  CHECK(enumerate_templates(2, 1).size() == 1);
  CHECK(enumerate_templates(3, 1).size() == 1);

  for (auto [k, d] : std::vector<std::pair<int, int>>{{3, 2}, {4, 2}, {4, 3}}) {
    auto tuples = labeled_tuples(k, d);
    std::set<std::string> orbit_reps;
    for (const auto& tuple : tuples)
      orbit_reps.insert(canonicalize(Template(k, d, tuple)).key());
    auto enumerated = enumerate_templates(k, d);
    CHECK(enumerated.size() == orbit_reps.size());
    for (const auto& t : enumerated) {
      CHECK(orbit_reps.count(t.key()) == 1);
      CHECK(canonicalize(t) == t);
    }
    CHECK(std::is_sorted(enumerated.begin(), enumerated.end(),
                         [](const Template& a, const Template& b) { return a < b; }));
  }
}

TEST_CASE("distinguisher bounds and brute-force agreement") {
  CHECK(min_distinguisher(Template(5, 1, {{0, 1, 2, 3, 4}})).e == 1);
  auto dist = min_distinguisher(grid4());
  CHECK(dist.e == 2);
  CHECK(dist.coords == std::vector<int>{0, 1});

  std::mt19937 rng(11);
  for (int trial = 0; trial < 120; ++trial) {
    int k = 2 + static_cast<int>(rng() % 4);  // up to 5
    int d = 1 + static_cast<int>(rng() % 3);
    Template t = random_template(rng, k, d);
    CHECK(min_distinguisher(t).e == brute_min_distinguisher(t));
  }

  // 1 <= e <= min(d, k-1) across enumerations, k up to 6
  for (auto [k, d] : std::vector<std::pair<int, int>>{{3, 2}, {4, 2}, {4, 3}, {5, 2}, {5, 3}, {6, 2}}) {
    for (const auto& t : enumerate_templates(k, d)) {
      int e = min_distinguisher(t).e;
      CHECK(e >= 1);
      CHECK(e <= std::min(d, k - 1));
    }
  }
}

TEST_CASE("collapse: identity, full merge, and monotone distinguisher") {
  Template g = grid4();
  std::vector<int> id{0, 1};
  CHECK(collapse(g, Surjection(2, id)) == canonicalize(g));
  Template merged = collapse(g, Surjection(2, {0, 0}));
  CHECK(merged.d() == 1);
  CHECK(merged == Template(4, 1, {{0, 1, 2, 3}}));

  for (auto [k, d] : std::vector<std::pair<int, int>>{{3, 2}, {4, 2}, {4, 3}}) {
    for (const auto& t : enumerate_templates(k, d)) {
      for (const auto& pi : Surjection::enumerate_rgs(d)) {
        Template c = collapse(t, pi);
        CHECK(min_distinguisher(c).e <= min_distinguisher(t).e);
        CHECK(c.k() == t.k());
        CHECK(c.d() == pi.m);
      }
    }
  }
}

TEST_CASE("homomorphic image agrees with bijection brute force") {
  Template g = grid4();
  // a realization of the template itself
  CHECK(is_homomorphic_image(g, realize(g)));
  // all first coordinates equal, tuples distinct: merging allowed
  std::vector<std::vector<int>> merged{{0, 0}, {0, 1}, {0, 2}, {0, 3}};
  CHECK(is_homomorphic_image(g, merged) == brute_is_hom_image(g, merged));
  // block counts cannot increase: coord-0 split finer than any coarsening
  Template one_block_coord0(3, 2, {{0, 0, 0}, {0, 1, 2}});
  std::vector<std::vector<int>> split{{0, 0}, {1, 1}, {1, 2}};
  CHECK_FALSE(is_homomorphic_image(one_block_coord0, split));

  CHECK_THROWS_AS(is_homomorphic_image(g, {{0, 0}, {0, 0}, {1, 0}, {1, 1}}), Error);

  std::mt19937 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    int k = 2 + static_cast<int>(rng() % 3);
    int d = 1 + static_cast<int>(rng() % 2);
    Template t = random_template(rng, k, d);
    const int range = std::max(3, k);  // enough distinct tuples in every dimension
    std::set<std::vector<int>> used;
    std::vector<std::vector<int>> pts;
    while (static_cast<int>(pts.size()) < k) {
      std::vector<int> p(d);
      for (int i = 0; i < d; ++i) p[i] = static_cast<int>(rng() % range);
      if (used.insert(p).second) pts.push_back(p);
    }
    CHECK(is_homomorphic_image(t, pts) == brute_is_hom_image(t, pts));
  }
}

TEST_CASE("realize round-trips through template_of_points") {
  CHECK(realize(Template(3, 1, {{0, 1, 2}})) ==
        std::vector<std::vector<int>>{{0}, {1}, {2}});
  CHECK(realize(grid4()) == std::vector<std::vector<int>>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});

  std::mt19937 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    int k = 2 + static_cast<int>(rng() % 4);
    int d = 1 + static_cast<int>(rng() % 3);
    Template t = random_template(rng, k, d);
    CHECK(canonicalize(template_of_points(realize(t))) == canonicalize(t));
  }
}

TEST_CASE("template hypergraph: complete pattern, empty grids, cross-check") {
  // 1-dim pattern on M vertices is the complete k-hypergraph
  for (int k = 2; k <= 4; ++k) {
    std::vector<int> ident(k);
    std::iota(ident.begin(), ident.end(), 0);
    Template t(k, 1, {ident});
    for (int m = k; m <= k + 3; ++m) {
      auto h = template_hypergraph(t, {m}, 1'000'000);
      long long expect = 1;
      for (int i = 1; i <= k; ++i) expect = expect * (m - k + i) / i;
      CHECK(static_cast<long long>(h.edges.size()) == expect);
    }
  }

  // grid too small in every coordinate: no edges
  auto h0 = template_hypergraph(grid4(), {1, 2}, 1000);
  CHECK(h0.edges.empty());

  // single edge on the exact grid
  auto h1 = template_hypergraph(grid4(), {2, 2}, 1000);
  CHECK(h1.edges.size() == 1);
  CHECK(h1.edges[0] == std::vector<int>{0, 1, 2, 3});

  // the two construction routes agree on every small grid
  for (auto [k, d] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {3, 2}, {4, 2}, {4, 3}}) {
    for (const auto& t : enumerate_templates(k, d)) {
      std::vector<int> sizes(d, 1);
      while (true) {
        long long total = 1;
        for (int s : sizes) total *= s;
        if (total <= 16) {
          auto a = template_hypergraph(t, sizes, 1'000'000, HgRoute::subset_scan);
          auto b = template_hypergraph(t, sizes, 1'000'000, HgRoute::block_assign);
          CHECK(a == b);
        }
        int i = d - 1;
        while (i >= 0 && ++sizes[i] == 5) sizes[i--] = 1;
        if (i < 0) break;
      }
    }
  }

  CHECK_THROWS_AS(template_hypergraph(grid4(), {100, 100}, 1000), Error);
}

TEST_CASE("collapse vertex map preserves edges on finite grids") {
  // collapse sends every edge of L(X^d, P) to an edge of L(Y, P^pi);
  // the exhaustive k <= 4, M <= 3 sweep lives in the acceptance suite
  for (auto [k, d, mmax] : std::vector<std::tuple<int, int, int>>{{3, 2, 3}, {4, 2, 3}, {4, 3, 2}}) {
    for (const auto& t : enumerate_templates(k, d)) {
      for (int m = 2; m <= mmax; ++m) {
        std::vector<int> sizes(d, m);
        Grid grid(sizes);
        auto h = template_hypergraph(t, sizes, 2'000'000);
        for (const auto& pi : Surjection::enumerate_rgs(d)) {
          if (pi.m == d) continue;  // identity collapse is trivial
          Template c = collapse(t, pi);
          std::vector<std::vector<int>> group(pi.m);
          for (int i = 0; i < d; ++i) group[pi.map[i]].push_back(i);
          for (const auto& edge : h.edges) {
            std::vector<std::vector<int>> image;
            for (int v : edge) {
              std::vector<int> coords = grid.unflatten(v);
              std::vector<int> y(pi.m);
              for (int j = 0; j < pi.m; ++j) {
                int flat = 0;
                for (int i : group[j]) flat = flat * m + coords[i];
                y[j] = flat;
              }
              image.push_back(y);
            }
            CHECK(is_homomorphic_image(c, image));
          }
        }
      }
    }
  }
}

TEST_CASE("chromatic number: edgeless, complete, and brute force") {
  FiniteHypergraph edgeless{2, {0, 1, 2}, {}};
  CHECK(chromatic_number_finite(edgeless) == 1);

  for (int k = 2; k <= 4; ++k) {
    std::vector<int> ident(k);
    std::iota(ident.begin(), ident.end(), 0);
    Template t(k, 1, {ident});
    for (int m = 2; m <= 7; ++m) {
      auto h = template_hypergraph(t, {m}, 1'000'000);
      int expect = (m + k - 2) / (k - 1);  // ceil(m / (k-1))
      CHECK(chromatic_number_finite(h) == expect);
    }
  }

  // exhaustive oracle on tiny template hypergraphs
  auto brute_chromatic = [](const FiniteHypergraph& h) {
    int n = static_cast<int>(h.vertices.size());
    for (int c = 1; c <= n; ++c) {
      std::vector<int> color(n, 0);
      while (true) {
        bool proper = true;
        for (const auto& e : h.edges) {
          bool mono = true;
          for (size_t i = 1; i < e.size(); ++i)
            if (color[e[i]] != color[e[0]]) mono = false;
          if (mono) {
            proper = false;
            break;
          }
        }
        if (proper) return c;
        int i = n - 1;
        while (i >= 0 && ++color[i] == c) color[i--] = 0;
        if (i < 0) break;
      }
    }
    return n;
  };
  for (auto [k, d] : std::vector<std::pair<int, int>>{{3, 2}, {4, 2}}) {
    for (const auto& t : enumerate_templates(k, d)) {
      std::vector<int> sizes(d, 3);
      long long total = 1;
      for (int s : sizes) total *= s;
      if (total > 9) continue;
      auto h = template_hypergraph(t, sizes, 1'000'000);
      CHECK(chromatic_number_finite(h) == brute_chromatic(h));
    }
  }
}

TEST_CASE("template JSON round-trip and format") {
  io::json j = io::template_to_json(grid4());
  CHECK(j["k"] == 4);
  CHECK(j["d"] == 2);
  CHECK(j["partitions"][0][0] == io::json::array({0, 1}));
  CHECK(io::template_from_json(j) == grid4());

  io::json bad = io::parse_json_text(R"({"k":3,"d":1,"partitions":[[[0,1],[1,2]]]})");
  CHECK_THROWS_AS(io::template_from_json(bad), Error);
}
