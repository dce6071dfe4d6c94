#include <doctest.h>

#include <fstream>
#include <numeric>
#include <random>
#include <set>

#include "embed.hpp"
#include "error.hpp"
#include "jsonio.hpp"

using namespace ahg;
using namespace ahg::embed;

namespace {

poly::PolySpec pair_sums() {
  poly::PolySpec p{4, 1, 0, poly::Poly(4)};
  p.p = poly::Poly::var(4, 0) + poly::Poly::var(4, 1) - poly::Poly::var(4, 2) -
        poly::Poly::var(4, 3);
  return p;
}

poly::PolySpec difference() {
  return poly::PolySpec{2, 1, 0, poly::Poly::var(2, 0) - poly::Poly::var(2, 1)};
}

poly::PolySpec isosceles() {
  poly::PolySpec p{3, 2, 0, poly::Poly(6)};
  poly::Poly acc(6);
  for (int j = 0; j < 2; ++j) {
    poly::Poly d01 = poly::Poly::var(6, 0 + j) - poly::Poly::var(6, 2 + j);
    poly::Poly d12 = poly::Poly::var(6, 2 + j) - poly::Poly::var(6, 4 + j);
    acc = acc + d01 * d01 - d12 * d12;
  }
  p.p = acc;
  return p;
}

tmpl::Template grid4() { return tmpl::Template(4, 2, {{0, 0, 1, 1}, {0, 1, 0, 1}}); }
tmpl::Template complete4() { return tmpl::Template(4, 1, {{0, 1, 2, 3}}); }

EmbeddingWitness sum_witness(const std::vector<long>& svals, const std::vector<long>& tvals) {
  EmbeddingWitness w{grid4(), {2, 2}, {}, {}};
  for (int s = 0; s < 2; ++s)
    for (int t = 0; t < 2; ++t)
      w.assignment[{s, t}] = {Rat(svals[s] + tvals[t])};
  return w;
}

}  // namespace

TEST_CASE("verify_embedding accepts the sum construction and rejects collisions") {
  CHECK(verify_embedding(sum_witness({0, 1}, {0, 10}), pair_sums(), 100000));
  // t values {0,1} collide: 0+1 = 1+0
  CHECK_FALSE(verify_embedding(sum_witness({0, 1}, {0, 1}), pair_sums(), 100000));

  // edgeless grid: any injective assignment is fine
  EmbeddingWitness w{grid4(), {1, 2}, {}, {}};
  w.assignment[{0, 0}] = {Rat(3)};
  w.assignment[{0, 1}] = {Rat(5)};
  CHECK(verify_embedding(w, pair_sums(), 1000));

  // missing grid point
  EmbeddingWitness bad{grid4(), {2, 2}, {}, {}};
  bad.assignment[{0, 0}] = {Rat(0)};
  CHECK_THROWS_AS(verify_embedding(bad, pair_sums(), 1000), Error);
}

TEST_CASE("linear refuter: difference polynomial dies at two points") {
  Budget b;
  auto v = refute_embedding_linear(difference(), {}, tmpl::Template(2, 1, {{0, 1}}), {2}, b);
  CHECK(v.status == OracleVerdict::Status::unsat);
  REQUIRE(v.certificate);
  std::string why;
  CHECK(replay_nonembedding(*v.certificate, difference(), &why));
}

TEST_CASE("linear refuter: grid pattern is satisfiable on the square") {
  Budget b;
  auto v = refute_embedding_linear(pair_sums(), {}, grid4(), {2, 2}, b);
  CHECK(v.status == OracleVerdict::Status::sat);
  REQUIRE(v.witness);
  CHECK(verify_embedding(*v.witness, pair_sums(), 100000));
}

TEST_CASE("linear refuter: complete pattern refutes at some size <= 8") {
  Budget b;
  int refuting_m = 0;
  for (int m = 4; m <= 8 && refuting_m == 0; ++m) {
    auto v = refute_embedding_linear(pair_sums(), {}, complete4(), {m}, b);
    if (v.status == OracleVerdict::Status::unsat) {
      refuting_m = m;
      std::string why;
      CHECK(replay_nonembedding(*v.certificate, pair_sums(), &why));
      CHECK(why.empty());
    } else {
      CHECK(v.status == OracleVerdict::Status::sat);
      CHECK(verify_embedding(*v.witness, pair_sums(), 100000));
    }
  }
  CHECK(refuting_m > 4);  // four points with equal pair sums exist
  CHECK(refuting_m <= 8);

  // verdict monotonicity: every larger grid also refutes
  for (int m = refuting_m; m <= refuting_m + 1; ++m) {
    auto v = refute_embedding_linear(pair_sums(), {}, complete4(), {m}, b);
    CHECK(v.status == OracleVerdict::Status::unsat);
  }
}

TEST_CASE("linear refuter rejects nonlinear input") {
  Budget b;
  CHECK_THROWS_AS(
      refute_embedding_linear(isosceles(), {}, tmpl::Template(3, 1, {{0, 1, 2}}), {3}, b), Error);
}

TEST_CASE("replay rejects tampered transcripts") {
  Budget b;
  OracleVerdict v;
  for (int m = 5; m <= 8; ++m) {
    v = refute_embedding_linear(pair_sums(), {}, complete4(), {m}, b);
    if (v.status == OracleVerdict::Status::unsat) break;
  }
  REQUIRE(v.status == OracleVerdict::Status::unsat);
  io::json j = io::nonembedding_to_json(*v.certificate, pair_sums());
  CHECK(io::verify_any(j).ok);

  // claim a smaller grid than the transcript proves
  io::json tampered = j;
  tampered["sizes"][0] = tampered["sizes"][0].get<int>() - 1;
  CHECK_FALSE(io::verify_any(tampered).ok);

  // drop one branch child
  io::json pruned = j;
  pruned["transcript"]["children"].erase(0);
  CHECK_FALSE(io::verify_any(pruned).ok);

  // flip a polynomial coefficient
  io::json flipped = j;
  flipped["poly"]["terms"][0]["coeff"] = "2";
  CHECK_FALSE(io::verify_any(flipped).ok);
}

TEST_CASE("subspace feasibility agrees with brute force on random linear systems") {
  // random small linear polynomials over k=2 or 3 blocks, n=1; compare the
  // refuter verdict against a brute-force search over an integer grid
  std::mt19937 rng(59);
  Budget b;
  for (int trial = 0; trial < 30; ++trial) {
    int k = 2 + static_cast<int>(rng() % 2);
    poly::PolySpec p{k, 1, 0, poly::Poly(k)};
    poly::Poly acc(k);
    bool nonzero = false;
    for (int i = 0; i < k; ++i) {
      long c = static_cast<long>(rng() % 5) - 2;
      if (c != 0) nonzero = true;
      acc = acc + poly::Poly::var(k, i).scaled(Rat(c));
    }
    if (!nonzero) continue;
    long c0 = static_cast<long>(rng() % 3) - 1;
    p.p = acc + poly::Poly::constant(k, Rat(c0));

    std::vector<int> ident(k);
    std::iota(ident.begin(), ident.end(), 0);
    tmpl::Template t(k, 1, {ident});
    int m = k + (trial % 2);
    auto v = refute_embedding_linear(p, {}, t, {m}, b);

    // brute force: all injective maps {0..m-1} -> {-4..4}
    bool brute_found = false;
    std::vector<int> vals(m, -4);
    while (!brute_found) {
      std::set<int> used(vals.begin(), vals.end());
      if (static_cast<int>(used.size()) == m) {
        auto h = tmpl::template_hypergraph(t, {m}, 100000);
        bool all_edges = true;
        for (const auto& e : h.edges) {
          std::vector<std::vector<Rat>> pts;
          for (int vid : e) pts.push_back({Rat(vals[vid])});
          if (!poly::edge_predicate(p, {}, pts)) {
            all_edges = false;
            break;
          }
        }
        if (all_edges) brute_found = true;
      }
      int i = m - 1;
      while (i >= 0 && ++vals[i] == 5) vals[i--] = -4;
      if (i < 0) break;
    }
    if (brute_found) CHECK(v.status == OracleVerdict::Status::sat);
    if (v.status == OracleVerdict::Status::unsat) CHECK_FALSE(brute_found);
  }
}

TEST_CASE("extract_injective_subgrid") {
  // already injective: first values per axis
  {
    std::vector<int> table(12);
    std::iota(table.begin(), table.end(), 0);
    auto ys = extract_injective_subgrid({3, 4}, table, 2);
    CHECK(ys == std::vector<std::vector<int>>{{0, 1}, {0, 1}});
  }
  // d=2 sum table needs a spread second axis
  {
    std::vector<int> axes{6, 6};
    std::vector<int> table(36);
    for (int s = 0; s < 6; ++s)
      for (int t = 0; t < 6; ++t) table[s * 6 + t] = s + t;
    auto ys = extract_injective_subgrid(axes, table, 2);
    std::set<int> seen;
    for (int a : ys[0])
      for (int bb : ys[1]) CHECK(seen.insert(table[a * 6 + bb]).second);
  }
  // d=1: any distinct rows
  {
    std::vector<int> table{5, 6, 7, 8};
    auto ys = extract_injective_subgrid({4}, table, 3);
    CHECK(ys[0].size() == 3);
  }
  // precondition: not one-to-one in a coordinate
  {
    std::vector<int> table{1, 1, 2, 3};
    CHECK_THROWS_AS(extract_injective_subgrid({2, 2}, table, 2), Error);
  }
  // randomized coordinate-injective tables always extract
  std::mt19937 rng(61);
  for (int trial = 0; trial < 60; ++trial) {
    int d = 1 + static_cast<int>(rng() % 3);
    std::vector<int> axes(d);
    for (int& a : axes) a = 4 + static_cast<int>(rng() % 9);
    tmpl::Grid g(axes);
    std::vector<int> table(g.count());
    bool coord_injective = false;
    while (!coord_injective) {
      for (auto& v : table) v = static_cast<int>(rng() % 100000);
      coord_injective = true;
      try {
        extract_injective_subgrid(axes, table, 1);
      } catch (const Error&) {
        coord_injective = false;
      }
    }
    int m = 2 + static_cast<int>(rng() % 2);
    auto ys = extract_injective_subgrid(axes, table, m);
    std::set<int> seen;
    std::vector<int> idx(d, 0);
    while (true) {
      std::vector<int> coords(d);
      for (int i = 0; i < d; ++i) coords[i] = ys[i][idx[i]];
      CHECK(seen.insert(table[g.flatten(coords)]).second);
      int i = d - 1;
      while (i >= 0 && ++idx[i] == m) idx[i--] = 0;
      if (i < 0) break;
    }
  }
}

TEST_CASE("rational search finds the isosceles square") {
  Budget b;
  b.rational_height = 1;
  auto v = search_embedding(isosceles(), {}, tmpl::Template(3, 1, {{0, 1, 2}}), {4},
                            Strategy::rational_search, b);
  CHECK(v.status == OracleVerdict::Status::sat);
  REQUIRE(v.witness);
  CHECK(verify_embedding(*v.witness, isosceles(), 100000));
}

TEST_CASE("rational search is sat-only") {
  Budget b;
  b.rational_height = 1;
  // no two distinct equal rationals: must come back unknown, never unsat
  auto v = search_embedding(difference(), {}, tmpl::Template(2, 1, {{0, 1}}), {2},
                            Strategy::rational_search, b);
  CHECK(v.status == OracleVerdict::Status::unknown);
}

TEST_CASE("witness JSON round-trip and tampering") {
  Budget b;
  auto v = refute_embedding_linear(pair_sums(), {}, grid4(), {2, 2}, b);
  REQUIRE(v.status == OracleVerdict::Status::sat);
  io::json j = io::witness_to_json(*v.witness, pair_sums());
  CHECK(io::verify_any(j).ok);
  auto parsed = io::witness_from_json(j);
  CHECK(verify_embedding(parsed.w, parsed.p, 100000));

  io::json tampered = j;
  tampered["assignment"][0]["value"][0] =
      rat_str(parse_rat(tampered["assignment"][0]["value"][0].get<std::string>()) + 1);
  CHECK_FALSE(io::verify_any(tampered).ok);
}

TEST_CASE("external oracle protocol round-trip") {
  Budget b;
  std::string mock = std::string("python3 ") + AHG_TEST_DIR + "/mock_oracle.py";
  // the mock answers unknown for every request
  auto v = search_embedding(pair_sums(), {}, complete4(), {4}, Strategy::external_oracle, b,
                            mock + " unknown");
  CHECK(v.status == OracleVerdict::Status::unknown);
  // the mock answers unsat for every request
  auto u = search_embedding(pair_sums(), {}, complete4(), {4}, Strategy::external_oracle, b,
                            mock + " unsat");
  CHECK(u.status == OracleVerdict::Status::unsat);
  REQUIRE(u.certificate);
  CHECK(u.certificate->method.rfind("oracle:", 0) == 0);
  // sat with a canned witness that does not verify degrades to unknown
  auto s = search_embedding(pair_sums(), {}, complete4(), {4}, Strategy::external_oracle, b,
                            mock + " sat-bogus");
  CHECK(s.status == OracleVerdict::Status::unknown);
}
