#include <doctest.h>

#include <numeric>
#include <random>

#include "embed.hpp"
#include "error.hpp"
#include "immerse.hpp"
#include "jsonio.hpp"

using namespace ahg;
using namespace ahg::immerse;

namespace {

poly::PolySpec pair_sums() {
  poly::PolySpec p{4, 1, 0, poly::Poly(4)};
  p.p = poly::Poly::var(4, 0) + poly::Poly::var(4, 1) - poly::Poly::var(4, 2) -
        poly::Poly::var(4, 3);
  return p;
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

poly::PolySpec collinear() {
  poly::PolySpec p{3, 2, 0, poly::Poly(6)};
  poly::Poly ax = poly::Poly::var(6, 2) - poly::Poly::var(6, 0);
  poly::Poly ay = poly::Poly::var(6, 3) - poly::Poly::var(6, 1);
  poly::Poly bx = poly::Poly::var(6, 4) - poly::Poly::var(6, 0);
  poly::Poly by = poly::Poly::var(6, 5) - poly::Poly::var(6, 1);
  p.p = ax * by - ay * bx;
  return p;
}

tmpl::Template grid4() { return tmpl::Template(4, 2, {{0, 0, 1, 1}, {0, 1, 0, 1}}); }

poly::PolyMap sum_map() { return {2, 1, {poly::Poly::var(2, 0) + poly::Poly::var(2, 1)}}; }

InjectivityCert affine_cert() {
  return {InjectivityCert::Kind::affine_columns, 0, poly::Endpoint::neg_inf(),
          poly::Endpoint::pos_inf()};
}

}  // namespace

TEST_CASE("per-coordinate injectivity certificates") {
  CHECK(verify_injective_per_coordinate(sum_map(), affine_cert()));
  // the column of the second input is zero
  poly::PolyMap proj{2, 1, {poly::Poly::var(2, 0)}};
  CHECK_FALSE(verify_injective_per_coordinate(proj, affine_cert()));

  // t -> (t^3 + t, t^2): first component strictly monotone everywhere
  poly::PolyMap curve{1, 2, {poly::Poly::var(1, 0, 3) + poly::Poly::var(1, 0),
                             poly::Poly::var(1, 0, 2)}};
  InjectivityCert sturm{InjectivityCert::Kind::sturm_monotone, 0, poly::Endpoint::at(-10),
                        poly::Endpoint::at(10)};
  CHECK(verify_injective_per_coordinate(curve, sturm));
  // the second component is not monotone through 0
  InjectivityCert bad{InjectivityCert::Kind::sturm_monotone, 1, poly::Endpoint::at(-10),
                      poly::Endpoint::at(10)};
  CHECK_FALSE(verify_injective_per_coordinate(curve, bad));
  // wrong certificate shape
  CHECK_THROWS_AS(verify_injective_per_coordinate(curve, affine_cert()), Error);
  InjectivityCert sturm_on_surface{InjectivityCert::Kind::sturm_monotone, 0,
                                   poly::Endpoint::at(0), poly::Endpoint::at(1)};
  CHECK_THROWS_AS(verify_injective_per_coordinate(sum_map(), sturm_on_surface), Error);
}

TEST_CASE("verify_immersion: the sum map over the grid pattern") {
  auto res = verify_immersion(sum_map(), grid4(), {0, 1}, pair_sums(), {}, affine_cert());
  REQUIRE(std::holds_alternative<ImmersionCertificate>(res));
  const auto& cert = std::get<ImmersionCertificate>(res);
  CHECK(cert.sigma == std::vector<int>{0, 3, 1, 2});
  CHECK(replay_immersion(cert, pair_sums(), {}));
}

TEST_CASE("verify_immersion: affine image of a line is collinear") {
  poly::PolyMap line{1, 2,
                     {poly::Poly::var(1, 0),
                      poly::Poly::var(1, 0).scaled(2) + poly::Poly::constant(1, Rat(1))}};
  tmpl::Template triple(3, 1, {{0, 1, 2}});
  auto res = verify_immersion(line, triple, {0}, collinear(), {}, affine_cert());
  CHECK(std::holds_alternative<ImmersionCertificate>(res));
}

TEST_CASE("verify_immersion rejects the isosceles axis map with residual hashes") {
  poly::PolyMap axis{1, 2, {poly::Poly::var(1, 0), poly::Poly(1)}};
  tmpl::Template triple(3, 1, {{0, 1, 2}});
  auto res = verify_immersion(axis, triple, {0}, isosceles(), {}, affine_cert());
  REQUIRE(std::holds_alternative<Rejection>(res));
  CHECK(std::get<Rejection>(res).residual_hashes.size() == 6);
}

TEST_CASE("certificate replay is strict about its contents") {
  auto res = verify_immersion(sum_map(), grid4(), {0, 1}, pair_sums(), {}, affine_cert());
  auto cert = std::get<ImmersionCertificate>(res);

  // serialized round-trip replays
  io::json j = io::immersion_to_json(cert, pair_sums(), {});
  CHECK(io::verify_any(j).ok);
  auto parsed = io::immersion_from_json(j);
  CHECK(replay_immersion(parsed.c, parsed.p, parsed.params));

  // zeroed map coefficient: the injectivity certificate no longer discharges
  io::json bad = j;
  bad["map"]["components"][0]["terms"][0]["coeff"] = "0";
  CHECK_FALSE(io::verify_any(bad).ok);

  // tampered polynomial coefficient: the identity no longer cancels
  io::json badp = j;
  badp["poly"]["terms"][0]["coeff"] = "2";
  CHECK_FALSE(io::verify_any(badp).ok);

  // tampered ordering
  io::json bad2 = j;
  bad2["orderings"]["generic"] = io::json::array({0, 1, 2, 3});
  CHECK_FALSE(io::verify_any(bad2).ok);

  // wrong sigma in memory
  ImmersionCertificate broken = cert;
  broken.sigma = {0, 1, 2, 3};
  CHECK_FALSE(replay_immersion(broken, pair_sums(), {}));
}

TEST_CASE("specialization soundness: the composed identity vanishes under collisions") {
  auto res = verify_immersion(sum_map(), grid4(), {0, 1}, pair_sums(), {}, affine_cert());
  auto cert = std::get<ImmersionCertificate>(res);
  poly::GenericPattern gp(cert.collapsed);
  poly::Poly q = poly::compose(pair_sums(), cert.map, cert.collapsed, cert.sigma);
  std::mt19937 rng(71);
  for (int rep = 0; rep < 100; ++rep) {
    std::vector<Rat> vals(gp.nvars);
    for (auto& v : vals) v = Rat(static_cast<long>(rng() % 7) - 3);  // collisions on purpose
    CHECK(q.eval(vals) == 0);
  }
}

TEST_CASE("search_immersion finds the sum map for the grid pattern") {
  CatalogConfig cfg;
  cfg.affine_height = 2;
  auto cert = search_immersion(pair_sums(), {}, grid4(), cfg, 1'000'000);
  REQUIRE(cert.has_value());
  CHECK(cert->map.m == 2);
  CHECK(cert->map.comps[0] == (poly::Poly::var(2, 0) + poly::Poly::var(2, 1)));
  CHECK(replay_immersion(*cert, pair_sums(), {}));

  // determinism: same inputs, same certificate
  auto again = search_immersion(pair_sums(), {}, grid4(), cfg, 1'000'000);
  CHECK(io::dump(io::immersion_to_json(*cert, pair_sums(), {})) ==
        io::dump(io::immersion_to_json(*again, pair_sums(), {})));
}

TEST_CASE("search_immersion: difference polynomial has no immersion") {
  poly::PolySpec diff{2, 1, 0, poly::Poly::var(2, 0) - poly::Poly::var(2, 1)};
  CatalogConfig cfg;
  cfg.affine_height = 1;
  cfg.curve_degree = 2;
  auto cert = search_immersion(diff, {}, tmpl::Template(2, 1, {{0, 1}}), cfg, 1'000'000);
  CHECK_FALSE(cert.has_value());
}

TEST_CASE("search_immersion: complete 4-pattern admits no affine immersion") {
  CatalogConfig cfg;
  cfg.affine_height = 2;
  cfg.curve_degree = 3;
  auto cert = search_immersion(pair_sums(), {}, tmpl::Template(4, 1, {{0, 1, 2, 3}}), cfg,
                               1'000'000);
  CHECK_FALSE(cert.has_value());
}

TEST_CASE("complete curve check") {
  poly::PolyMap diag{1, 2, {poly::Poly::var(1, 0), poly::Poly::var(1, 0)}};
  InjectivityCert sturm{InjectivityCert::Kind::sturm_monotone, 0, poly::Endpoint::at(-10),
                        poly::Endpoint::at(10)};
  CHECK(complete_curve_check(collinear(), {}, diag, sturm));
  CHECK_FALSE(complete_curve_check(isosceles(), {}, diag, sturm));

  // the zero polynomial makes every subset an edge
  poly::PolySpec zero2{2, 1, 0, poly::Poly(2)};
  poly::PolyMap ident{1, 1, {poly::Poly::var(1, 0)}};
  CHECK(complete_curve_check(zero2, {}, ident, affine_cert()));

  // the isosceles polynomial is rejected across the whole curve catalog
  CatalogConfig cfg;
  cfg.curve_degree = 3;
  cfg.curve_height = 1;
  tmpl::Template triple(3, 1, {{0, 1, 2}});
  CandidateStream stream(triple, 2, cfg);
  int curves_checked = 0;
  for (long long pos = 0; pos < stream.size(); ++pos) {
    auto item = stream.at(pos);
    if (item->pi.m != 1) continue;
    if (item->cand.f.m != 1) continue;
    ++curves_checked;
    CHECK_FALSE(complete_curve_check(isosceles(), {}, item->cand.f, item->cand.inj));
  }
  CHECK(curves_checked > 100);  // the sweep is not vacuous
}

TEST_CASE("immersion certificates yield verified finite embeddings") {
  Budget b;
  auto res = verify_immersion(sum_map(), grid4(), {0, 1}, pair_sums(), {}, affine_cert());
  auto cert = std::get<ImmersionCertificate>(res);
  for (int m = 1; m <= 3; ++m) {
    auto w = embed::embedding_from_immersion(cert, grid4(), {m, m}, pair_sums(), {}, b);
    CHECK(embed::verify_embedding(w, pair_sums(), b.edge_cap));
  }
  // larger grid through the same immersion
  auto w33 = embed::embedding_from_immersion(cert, grid4(), {3, 3}, pair_sums(), {}, b);
  CHECK(w33.assignment.size() == 9);

  // a collapse-based witness: complete pattern from the 2-dim pair template
  tmpl::Template pairs2(2, 2, {{0, 1}, {0, 1}});
  auto collapsed = tmpl::collapse(pairs2, tmpl::Surjection(2, {0, 0}));
  poly::PolySpec zero2{2, 1, 0, poly::Poly(2)};
  poly::PolyMap ident{1, 1, {poly::Poly::var(1, 0)}};
  auto res2 = verify_immersion(ident, collapsed, {0, 0}, zero2, {}, affine_cert());
  REQUIRE(std::holds_alternative<ImmersionCertificate>(res2));
  auto w2 = embed::embedding_from_immersion(std::get<ImmersionCertificate>(res2), pairs2, {2, 2},
                                            zero2, {}, b);
  CHECK(embed::verify_embedding(w2, zero2, b.edge_cap));
}

TEST_CASE("curve-certified immersions embed the complete pattern") {
  Budget b;
  poly::PolyMap diag{1, 2, {poly::Poly::var(1, 0), poly::Poly::var(1, 0)}};
  InjectivityCert sturm{InjectivityCert::Kind::sturm_monotone, 0, poly::Endpoint::at(-10),
                        poly::Endpoint::at(10)};
  tmpl::Template triple(3, 1, {{0, 1, 2}});
  auto res = verify_immersion(diag, triple, {0}, collinear(), {}, sturm);
  REQUIRE(std::holds_alternative<ImmersionCertificate>(res));
  auto cert = std::get<ImmersionCertificate>(res);
  auto w = embed::embedding_from_immersion(cert, triple, {6}, collinear(), {}, b);
  CHECK(embed::verify_embedding(w, collinear(), b.edge_cap));
  // all sampled inputs stay inside the declared interval
  for (const auto& [pt, val] : w.assignment) {
    CHECK(val[0] > -10);
    CHECK(val[0] < 10);
  }
}
