#include <doctest.h>

#include <random>
#include <set>

#include "error.hpp"
#include "sturm.hpp"

using namespace ahg;
using namespace ahg::poly;

namespace {

UPoly up(std::initializer_list<long> coeffs) {
  UPoly p;
  for (long c : coeffs) p.push_back(Rat(c));
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

// (t - r1)(t - r2)...(expanded)
UPoly from_roots(const std::vector<long>& roots) {
  UPoly p{Rat(1)};
  for (long r : roots) {
    UPoly q(p.size() + 1, Rat(0));
    for (size_t i = 0; i < p.size(); ++i) {
      q[i + 1] += p[i];
      q[i] -= p[i] * Rat(r);
    }
    p = q;
  }
  return p;
}

}  // namespace

TEST_CASE("root counting on explicit products") {
  // roots 1, 3, 7
  UPoly p = from_roots({1, 3, 7});
  CHECK(count_roots_open(p, Endpoint::neg_inf(), Endpoint::pos_inf()) == 3);
  CHECK(count_roots_open(p, Endpoint::at(0), Endpoint::at(10)) == 3);
  CHECK(count_roots_open(p, Endpoint::at(1), Endpoint::at(7)) == 1);   // open: excludes both
  CHECK(count_roots_open(p, Endpoint::at(2), Endpoint::at(4)) == 1);
  CHECK(count_roots_open(p, Endpoint::at(8), Endpoint::pos_inf()) == 0);
  CHECK(count_roots_open(p, Endpoint::neg_inf(), Endpoint::at(1)) == 0);

  // repeated roots count once
  UPoly sq = from_roots({2, 2, 5});
  CHECK(count_roots_open(sq, Endpoint::neg_inf(), Endpoint::pos_inf()) == 2);
  CHECK(count_roots_open(sq, Endpoint::at(1), Endpoint::at(3)) == 1);

  // no real roots
  CHECK(count_roots_open(up({1, 0, 3}), Endpoint::neg_inf(), Endpoint::pos_inf()) == 0);
  // derivative of t^3 + t: 3t^2 + 1, no roots anywhere
  CHECK(count_roots_open(up({1, 0, 3}), Endpoint::at(-10), Endpoint::at(10)) == 0);
  // constants have no roots
  CHECK(count_roots_open(up({5}), Endpoint::neg_inf(), Endpoint::pos_inf()) == 0);
  CHECK_THROWS_AS(count_roots_open(UPoly{}, Endpoint::neg_inf(), Endpoint::pos_inf()), Error);
  CHECK_THROWS_AS(count_roots_open(up({1, 1}), Endpoint::at(3), Endpoint::at(3)), Error);
}

TEST_CASE("root counting vs randomized integer-root products") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    int nroots = 1 + static_cast<int>(rng() % 4);
    std::vector<long> roots;
    for (int i = 0; i < nroots; ++i) roots.push_back(static_cast<long>(rng() % 21) - 10);
    UPoly p = from_roots(roots);
    long a = static_cast<long>(rng() % 25) - 12;
    long b = a + 1 + static_cast<long>(rng() % 12);
    std::set<long> distinct(roots.begin(), roots.end());
    int expect = 0;
    for (long r : distinct)
      if (a < r && r < b) ++expect;
    CHECK(count_roots_open(p, Endpoint::at(a), Endpoint::at(b)) == expect);
    int expect_all = static_cast<int>(distinct.size());
    CHECK(count_roots_open(p, Endpoint::neg_inf(), Endpoint::pos_inf()) == expect_all);
  }
}

TEST_CASE("upoly helpers") {
  Poly cube = Poly::var(1, 0, 3) + Poly::var(1, 0);
  UPoly u = upoly_from(cube);
  CHECK(upoly_degree(u) == 3);
  CHECK(upoly_eval(u, Rat(2)) == 10);
  UPoly du = upoly_derivative(u);
  CHECK(du == up({1, 0, 3}));
}
