#include "sturm.hpp"

#include "error.hpp"

namespace ahg::poly {

UPoly upoly_from(const Poly& p) {
  if (p.nvars() != 1) fail(Errc::arity, "univariate polynomial expected");
  UPoly c(p.total_degree() + 1, Rat(0));
  for (const auto& [e, k] : p.terms()) c[e[0]] = k;
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

int upoly_degree(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

UPoly upoly_derivative(const UPoly& p) {
  UPoly d;
  for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rat(static_cast<long>(i)));
  while (!d.empty() && d.back() == 0) d.pop_back();
  return d;
}

Rat upoly_eval(const UPoly& p, const Rat& x) {
  Rat acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

namespace {

UPoly upoly_rem(UPoly a, const UPoly& b) {
  if (b.empty()) fail(Errc::invalid, "polynomial division by zero");
  while (upoly_degree(a) >= upoly_degree(b)) {
    int shift = upoly_degree(a) - upoly_degree(b);
    Rat q = a.back() / b.back();
    for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= q * b[i];
    while (!a.empty() && a.back() == 0) a.pop_back();
    if (a.empty()) break;
  }
  return a;
}

UPoly upoly_gcd(UPoly a, UPoly b) {
  while (!b.empty()) {
    UPoly r = upoly_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Rat lead = a.back();
    for (Rat& c : a) c /= lead;
  }
  return a;
}

UPoly upoly_divexact(const UPoly& a, const UPoly& b) {
  UPoly rem = a;
  UPoly q(a.size(), Rat(0));
  while (upoly_degree(rem) >= upoly_degree(b)) {
    int shift = upoly_degree(rem) - upoly_degree(b);
    Rat c = rem.back() / b.back();
    q[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) rem[i + shift] -= c * b[i];
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
  }
  if (!rem.empty()) fail(Errc::invalid, "inexact polynomial division");
  while (!q.empty() && q.back() == 0) q.pop_back();
  return q;
}

int sign_at(const UPoly& p, const Endpoint& e) {
  if (p.empty()) return 0;
  switch (e.kind) {
    case Endpoint::Kind::finite: {
      Rat v = upoly_eval(p, e.value);
      return v == 0 ? 0 : (v > 0 ? 1 : -1);
    }
    case Endpoint::Kind::pos_inf:
      return p.back() > 0 ? 1 : -1;
    case Endpoint::Kind::neg_inf: {
      int s = p.back() > 0 ? 1 : -1;
      return upoly_degree(p) % 2 == 0 ? s : -s;
    }
  }
  return 0;
}

int variations(const std::vector<UPoly>& chain, const Endpoint& e) {
  int var = 0;
  int prev = 0;
  for (const UPoly& p : chain) {
    int s = sign_at(p, e);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++var;
    prev = s;
  }
  return var;
}

}  // namespace

int count_roots_open(const UPoly& p, const Endpoint& lo, const Endpoint& hi) {
  if (p.empty()) fail(Errc::invalid, "root counting needs a nonzero polynomial");
  if (lo.kind == Endpoint::Kind::finite && hi.kind == Endpoint::Kind::finite &&
      !(lo.value < hi.value))
    fail(Errc::invalid, "empty interval");
  if (upoly_degree(p) == 0) return 0;

  UPoly g = upoly_gcd(p, upoly_derivative(p));
  UPoly sf = upoly_degree(g) >= 1 ? upoly_divexact(p, g) : p;

  std::vector<UPoly> chain{sf, upoly_derivative(sf)};
  while (!chain.back().empty() && upoly_degree(chain.back()) >= 0) {
    UPoly r = upoly_rem(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    for (Rat& c : r) c = -c;
    chain.push_back(std::move(r));
  }

  // Sturm counts roots in (lo, hi]; drop hi itself for the open interval.
  int count = variations(chain, lo) - variations(chain, hi);
  if (hi.kind == Endpoint::Kind::finite && upoly_eval(sf, hi.value) == 0) --count;
  return count;
}

}  // namespace ahg::poly
