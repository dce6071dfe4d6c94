#include "immerse.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "error.hpp"

namespace ahg::immerse {

bool verify_injective_per_coordinate(const poly::PolyMap& f, const InjectivityCert& cert) {
  if (f.m < 1 || f.n < 1 || static_cast<int>(f.comps.size()) != f.n)
    fail(Errc::arity, "malformed polynomial map");
  switch (cert.kind) {
    case InjectivityCert::Kind::affine_columns: {
      for (const auto& c : f.comps)
        if (c.total_degree() > 1)
          fail(Errc::unsupported, "affine-columns certificate on a nonaffine map");
      // column of input j across components must be nonzero
      for (int j = 0; j < f.m; ++j) {
        bool nonzero = false;
        for (const auto& c : f.comps) {
          poly::Exps e(f.m, 0);
          e[j] = 1;
          auto it = c.terms().find(e);
          if (it != c.terms().end() && it->second != 0) {
            nonzero = true;
            break;
          }
        }
        if (!nonzero) return false;
      }
      return true;
    }
    case InjectivityCert::Kind::sturm_monotone: {
      if (f.m != 1) fail(Errc::unsupported, "sturm-monotone certificate needs a curve (m=1)");
      if (cert.component < 0 || cert.component >= f.n)
        fail(Errc::unsupported, "sturm-monotone component out of range");
      poly::UPoly deriv = upoly_from(f.comps[cert.component].derivative(0));
      if (deriv.empty()) return false;  // constant component is never strictly monotone
      return poly::count_roots_open(deriv, cert.lo, cert.hi) == 0;
    }
  }
  return false;
}

std::variant<ImmersionCertificate, Rejection> verify_immersion(
    const poly::PolyMap& f, const tmpl::Template& collapsed, const std::vector<int>& pi,
    const poly::PolySpec& p, const std::vector<Rat>& params, const InjectivityCert& inj) {
  if (f.m != collapsed.d()) fail(Errc::arity, "map arity must equal collapsed dimension");
  if (f.n != p.n) fail(Errc::arity, "map output width must equal point width");
  if (collapsed.k() != p.k) fail(Errc::arity, "collapsed point count must equal k");
  if (!verify_injective_per_coordinate(f, inj))
    fail(Errc::contract, "injectivity certificate must verify first");

  poly::PolySpec p_sub = poly::substitute_params(p, params);
  Rejection rej;
  std::vector<int> sigma(p.k);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::vector<std::string> names = poly::GenericPattern(collapsed).var_names(collapsed);
  do {
    poly::Poly q = poly::compose(p_sub, f, collapsed, sigma);
    if (q.is_zero())
      return ImmersionCertificate{f, collapsed, pi, inj, sigma};
    rej.residual_hashes.push_back(fnv1a_hex(q.str(names)));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return rej;
}

bool replay_immersion(const ImmersionCertificate& cert, const poly::PolySpec& p,
                      const std::vector<Rat>& params) {
  if (cert.map.m != cert.collapsed.d() || cert.map.n != p.n || cert.collapsed.k() != p.k)
    return false;
  // pi must be a surjection onto the collapsed dimension
  if (cert.pi.empty()) return false;
  std::vector<bool> hit(cert.collapsed.d(), false);
  for (int v : cert.pi) {
    if (v < 0 || v >= cert.collapsed.d()) return false;
    hit[v] = true;
  }
  for (bool b : hit)
    if (!b) return false;
  if (!verify_injective_per_coordinate(cert.map, cert.inj)) return false;
  if (static_cast<int>(cert.sigma.size()) != p.k) return false;
  std::vector<int> sorted = cert.sigma;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < p.k; ++i)
    if (sorted[i] != i) return false;
  poly::PolySpec p_sub = poly::substitute_params(p, params);
  return poly::compose(p_sub, cert.map, cert.collapsed, cert.sigma).is_zero();
}

// ----- candidate catalog -----------------------------------------------------

namespace {

poly::PolyMap affine_from_entries(int m, int n, const std::vector<Rat>& entries) {
  // per component: constant, then input coefficients
  poly::PolyMap f{m, n, {}};
  int pos = 0;
  for (int c = 0; c < n; ++c) {
    poly::Poly comp = poly::Poly::constant(m, entries[pos++]);
    for (int j = 0; j < m; ++j) {
      Rat a = entries[pos++];
      if (a != 0) comp = comp + poly::Poly::var(m, j).scaled(a);
    }
    f.comps.push_back(std::move(comp));
  }
  return f;
}

poly::PolyMap curve_from_entries(int degree, int n, const std::vector<Rat>& entries) {
  poly::PolyMap f{1, n, {}};
  int pos = 0;
  for (int c = 0; c < n; ++c) {
    poly::Poly comp(1);
    for (int e = 0; e <= degree; ++e) {
      Rat a = entries[pos++];
      if (a != 0) comp = comp + poly::Poly::var(1, 0, e).scaled(a);
    }
    f.comps.push_back(std::move(comp));
  }
  return f;
}

std::optional<InjectivityCert> certify(const poly::PolyMap& f, const CatalogConfig& cfg) {
  bool affine = true;
  for (const auto& c : f.comps)
    if (c.total_degree() > 1) affine = false;
  if (affine) {
    InjectivityCert cert{InjectivityCert::Kind::affine_columns, 0, poly::Endpoint::neg_inf(),
                         poly::Endpoint::pos_inf()};
    if (verify_injective_per_coordinate(f, cert)) return cert;
    return std::nullopt;
  }
  if (f.m != 1) return std::nullopt;
  for (int c = 0; c < f.n; ++c) {
    InjectivityCert cert{InjectivityCert::Kind::sturm_monotone, c,
                         poly::Endpoint::at(cfg.curve_lo), poly::Endpoint::at(cfg.curve_hi)};
    if (verify_injective_per_coordinate(f, cert)) return cert;
  }
  return std::nullopt;
}

}  // namespace

CandidateStream::CandidateStream(const tmpl::Template& t, int n_out, const CatalogConfig& cfg) {
  std::vector<Rat> affine_vals = rats_up_to_height(cfg.affine_height);
  std::vector<Rat> curve_vals = rats_up_to_height(cfg.curve_height);
  for (const tmpl::Surjection& pi : tmpl::Surjection::enumerate_rgs(t.d())) {
    const int m = pi.m;
    {
      // affine family: odometer over (m+1)*n_out coefficients
      const int entries = (m + 1) * n_out;
      std::vector<int> idx(entries, 0);
      while (true) {
        std::vector<Rat> coeff(entries);
        for (int e = 0; e < entries; ++e) coeff[e] = affine_vals[idx[e]];
        poly::PolyMap f = affine_from_entries(m, n_out, coeff);
        if (auto cert = certify(f, cfg)) items_.push_back({pi, {std::move(f), *cert}});
        int e = entries - 1;
        while (e >= 0 && ++idx[e] == static_cast<int>(affine_vals.size())) idx[e--] = 0;
        if (e < 0) break;
      }
    }
    if (m == 1 && cfg.curve_degree >= 2) {
      const int entries = (cfg.curve_degree + 1) * n_out;
      std::vector<int> idx(entries, 0);
      while (true) {
        std::vector<Rat> coeff(entries);
        for (int e = 0; e < entries; ++e) coeff[e] = curve_vals[idx[e]];
        poly::PolyMap f = curve_from_entries(cfg.curve_degree, n_out, coeff);
        // skip pure-affine duplicates of the previous family
        bool nonlinear = false;
        for (const auto& c : f.comps)
          if (c.total_degree() > 1) nonlinear = true;
        if (nonlinear)
          if (auto cert = certify(f, cfg)) items_.push_back({pi, {std::move(f), *cert}});
        int e = entries - 1;
        while (e >= 0 && ++idx[e] == static_cast<int>(curve_vals.size())) idx[e--] = 0;
        if (e < 0) break;
      }
    }
    for (const poly::PolyMap& f : cfg.user_maps) {
      if (f.m != m || f.n != n_out) continue;
      if (auto cert = certify(f, cfg)) items_.push_back({pi, {f, *cert}});
    }
  }
}

std::optional<CandidateStream::Item> CandidateStream::at(long long pos) const {
  if (pos < 0 || pos >= size()) return std::nullopt;
  return items_[pos];
}

std::optional<ImmersionCertificate> search_immersion(const poly::PolySpec& p,
                                                     const std::vector<Rat>& params,
                                                     const tmpl::Template& t,
                                                     const CatalogConfig& cfg,
                                                     long long max_candidates) {
  CandidateStream stream(t, p.n, cfg);
  std::map<std::vector<int>, tmpl::Template> collapsed_cache;
  long long limit = std::min(max_candidates, stream.size());
  for (long long pos = 0; pos < limit; ++pos) {
    auto item = stream.at(pos);
    auto it = collapsed_cache.find(item->pi.map);
    if (it == collapsed_cache.end())
      it = collapsed_cache.emplace(item->pi.map, tmpl::collapse(t, item->pi)).first;
    auto res = verify_immersion(item->cand.f, it->second, item->pi.map, p, params,
                                item->cand.inj);
    if (std::holds_alternative<ImmersionCertificate>(res))
      return std::get<ImmersionCertificate>(std::move(res));
  }
  return std::nullopt;
}

bool complete_curve_check(const poly::PolySpec& p, const std::vector<Rat>& params,
                          const poly::PolyMap& f, const InjectivityCert& inj) {
  if (f.m != 1) fail(Errc::arity, "complete-pattern check needs a curve (m=1)");
  if (!verify_injective_per_coordinate(f, inj))
    fail(Errc::contract, "injectivity certificate must verify first");
  std::vector<int> identity(p.k);
  std::iota(identity.begin(), identity.end(), 0);
  tmpl::Template complete(p.k, 1, {identity});
  auto res = verify_immersion(f, complete, {0}, p, params, inj);
  return std::holds_alternative<ImmersionCertificate>(res);
}

}  // namespace ahg::immerse
