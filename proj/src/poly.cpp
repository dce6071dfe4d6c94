#include "poly.hpp"

#include <algorithm>
#include <numeric>

#include "error.hpp"

namespace ahg::poly {

bool GrlexLess::operator()(const Exps& a, const Exps& b) const {
  uint64_t da = std::accumulate(a.begin(), a.end(), uint64_t{0});
  uint64_t db = std::accumulate(b.begin(), b.end(), uint64_t{0});
  if (da != db) return da < db;
  return a < b;  // lex: earlier variable with higher exponent is "larger"
}

Poly Poly::constant(int nvars, const Rat& c) {
  Poly p(nvars);
  p.add_term(Exps(nvars, 0), c);
  return p;
}

Poly Poly::var(int nvars, int i, uint32_t exp) {
  if (i < 0 || i >= nvars) fail(Errc::arity, "variable index out of range");
  Poly p(nvars);
  Exps e(nvars, 0);
  e[i] = exp;
  p.add_term(e, 1);
  return p;
}

void Poly::add_term(const Exps& e, const Rat& c) {
  if (static_cast<int>(e.size()) != nvars_) fail(Errc::arity, "exponent arity mismatch");
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator+(const Poly& o) const {
  if (nvars_ != o.nvars_) fail(Errc::arity, "mixed variable spaces");
  Poly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  if (nvars_ != o.nvars_) fail(Errc::arity, "mixed variable spaces");
  Poly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

Poly Poly::operator-() const {
  Poly r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

Poly Poly::scaled(const Rat& c) const {
  Poly r(nvars_);
  if (c == 0) return r;
  for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  if (nvars_ != o.nvars_) fail(Errc::arity, "mixed variable spaces");
  Poly r(nvars_);
  Exps e(nvars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

Poly Poly::pow(uint32_t e) const {
  Poly r = Poly::constant(nvars_, 1);
  for (uint32_t i = 0; i < e; ++i) r = r * *this;
  return r;
}

Poly Poly::rename(int new_nvars, const std::vector<int>& var_map) const {
  if (static_cast<int>(var_map.size()) != nvars_) fail(Errc::arity, "rename map arity mismatch");
  Poly r(new_nvars);
  Exps e(new_nvars);
  for (const auto& [ea, c] : terms_) {
    std::fill(e.begin(), e.end(), 0);
    for (int i = 0; i < nvars_; ++i) {
      if (ea[i] == 0) continue;
      int j = var_map[i];
      if (j < 0 || j >= new_nvars) fail(Errc::arity, "rename target out of range");
      e[j] += ea[i];
    }
    r.add_term(e, c);
  }
  return r;
}

Poly Poly::substitute(const std::vector<Poly>& images) const {
  if (static_cast<int>(images.size()) != nvars_) fail(Errc::arity, "substitution arity mismatch");
  int out_vars = images.empty() ? 0 : images[0].nvars();
  for (const Poly& im : images)
    if (im.nvars() != out_vars) fail(Errc::arity, "substitution images disagree on variables");
  Poly r(out_vars);
  for (const auto& [e, c] : terms_) {
    Poly term = Poly::constant(out_vars, c);
    for (int i = 0; i < nvars_; ++i)
      if (e[i] > 0) term = term * images[i].pow(e[i]);
    r = r + term;
  }
  return r;
}

Rat Poly::eval(const std::vector<Rat>& xs) const {
  if (static_cast<int>(xs.size()) != nvars_) fail(Errc::arity, "evaluation arity mismatch");
  Rat acc = 0;
  for (const auto& [e, c] : terms_) {
    Rat t = c;
    for (int i = 0; i < nvars_; ++i)
      for (uint32_t j = 0; j < e[i]; ++j) t *= xs[i];
    acc += t;
  }
  return acc;
}

Poly Poly::eval_partial(const std::vector<std::optional<Rat>>& xs) const {
  if (static_cast<int>(xs.size()) != nvars_) fail(Errc::arity, "evaluation arity mismatch");
  Poly r(nvars_);
  Exps e(nvars_);
  for (const auto& [ea, c] : terms_) {
    Rat coeff = c;
    std::copy(ea.begin(), ea.end(), e.begin());
    for (int i = 0; i < nvars_; ++i) {
      if (!xs[i] || ea[i] == 0) continue;
      for (uint32_t j = 0; j < ea[i]; ++j) coeff *= *xs[i];
      e[i] = 0;
    }
    r.add_term(e, coeff);
  }
  return r;
}

int Poly::total_degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_)
    d = std::max<int>(d, static_cast<int>(std::accumulate(e.begin(), e.end(), uint64_t{0})));
  return d;
}

int Poly::degree_in(const std::vector<char>& mask) const {
  if (static_cast<int>(mask.size()) != nvars_) fail(Errc::arity, "mask arity mismatch");
  int d = 0;
  for (const auto& [e, c] : terms_) {
    int t = 0;
    for (int i = 0; i < nvars_; ++i)
      if (mask[i]) t += static_cast<int>(e[i]);
    d = std::max(d, t);
  }
  return d;
}

Poly Poly::derivative(int var) const {
  if (var < 0 || var >= nvars_) fail(Errc::arity, "derivative variable out of range");
  Poly r(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exps de = e;
    de[var] -= 1;
    r.add_term(de, c * Rat(e[var]));
  }
  return r;
}

std::string Poly::str(const std::vector<std::string>& var_names) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!out.empty()) out += " + ";
    out += rat_str(c);
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      out += "*" + var_names[i];
      if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
  }
  return out;
}

std::vector<std::string> PolySpec::var_names() const {
  std::vector<std::string> names;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < n; ++j) names.push_back("x" + std::to_string(i) + "." + std::to_string(j));
  for (int t = 0; t < l; ++t) names.push_back("y" + std::to_string(t));
  return names;
}

Rat evaluate(const PolySpec& p, const std::vector<std::vector<Rat>>& pts,
             const std::vector<Rat>& params) {
  if (static_cast<int>(pts.size()) != p.k) fail(Errc::arity, "point count must equal k");
  if (static_cast<int>(params.size()) != p.l) fail(Errc::arity, "parameter count must equal l");
  std::vector<Rat> xs;
  xs.reserve(p.nvars());
  for (const auto& pt : pts) {
    if (static_cast<int>(pt.size()) != p.n) fail(Errc::arity, "point width must equal n");
    xs.insert(xs.end(), pt.begin(), pt.end());
  }
  xs.insert(xs.end(), params.begin(), params.end());
  return p.p.eval(xs);
}

namespace {

// Renaming that sends block i to block perm[i], fixing parameters.
std::vector<int> block_perm_map(const PolySpec& p, const std::vector<int>& perm) {
  std::vector<int> map(p.nvars());
  for (int i = 0; i < p.k; ++i)
    for (int j = 0; j < p.n; ++j) map[p.xvar(i, j)] = p.xvar(perm[i], j);
  for (int t = 0; t < p.l; ++t) map[p.yvar(t)] = p.yvar(t);
  return map;
}

}  // namespace

bool is_symmetric(const PolySpec& p) {
  // invariance under adjacent transpositions generates the symmetric group
  for (int i = 0; i + 1 < p.k; ++i) {
    std::vector<int> perm(p.k);
    std::iota(perm.begin(), perm.end(), 0);
    std::swap(perm[i], perm[i + 1]);
    if (!(p.p.rename(p.nvars(), block_perm_map(p, perm)) == p.p)) return false;
  }
  return true;
}

bool is_reflexive(const PolySpec& p) {
  for (int i = 0; i < p.k; ++i) {
    for (int j = i + 1; j < p.k; ++j) {
      std::vector<int> map(p.nvars());
      std::iota(map.begin(), map.end(), 0);
      for (int t = 0; t < p.n; ++t) map[p.xvar(j, t)] = p.xvar(i, t);
      if (!p.p.rename(p.nvars(), map).is_zero()) return false;
    }
  }
  return true;
}

PolySpec substitute_params(const PolySpec& p, const std::vector<Rat>& params) {
  if (static_cast<int>(params.size()) != p.l) fail(Errc::arity, "parameter count must equal l");
  if (p.l == 0) return p;
  std::vector<std::optional<Rat>> xs(p.nvars());
  for (int t = 0; t < p.l; ++t) xs[p.yvar(t)] = params[t];
  Poly fixed = p.p.eval_partial(xs);
  std::vector<int> map(p.nvars());
  for (int i = 0; i < p.k * p.n; ++i) map[i] = i;
  for (int t = 0; t < p.l; ++t) map[p.yvar(t)] = 0;  // dead after eval_partial
  PolySpec out{p.k, p.n, 0, fixed.rename(p.k * p.n, map)};
  return out;
}

bool edge_predicate(const PolySpec& p, const std::vector<Rat>& params,
                    const std::vector<std::vector<Rat>>& pts) {
  if (static_cast<int>(pts.size()) != p.k) fail(Errc::arity, "point count must equal k");
  for (size_t a = 0; a < pts.size(); ++a)
    for (size_t b = a + 1; b < pts.size(); ++b)
      if (pts[a] == pts[b]) fail(Errc::contract, "edge_predicate requires distinct points");
  std::vector<int> perm(p.k);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<Rat>> ordered(p.k);
  do {
    for (int i = 0; i < p.k; ++i) ordered[i] = pts[perm[i]];
    if (evaluate(p, ordered, params) == 0) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

GenericPattern::GenericPattern(const tmpl::Template& t) {
  base.resize(t.d());
  for (int j = 0; j < t.d(); ++j) {
    base[j] = nvars;
    nvars += t.blocks(j);
  }
}

std::vector<std::string> GenericPattern::var_names(const tmpl::Template& t) const {
  std::vector<std::string> names(nvars);
  for (int j = 0; j < t.d(); ++j)
    for (int b = 0; b < t.blocks(j); ++b)
      names[var(j, b)] = "b" + std::to_string(j) + "." + std::to_string(b);
  return names;
}

Poly compose(const PolySpec& p, const PolyMap& f, const tmpl::Template& pattern,
             const std::vector<int>& ordering) {
  if (p.l != 0) fail(Errc::arity, "substitute parameters before composing");
  if (f.n != p.n) fail(Errc::arity, "map output width must equal point width");
  if (pattern.k() != p.k) fail(Errc::arity, "pattern point count must equal k");
  if (pattern.d() != f.m) fail(Errc::arity, "pattern dimension must equal map arity");
  if (static_cast<int>(ordering.size()) != p.k) fail(Errc::arity, "ordering must list k points");

  GenericPattern gp(pattern);
  // image of each pattern point under f, expressed in pattern variables
  std::vector<std::vector<Poly>> image(p.k);
  for (int r = 0; r < p.k; ++r) {
    std::vector<int> input_map(f.m);
    for (int j = 0; j < f.m; ++j) input_map[j] = gp.var(j, pattern.parts()[j][r]);
    for (int c = 0; c < f.n; ++c)
      image[r].push_back(f.comps[c].rename(gp.nvars, input_map));
  }
  std::vector<Poly> subs(p.nvars(), Poly(gp.nvars));
  for (int i = 0; i < p.k; ++i) {
    int r = ordering[i];
    if (r < 0 || r >= p.k) fail(Errc::arity, "ordering entry out of range");
    for (int j = 0; j < p.n; ++j) subs[p.xvar(i, j)] = image[r][j];
  }
  return p.p.substitute(subs);
}

ClosureFactors symmetrize_reflexivize(const PolySpec& p) {
  ClosureFactors out;
  std::vector<int> perm(p.k);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    out.permuted.push_back(PolySpec{p.k, p.n, p.l, p.p.rename(p.nvars(), block_perm_map(p, perm))});
  } while (std::next_permutation(perm.begin(), perm.end()));
  for (int i = 0; i < p.k; ++i) {
    for (int j = i + 1; j < p.k; ++j) {
      Poly sep(p.nvars());
      for (int t = 0; t < p.n; ++t) {
        Poly diff = Poly::var(p.nvars(), p.xvar(i, t)) - Poly::var(p.nvars(), p.xvar(j, t));
        sep = sep + diff * diff;
      }
      out.separation.push_back({{i, j}, sep});
    }
  }
  return out;
}

int xdegree(const PolySpec& p) {
  std::vector<char> mask(p.nvars(), 0);
  for (int i = 0; i < p.k * p.n; ++i) mask[i] = 1;
  return p.p.degree_in(mask);
}

}  // namespace ahg::poly
