#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rat.hpp"
#include "template.hpp"

namespace ahg::poly {

using Exps = std::vector<uint32_t>;

// Graded lexicographic: lower total degree first, ties by lex on exponents
// (earlier variable dominates). Map iteration is ascending; serialization
// walks it backwards so the leading term prints first.
struct GrlexLess {
  bool operator()(const Exps& a, const Exps& b) const;
};

// Sparse multivariate polynomial over Q with a fixed number of variables.
// No zero coefficients are ever stored, so structural equality is identity.
class Poly {
 public:
  explicit Poly(int nvars = 0) : nvars_(nvars) {}

  static Poly constant(int nvars, const Rat& c);
  static Poly var(int nvars, int i, uint32_t exp = 1);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::map<Exps, Rat, GrlexLess>& terms() const { return terms_; }

  void add_term(const Exps& e, const Rat& c);

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  Poly scaled(const Rat& c) const;
  Poly pow(uint32_t e) const;
  bool operator==(const Poly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

  // var i of this becomes var var_map[i] of the result; merging is allowed.
  Poly rename(int new_nvars, const std::vector<int>& var_map) const;
  // var i replaced by images[i]; all images share a variable space.
  Poly substitute(const std::vector<Poly>& images) const;

  Rat eval(const std::vector<Rat>& xs) const;
  // Fix the variables that carry a value, keeping the variable space.
  Poly eval_partial(const std::vector<std::optional<Rat>>& xs) const;

  int total_degree() const;
  // Max total degree counting only the masked variables.
  int degree_in(const std::vector<char>& mask) const;
  Poly derivative(int var) const;

  // Canonical text form; used for hashing and stable diagnostics.
  std::string str(const std::vector<std::string>& var_names) const;

 private:
  int nvars_;
  std::map<Exps, Rat, GrlexLess> terms_;
};

// (k,n)+l-ary polynomial: k point blocks of width n plus l parameters.
// Variable order: x0.0, ..., x0.{n-1}, x1.0, ..., x{k-1}.{n-1}, y0, ..., y{l-1}.
struct PolySpec {
  int k = 0;
  int n = 0;
  int l = 0;
  Poly p;

  int nvars() const { return k * n + l; }
  int xvar(int i, int j) const { return i * n + j; }
  int yvar(int t) const { return k * n + t; }
  std::vector<std::string> var_names() const;
  bool operator==(const PolySpec&) const = default;
};

// Polynomial map Q^m -> Q^n; components in variables t0..t{m-1}.
struct PolyMap {
  int m = 0;
  int n = 0;
  std::vector<Poly> comps;

  bool operator==(const PolyMap&) const = default;
};

Rat evaluate(const PolySpec& p, const std::vector<std::vector<Rat>>& pts,
             const std::vector<Rat>& params);

bool is_symmetric(const PolySpec& p);
bool is_reflexive(const PolySpec& p);

// Substitutes the l parameters, leaving a (k,n)-ary polynomial.
PolySpec substitute_params(const PolySpec& p, const std::vector<Rat>& params);

// Whether the k pairwise-distinct points form an edge of the zero hypergraph:
// some ordering makes the polynomial vanish.
bool edge_predicate(const PolySpec& p, const std::vector<Rat>& params,
                    const std::vector<std::vector<Rat>>& pts);

// Fresh variables of the generic pattern of a template: one per
// (coordinate, block), grouped by coordinate.
struct GenericPattern {
  int nvars = 0;
  std::vector<int> base;  // variable index of (coord j, block 0)

  explicit GenericPattern(const tmpl::Template& t);
  int var(int coord, int block) const { return base[coord] + block; }
  std::vector<std::string> var_names(const tmpl::Template& t) const;
};

// p(f(point ordering[0]), ..., f(point ordering[k-1])) expanded over the
// generic pattern variables of `pattern`. Requires p.l == 0 (substitute
// parameters first), f.n == p.n, pattern.d == f.m.
Poly compose(const PolySpec& p, const PolyMap& f, const tmpl::Template& pattern,
             const std::vector<int>& ordering);

inline bool is_zero(const Poly& q) { return q.is_zero(); }

// Factored symmetric-reflexive closure: the k! permuted copies of p plus one
// separation factor per point pair (sum of squared coordinate differences,
// vanishing exactly when the two points coincide). The product is never
// expanded; the closure vanishes iff some factor does.
struct ClosureFactors {
  std::vector<PolySpec> permuted;
  std::vector<std::pair<std::pair<int, int>, Poly>> separation;
};

ClosureFactors symmetrize_reflexivize(const PolySpec& p);

// Total degree over the x variables after parameter substitution.
int xdegree(const PolySpec& p);

}  // namespace ahg::poly
