#include "embed.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "error.hpp"
#include "jsonio.hpp"
#include "linsys.hpp"
#include "oracle.hpp"

namespace ahg::embed {

namespace {

// Chooses the cheaper edge-generation route for the given template and grid.
tmpl::FiniteHypergraph edges_of(const tmpl::Template& t, const std::vector<int>& sizes,
                                long long edge_cap) {
  tmpl::Grid grid(sizes);
  long long subsets = 1;
  {
    long long n = grid.count();
    for (int i = 1; i <= t.k() && subsets < (1ll << 50); ++i)
      subsets = subsets * (n - t.k() + i) / i;
  }
  long long assigns = 1;
  bool assigns_ok = true;
  for (int i = 0; i < t.d() && assigns_ok; ++i)
    for (int b = 0; b < t.blocks(i); ++b) {
      assigns *= sizes[i];
      if (assigns > (1ll << 40)) assigns_ok = false;
    }
  tmpl::HgRoute route = (assigns_ok && assigns < subsets) ? tmpl::HgRoute::block_assign
                                                          : tmpl::HgRoute::subset_scan;
  return template_hypergraph(t, sizes, edge_cap, route);
}

}  // namespace

bool verify_embedding(const EmbeddingWitness& w, const poly::PolySpec& p, long long edge_cap) {
  tmpl::Grid grid(w.sizes);
  if (static_cast<int>(w.sizes.size()) != w.t.d()) fail(Errc::arity, "sizes/dimension mismatch");
  const long long nverts = grid.count();
  // every grid point must be assigned, injectively
  std::set<std::vector<Rat>> values;
  for (long long id = 0; id < nverts; ++id) {
    auto it = w.assignment.find(grid.unflatten(static_cast<int>(id)));
    if (it == w.assignment.end()) fail(Errc::invalid, "witness misses a grid point");
    if (static_cast<int>(it->second.size()) != p.n)
      fail(Errc::arity, "witness value width mismatch");
    if (!values.insert(it->second).second) return false;  // collision
  }
  tmpl::FiniteHypergraph h = edges_of(w.t, w.sizes, edge_cap);
  for (const auto& edge : h.edges) {
    std::vector<std::vector<Rat>> pts;
    for (int v : edge) pts.push_back(w.assignment.at(grid.unflatten(v)));
    if (!poly::edge_predicate(p, w.params, pts)) return false;
  }
  return true;
}

namespace {

// ----- exact linear backend ----------------------------------------------

// One linear equation a.h = c over the grid unknowns.
struct LinEq {
  std::vector<Rat> a;
  Rat c;
  bool operator==(const LinEq&) const = default;
  bool operator<(const LinEq& o) const {
    if (a != o.a) return a < o.a;
    return c < o.c;
  }
};

LinEq normalize_eq(LinEq e) {
  const Rat* lead = nullptr;
  for (const Rat& x : e.a)
    if (x != 0) {
      lead = &x;
      break;
    }
  if (!lead && e.c != 0) lead = &e.c;
  if (lead) {
    Rat f = 1 / *lead;
    for (Rat& x : e.a) x *= f;
    e.c *= f;
  }
  return e;
}

struct LinearContext {
  tmpl::Grid grid;
  int nverts = 0;
  int width = 0;  // values per vertex (p.n)
  int nunk = 0;
  std::vector<std::vector<int>> edges;
  std::vector<std::vector<LinEq>> classes;  // per edge, sorted canonical equation classes
};

// Extracts the affine form of p (params substituted): constant + per-variable
// coefficients. Errors out on nonlinear input.
struct AffineForm {
  Rat c0;
  std::vector<std::vector<Rat>> a;  // a[i][j]: coefficient of x_{i,j}
};

AffineForm affine_form(const poly::PolySpec& p) {
  if (p.l != 0) fail(Errc::contract, "parameters must be substituted");
  if (poly::xdegree(p) > 1)
    fail(Errc::unsupported, "exact linear backend requires degree <= 1 after parameters");
  AffineForm f;
  f.c0 = 0;
  f.a.assign(p.k, std::vector<Rat>(p.n, Rat(0)));
  for (const auto& [e, c] : p.p.terms()) {
    int nz = -1;
    for (int v = 0; v < p.nvars(); ++v)
      if (e[v] > 0) nz = v;
    if (nz == -1) {
      f.c0 = c;
    } else {
      f.a[nz / p.n][nz % p.n] = c;
    }
  }
  return f;
}

LinearContext build_linear_context(const poly::PolySpec& p_sub, const tmpl::Template& t,
                                   const std::vector<int>& sizes, long long edge_cap) {
  LinearContext ctx{tmpl::Grid(sizes), 0, p_sub.n, 0, {}, {}};
  ctx.nverts = static_cast<int>(ctx.grid.count());
  ctx.nunk = ctx.nverts * ctx.width;
  ctx.edges = edges_of(t, sizes, edge_cap).edges;
  AffineForm form = affine_form(p_sub);

  const int k = p_sub.k;
  for (const auto& edge : ctx.edges) {
    std::set<LinEq> distinct;
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      LinEq eq{std::vector<Rat>(ctx.nunk, Rat(0)), -form.c0};
      for (int i = 0; i < k; ++i) {
        int vertex = edge[perm[i]];
        for (int j = 0; j < p_sub.n; ++j) eq.a[vertex * p_sub.n + j] += form.a[i][j];
      }
      distinct.insert(normalize_eq(std::move(eq)));
    } while (std::next_permutation(perm.begin(), perm.end()));
    ctx.classes.emplace_back(distinct.begin(), distinct.end());
  }
  return ctx;
}

// h(a) = h(b) as width many rows; true when every row is implied.
bool pair_forced_equal(const lin::Echelon& sys, const LinearContext& ctx, int a, int b) {
  for (int j = 0; j < ctx.width; ++j) {
    std::vector<Rat> row(ctx.nunk, Rat(0));
    row[a * ctx.width + j] = 1;
    row[b * ctx.width + j] = -1;
    if (!sys.implies(std::move(row), Rat(0))) return false;
  }
  return true;
}

struct SatLeaf {
  lin::Echelon::Solution sol;
};

struct BudgetHit {};

// DFS over one vanishing-ordering class per edge. Returns the transcript
// subtree when every branch below fails, or the solution of the first
// feasible full branch.
struct LinearRefuter {
  const LinearContext& ctx;
  lin::Echelon sys;
  long long nodes = 0;
  long long cap;

  LinearRefuter(const LinearContext& c, long long cap_) : ctx(c), sys(c.nunk), cap(cap_) {}

  // nullptr in the unique_ptr slot means "sat found" (leaf stored in sat).
  std::unique_ptr<TranscriptNode> run(size_t depth, std::optional<SatLeaf>& sat) {
    if (depth == ctx.edges.size()) {
      // consistent full branch: injective solution exists unless the solution
      // space is contained in some point-equality subspace
      for (int a = 0; a < ctx.nverts; ++a)
        for (int b = a + 1; b < ctx.nverts; ++b)
          if (pair_forced_equal(sys, ctx, a, b)) {
            auto leaf = std::make_unique<TranscriptNode>();
            leaf->edge = -1;  // leaf-containment marker
            TranscriptNode::Child ch;
            ch.cls = -1;
            ch.kind = TranscriptNode::Child::Kind::contained;
            ch.pair_a = a;
            ch.pair_b = b;
            leaf->children.push_back(std::move(ch));
            return leaf;
          }
      sat = SatLeaf{sys.solve()};
      return nullptr;
    }
    auto node = std::make_unique<TranscriptNode>();
    node->edge = static_cast<int>(depth);
    const auto& cls = ctx.classes[depth];
    for (size_t ci = 0; ci < cls.size(); ++ci) {
      if (++nodes > cap) throw BudgetHit{};
      TranscriptNode::Child child;
      child.cls = static_cast<int>(ci);
      size_t mark = sys.size();
      auto res = sys.add(cls[ci].a, cls[ci].c);
      if (res == lin::Echelon::AddResult::inconsistent) {
        child.kind = TranscriptNode::Child::Kind::inconsistent;
        node->children.push_back(std::move(child));
        continue;
      }
      // cheap local prune: the freshly constrained edge's own vertex pairs
      bool pruned = false;
      const auto& edge = ctx.edges[depth];
      for (size_t x = 0; x < edge.size() && !pruned; ++x)
        for (size_t y = x + 1; y < edge.size(); ++y)
          if (pair_forced_equal(sys, ctx, edge[x], edge[y])) {
            child.kind = TranscriptNode::Child::Kind::contained;
            child.pair_a = edge[x];
            child.pair_b = edge[y];
            pruned = true;
            break;
          }
      if (!pruned) {
        auto sub = run(depth + 1, sat);
        if (sat) return nullptr;
        child.kind = TranscriptNode::Child::Kind::subtree;
        child.node = std::move(sub);
      }
      sys.rollback(mark);
      node->children.push_back(std::move(child));
    }
    return node;
  }
};

// Deterministic injective point of the affine solution space: free variables
// set to powers of a scalar s, smallest workable s first.
std::map<std::vector<int>, std::vector<Rat>> injective_assignment(
    const lin::Echelon::Solution& sol, const LinearContext& ctx) {
  const size_t r = sol.null_basis.size();
  // each pair functional is a nonzero polynomial of degree <= r in s, so some
  // s in [0, pairs*r] works
  long long pair_count = static_cast<long long>(ctx.nverts) * (ctx.nverts - 1) / 2;
  long long s_max = pair_count * static_cast<long long>(r) * ctx.width + 1;
  for (long long s = 0; s <= s_max; ++s) {
    std::vector<Rat> u = sol.particular;
    Rat pw = 1;
    Rat sr(static_cast<long>(s));
    for (size_t tbi = 0; tbi < r; ++tbi) {
      pw *= sr;
      for (int i = 0; i < ctx.nunk; ++i)
        if (sol.null_basis[tbi][i] != 0) u[i] += pw * sol.null_basis[tbi][i];
    }
    bool injective = true;
    std::set<std::vector<Rat>> seen;
    for (int v = 0; v < ctx.nverts && injective; ++v) {
      std::vector<Rat> val(u.begin() + v * ctx.width, u.begin() + (v + 1) * ctx.width);
      injective = seen.insert(val).second;
    }
    if (!injective) continue;
    std::map<std::vector<int>, std::vector<Rat>> out;
    for (int v = 0; v < ctx.nverts; ++v)
      out[ctx.grid.unflatten(v)] =
          std::vector<Rat>(u.begin() + v * ctx.width, u.begin() + (v + 1) * ctx.width);
    return out;
  }
  fail(Errc::contract, "no injective point found in a feasible solution space");
}

}  // namespace

OracleVerdict refute_embedding_linear(const poly::PolySpec& p, const std::vector<Rat>& params,
                                      const tmpl::Template& t, const std::vector<int>& sizes,
                                      const Budget& budget) {
  poly::PolySpec p_sub = poly::substitute_params(p, params);
  if (poly::xdegree(p_sub) > 1)
    fail(Errc::unsupported, "exact linear backend requires degree <= 1 after parameters");
  if (t.k() != p.k) fail(Errc::arity, "template point count must equal k");
  LinearContext ctx = build_linear_context(p_sub, t, sizes, budget.edge_cap);

  OracleVerdict verdict;
  verdict.backend = "linear-branch-exhaustion";
  LinearRefuter refuter(ctx, budget.branch_cap);
  std::optional<SatLeaf> sat;
  std::unique_ptr<TranscriptNode> tree;
  try {
    tree = refuter.run(0, sat);
  } catch (const BudgetHit&) {
    verdict.status = OracleVerdict::Status::unknown;
    verdict.note = "branch budget exceeded";
    return verdict;
  }
  if (sat) {
    EmbeddingWitness w{t, sizes, params, injective_assignment(sat->sol, ctx)};
    if (!verify_embedding(w, p, budget.edge_cap))
      fail(Errc::contract, "constructed witness failed verification");
    verdict.status = OracleVerdict::Status::sat;
    verdict.witness = std::move(w);
    return verdict;
  }
  verdict.status = OracleVerdict::Status::unsat;
  auto cert = std::make_shared<NonEmbeddingCertificate>();
  cert->t = t;
  cert->sizes = sizes;
  cert->params = params;
  cert->method = "linear-branch-exhaustion";
  cert->transcript = std::move(tree);
  verdict.certificate = std::move(cert);
  return verdict;
}

namespace {

bool replay_node(const TranscriptNode& node, const LinearContext& ctx, lin::Echelon& sys,
                 size_t depth, std::string* why) {
  auto reject = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (node.edge == -1) {
    // leaf containment: a single claimed pair on a full branch
    if (depth != ctx.edges.size() || node.children.size() != 1 ||
        node.children[0].kind != TranscriptNode::Child::Kind::contained)
      return reject("malformed leaf-containment node");
    const auto& ch = node.children[0];
    if (ch.pair_a < 0 || ch.pair_b < 0 || ch.pair_a >= ctx.nverts || ch.pair_b >= ctx.nverts ||
        ch.pair_a == ch.pair_b)
      return reject("bad containment pair");
    if (!pair_forced_equal(sys, ctx, ch.pair_a, ch.pair_b))
      return reject("claimed leaf containment does not hold");
    return true;
  }
  if (depth >= ctx.edges.size()) return reject("transcript deeper than the edge list");
  if (node.edge != static_cast<int>(depth)) return reject("transcript edge order mismatch");
  const auto& cls = ctx.classes[depth];
  if (node.children.size() != cls.size()) return reject("transcript does not cover all classes");
  for (size_t ci = 0; ci < cls.size(); ++ci) {
    const auto& child = node.children[ci];
    if (child.cls != static_cast<int>(ci)) return reject("transcript class order mismatch");
    size_t mark = sys.size();
    auto res = sys.add(cls[ci].a, cls[ci].c);
    switch (child.kind) {
      case TranscriptNode::Child::Kind::inconsistent:
        if (res != lin::Echelon::AddResult::inconsistent)
          return reject("claimed inconsistency does not hold");
        break;
      case TranscriptNode::Child::Kind::contained:
        if (res == lin::Echelon::AddResult::inconsistent)
          return reject("containment claimed on an inconsistent branch");
        if (child.pair_a < 0 || child.pair_b < 0 || child.pair_a >= ctx.nverts ||
            child.pair_b >= ctx.nverts || child.pair_a == child.pair_b)
          return reject("bad containment pair");
        if (!pair_forced_equal(sys, ctx, child.pair_a, child.pair_b))
          return reject("claimed containment does not hold");
        break;
      case TranscriptNode::Child::Kind::subtree:
        if (res == lin::Echelon::AddResult::inconsistent)
          return reject("subtree claimed on an inconsistent branch");
        if (!child.node) return reject("missing subtree");
        if (!replay_node(*child.node, ctx, sys, depth + 1, why)) return false;
        break;
    }
    sys.rollback(mark);
  }
  return true;
}

}  // namespace

bool replay_nonembedding(const NonEmbeddingCertificate& cert, const poly::PolySpec& p,
                         std::string* why) {
  auto reject = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (cert.method != "linear-branch-exhaustion")
    return reject("only linear-branch-exhaustion transcripts replay without an oracle");
  if (!cert.transcript) return reject("missing transcript");
  poly::PolySpec p_sub = poly::substitute_params(p, cert.params);
  if (poly::xdegree(p_sub) > 1) return reject("polynomial is not linear");
  LinearContext ctx = build_linear_context(p_sub, cert.t, cert.sizes, 1ll << 40);
  if (ctx.edges.empty()) return reject("edgeless instance is always embeddable");
  lin::Echelon sys(ctx.nunk);
  return replay_node(*cert.transcript, ctx, sys, 0, why);
}

// ----- subgrid extraction --------------------------------------------------

std::vector<std::vector<int>> extract_injective_subgrid_vec(const std::vector<int>& axes,
                                                            const std::vector<int>& table,
                                                            const std::vector<int>& targets) {
  const int d = static_cast<int>(axes.size());
  if (static_cast<int>(targets.size()) != d) fail(Errc::arity, "targets/axes mismatch");
  tmpl::Grid grid(axes);
  if (static_cast<long long>(table.size()) != grid.count())
    fail(Errc::arity, "table size does not match axes");
  for (int i = 0; i < d; ++i)
    if (targets[i] < 1 || targets[i] > axes[i])
      fail(Errc::budget, "target exceeds available axis values");

  // precondition: one-to-one in each coordinate = no duplicates on any line
  for (int i = 0; i < d; ++i) {
    std::vector<int> coords(d, 0);
    while (true) {
      std::set<int> line;
      for (int v = 0; v < axes[i]; ++v) {
        coords[i] = v;
        if (!line.insert(table[grid.flatten(coords)]).second)
          fail(Errc::contract, "table is not one-to-one in coordinate " + std::to_string(i));
      }
      coords[i] = 0;
      int j = d - 1;
      while (j >= 0 && (j == i || ++coords[j] == axes[j])) {
        if (j != i) coords[j] = 0;
        --j;
      }
      if (j < 0) break;
    }
  }

  std::vector<std::vector<int>> chosen(d);
  auto leaf_ok = [&]() {
    std::set<int> seen;
    std::vector<int> idx(d, 0);
    while (true) {
      std::vector<int> coords(d);
      for (int i = 0; i < d; ++i) coords[i] = chosen[i][idx[i]];
      if (!seen.insert(table[grid.flatten(coords)]).second) return false;
      int i = d - 1;
      while (i >= 0 && ++idx[i] == targets[i]) idx[i--] = 0;
      if (i < 0) break;
    }
    return true;
  };
  // lexicographic combinations per axis, first success wins
  auto rec = [&](auto&& self, int axis) -> bool {
    if (axis == d) return leaf_ok();
    std::vector<int>& comb = chosen[axis];
    comb.resize(targets[axis]);
    std::iota(comb.begin(), comb.end(), 0);
    while (true) {
      if (self(self, axis + 1)) return true;
      int i = targets[axis] - 1;
      while (i >= 0 && comb[i] == axes[axis] - targets[axis] + i) --i;
      if (i < 0) break;
      ++comb[i];
      for (int j = i + 1; j < targets[axis]; ++j) comb[j] = comb[j - 1] + 1;
    }
    return false;
  };
  if (!rec(rec, 0)) fail(Errc::budget, "no injective subgrid of the requested size found");
  return chosen;
}

std::vector<std::vector<int>> extract_injective_subgrid(const std::vector<int>& axes,
                                                        const std::vector<int>& table, int m) {
  return extract_injective_subgrid_vec(axes, table, std::vector<int>(axes.size(), m));
}

// ----- witnesses from immersions -------------------------------------------

EmbeddingWitness embedding_from_immersion(const immerse::ImmersionCertificate& cert,
                                          const tmpl::Template& t,
                                          const std::vector<int>& sizes,
                                          const poly::PolySpec& p,
                                          const std::vector<Rat>& params, const Budget& budget) {
  tmpl::Surjection pi(t.d(), cert.pi);
  if (!(tmpl::collapse(t, pi) == cert.collapsed))
    fail(Errc::contract, "certificate collapse does not match the template");
  if (static_cast<int>(sizes.size()) != t.d()) fail(Errc::arity, "sizes/dimension mismatch");
  if (!immerse::verify_injective_per_coordinate(cert.map, cert.inj))
    fail(Errc::contract, "injectivity certificate failed");
  const int m = pi.m;

  // collapsed axis j carries the product of the original axes mapped onto j
  std::vector<std::vector<int>> group(m);
  for (int i = 0; i < t.d(); ++i) group[pi.map[i]].push_back(i);
  std::vector<int> needed(m, 1);
  for (int j = 0; j < m; ++j)
    for (int i : group[j]) needed[j] *= sizes[i];

  // sample twice the needed count of distinct inputs inside the domain
  auto samples_for = [&](int count) {
    std::vector<Rat> xs;
    const auto& lo = cert.inj.lo;
    const auto& hi = cert.inj.hi;
    using K = poly::Endpoint::Kind;
    for (int r = 0; r < count; ++r) {
      if (lo.kind == K::finite && hi.kind == K::finite) {
        Rat step(r + 1, count + 1);
        step.canonicalize();
        xs.push_back(lo.value + (hi.value - lo.value) * step);
      } else if (lo.kind == K::finite) {
        xs.push_back(lo.value + r + 1);
      } else if (hi.kind == K::finite) {
        xs.push_back(hi.value - r - 1);
      } else {
        xs.push_back(Rat(r));
      }
    }
    return xs;
  };
  // The extraction can need more than 2x oversampling (a sum map, for one,
  // needs a difference-avoiding selection), so widen geometrically.
  std::vector<std::vector<Rat>> samples(m);
  std::vector<std::vector<int>> ys;
  for (int factor = 2; factor <= 16; factor *= 2) {
    std::vector<int> axes(m);
    for (int j = 0; j < m; ++j) {
      samples[j] = samples_for(factor * needed[j]);
      axes[j] = static_cast<int>(samples[j].size());
    }
    tmpl::Grid sample_grid(axes);
    std::map<std::vector<Rat>, int> value_ids;
    std::vector<int> table(sample_grid.count());
    for (long long id = 0; id < sample_grid.count(); ++id) {
      std::vector<int> coords = sample_grid.unflatten(static_cast<int>(id));
      std::vector<Rat> in(m);
      for (int j = 0; j < m; ++j) in[j] = samples[j][coords[j]];
      std::vector<Rat> out(cert.map.n);
      for (int c = 0; c < cert.map.n; ++c) out[c] = cert.map.comps[c].eval(in);
      auto [it, fresh] = value_ids.emplace(std::move(out), static_cast<int>(value_ids.size()));
      table[id] = it->second;
    }
    try {
      ys = extract_injective_subgrid_vec(axes, table, needed);
      break;
    } catch (const Error& e) {
      if (e.code() != Errc::budget || factor == 16) throw;
    }
  }

  // grid point -> collapsed index per axis -> sampled input -> mapped value
  EmbeddingWitness w{t, sizes, params, {}};
  tmpl::Grid grid(sizes);
  for (long long id = 0; id < grid.count(); ++id) {
    std::vector<int> alpha = grid.unflatten(static_cast<int>(id));
    std::vector<Rat> in(m);
    for (int j = 0; j < m; ++j) {
      int flat = 0;
      for (int i : group[j]) flat = flat * sizes[i] + alpha[i];
      in[j] = samples[j][ys[j][flat]];
    }
    std::vector<Rat> out(cert.map.n);
    for (int c = 0; c < cert.map.n; ++c) out[c] = cert.map.comps[c].eval(in);
    w.assignment[alpha] = std::move(out);
  }
  if (!verify_embedding(w, p, budget.edge_cap))
    fail(Errc::contract, "immersion-derived witness failed verification");
  return w;
}

// ----- rational search and the oracle seam ----------------------------------

namespace {

OracleVerdict rational_search(const poly::PolySpec& p, const std::vector<Rat>& params,
                              const tmpl::Template& t, const std::vector<int>& sizes,
                              const Budget& budget) {
  OracleVerdict verdict;
  verdict.backend = "rational-search";
  tmpl::Grid grid(sizes);
  const int nverts = static_cast<int>(grid.count());
  tmpl::FiniteHypergraph h = edges_of(t, sizes, budget.edge_cap);
  // edges indexed by their largest vertex, checked as soon as it is assigned
  std::vector<std::vector<int>> ending(nverts);
  for (size_t ei = 0; ei < h.edges.size(); ++ei)
    ending[h.edges[ei].back()].push_back(static_cast<int>(ei));

  std::vector<Rat> vals = rats_up_to_height(budget.rational_height);
  std::vector<std::vector<Rat>> points;
  {
    std::vector<int> idx(p.n, 0);
    while (true) {
      std::vector<Rat> pt(p.n);
      for (int j = 0; j < p.n; ++j) pt[j] = vals[idx[j]];
      points.push_back(std::move(pt));
      int j = p.n - 1;
      while (j >= 0 && ++idx[j] == static_cast<int>(vals.size())) idx[j--] = 0;
      if (j < 0) break;
    }
  }

  long long nodes = 0;
  std::vector<int> pick(nverts, -1);
  std::vector<char> used(points.size(), 0);
  auto rec = [&](auto&& self, int v) -> bool {
    if (v == nverts) return true;
    for (size_t ci = 0; ci < points.size(); ++ci) {
      if (used[ci]) continue;
      if (++nodes > budget.rational_nodes) throw BudgetHit{};
      pick[v] = static_cast<int>(ci);
      used[ci] = 1;
      bool ok = true;
      for (int ei : ending[v]) {
        std::vector<std::vector<Rat>> pts;
        for (int vv : h.edges[ei]) pts.push_back(points[pick[vv]]);
        if (!poly::edge_predicate(p, params, pts)) {
          ok = false;
          break;
        }
      }
      if (ok && self(self, v + 1)) return true;
      used[ci] = 0;
      pick[v] = -1;
    }
    return false;
  };
  bool found = false;
  try {
    found = rec(rec, 0);
  } catch (const BudgetHit&) {
    verdict.status = OracleVerdict::Status::unknown;
    verdict.note = "rational search node budget exceeded";
    return verdict;
  }
  if (!found) {
    if (static_cast<long long>(points.size()) < nverts)
      verdict.note = "candidate point set smaller than the grid";
    else
      verdict.note = "no witness within the candidate heights";
    verdict.status = OracleVerdict::Status::unknown;
    return verdict;
  }
  EmbeddingWitness w{t, sizes, params, {}};
  for (int v = 0; v < nverts; ++v) w.assignment[grid.unflatten(v)] = points[pick[v]];
  if (!verify_embedding(w, p, budget.edge_cap))
    fail(Errc::contract, "rational search witness failed verification");
  verdict.status = OracleVerdict::Status::sat;
  verdict.witness = std::move(w);
  return verdict;
}

// Polynomial in the grid unknowns h(v)_j, named "v<id>.<j>" for the protocol.
io::json unknown_poly_json(const poly::Poly& q, int width) {
  io::json terms = io::json::array();
  const auto& ts = q.terms();
  for (auto it = ts.rbegin(); it != ts.rend(); ++it) {
    io::json exps = io::json::object();
    for (int v = 0; v < q.nvars(); ++v)
      if (it->first[v] > 0)
        exps["v" + std::to_string(v / width) + "." + std::to_string(v % width)] = it->first[v];
    terms.push_back(io::json{{"coeff", rat_str(it->second)}, {"exps", exps}});
  }
  return io::json{{"terms", terms}};
}

OracleVerdict oracle_decide(const poly::PolySpec& p, const std::vector<Rat>& params,
                            const tmpl::Template& t, const std::vector<int>& sizes,
                            const Budget& budget, const std::string& oracle_cmd) {
  OracleVerdict verdict;
  verdict.backend = "oracle:" + oracle_cmd;
  poly::PolySpec p_sub = poly::substitute_params(p, params);
  tmpl::Grid grid(sizes);
  const int nverts = static_cast<int>(grid.count());
  const int nunk = nverts * p_sub.n;
  tmpl::FiniteHypergraph h = edges_of(t, sizes, budget.edge_cap);

  // one equality per edge: the product over its distinct ordering polynomials
  io::json equalities = io::json::array();
  for (const auto& edge : h.edges) {
    std::set<std::string> seen;
    std::vector<poly::Poly> factors;
    std::vector<int> perm(p_sub.k);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::string> names(nunk);
    for (int v = 0; v < nunk; ++v)
      names[v] = "v" + std::to_string(v / p_sub.n) + "." + std::to_string(v % p_sub.n);
    do {
      std::vector<int> map(p_sub.nvars());
      for (int i = 0; i < p_sub.k; ++i)
        for (int j = 0; j < p_sub.n; ++j)
          map[p_sub.xvar(i, j)] = edge[perm[i]] * p_sub.n + j;
      poly::Poly q = p_sub.p.rename(nunk, map);
      if (seen.insert(q.str(names)).second) factors.push_back(std::move(q));
    } while (std::next_permutation(perm.begin(), perm.end()));
    poly::Poly prod = poly::Poly::constant(nunk, 1);
    for (const auto& f : factors) prod = prod * f;
    equalities.push_back(unknown_poly_json(prod, p_sub.n));
  }
  io::json disequalities = io::json::array();
  for (int a = 0; a < nverts; ++a)
    for (int b = a + 1; b < nverts; ++b) {
      poly::Poly sq(nunk);
      for (int j = 0; j < p_sub.n; ++j) {
        poly::Poly diff = poly::Poly::var(nunk, a * p_sub.n + j) -
                          poly::Poly::var(nunk, b * p_sub.n + j);
        sq = sq + diff * diff;
      }
      disequalities.push_back(unknown_poly_json(sq, p_sub.n));
    }
  io::json vars = io::json::array();
  for (int v = 0; v < nverts; ++v)
    for (int j = 0; j < p_sub.n; ++j)
      vars.push_back("v" + std::to_string(v) + "." + std::to_string(j));
  io::json request{{"vars", vars}, {"equalities", equalities}, {"disequalities", disequalities}};

  oracle::Client client(oracle_cmd);
  io::json resp = io::parse_json_text(client.query(request.dump()));
  std::string status = resp.contains("status") ? resp.at("status").get<std::string>() : "unknown";
  if (status == "unsat") {
    verdict.status = OracleVerdict::Status::unsat;
    auto cert = std::make_shared<NonEmbeddingCertificate>();
    cert->t = t;
    cert->sizes = sizes;
    cert->params = params;
    cert->method = "oracle:" + oracle_cmd;
    verdict.certificate = std::move(cert);
    return verdict;
  }
  if (status == "sat") {
    if (!resp.contains("witness")) {
      verdict.status = OracleVerdict::Status::unknown;
      verdict.note = "oracle sat without witness";
      return verdict;
    }
    EmbeddingWitness w{t, sizes, params, {}};
    try {
      for (int v = 0; v < nverts; ++v) {
        std::vector<Rat> val(p_sub.n);
        for (int j = 0; j < p_sub.n; ++j)
          val[j] = parse_rat(resp.at("witness")
                                 .at("v" + std::to_string(v) + "." + std::to_string(j))
                                 .get<std::string>());
        w.assignment[grid.unflatten(v)] = std::move(val);
      }
    } catch (const std::exception&) {
      verdict.status = OracleVerdict::Status::unknown;
      verdict.note = "oracle witness unparsable";
      return verdict;
    }
    if (!verify_embedding(w, p, budget.edge_cap)) {
      verdict.status = OracleVerdict::Status::unknown;
      verdict.note = "oracle witness failed verification";
      return verdict;
    }
    verdict.status = OracleVerdict::Status::sat;
    verdict.witness = std::move(w);
    return verdict;
  }
  verdict.status = OracleVerdict::Status::unknown;
  verdict.note = "oracle returned unknown";
  return verdict;
}

}  // namespace

OracleVerdict search_embedding(const poly::PolySpec& p, const std::vector<Rat>& params,
                               const tmpl::Template& t, const std::vector<int>& sizes,
                               Strategy strategy, const Budget& budget,
                               const std::string& oracle_cmd,
                               const immerse::ImmersionCertificate* cert) {
  switch (strategy) {
    case Strategy::exact_linear:
      return refute_embedding_linear(p, params, t, sizes, budget);
    case Strategy::from_immersion: {
      if (!cert) fail(Errc::contract, "from_immersion needs a certificate");
      OracleVerdict v;
      v.backend = "from-immersion";
      v.status = OracleVerdict::Status::sat;
      v.witness = embedding_from_immersion(*cert, t, sizes, p, params, budget);
      return v;
    }
    case Strategy::rational_search:
      return rational_search(p, params, t, sizes, budget);
    case Strategy::external_oracle:
      if (oracle_cmd.empty()) fail(Errc::contract, "external_oracle needs a command");
      return oracle_decide(p, params, t, sizes, budget, oracle_cmd);
  }
  fail(Errc::contract, "unreachable");
}

}  // namespace ahg::embed
