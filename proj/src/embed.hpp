#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "budget.hpp"
#include "hypergraph.hpp"
#include "immerse.hpp"
#include "poly.hpp"
#include "template.hpp"

namespace ahg::embed {

// Concrete embedding of L(sizes, t) into the zero hypergraph: an injective
// assignment of grid points to rational vectors sending edges to edges.
struct EmbeddingWitness {
  tmpl::Template t;
  std::vector<int> sizes;
  std::vector<Rat> params;
  std::map<std::vector<int>, std::vector<Rat>> assignment;
};

// Branch tree of the exact linear refutation. Each node decides one edge's
// vanishing ordering class; every class is a child, and every leaf carries a
// machine-checkable failure reason.
struct TranscriptNode {
  int edge = 0;
  struct Child {
    int cls = 0;
    enum class Kind { inconsistent, contained, subtree } kind = Kind::inconsistent;
    int pair_a = 0, pair_b = 0;  // contained: grid vertices forced equal
    std::unique_ptr<TranscriptNode> node;
  };
  std::vector<Child> children;
};

struct NonEmbeddingCertificate {
  tmpl::Template t;
  std::vector<int> sizes;
  std::vector<Rat> params;
  std::string method;  // "linear-branch-exhaustion" or "oracle:<name>"
  std::unique_ptr<TranscriptNode> transcript;  // null for oracle-backed refutations
};

struct OracleVerdict {
  enum class Status { sat, unsat, unknown };
  Status status = Status::unknown;
  std::string backend;
  std::optional<EmbeddingWitness> witness;             // present iff sat
  std::shared_ptr<NonEmbeddingCertificate> certificate;  // present iff unsat
  std::string note;  // e.g. budget reason for unknown
};

// Independent check of a witness: injectivity by exact comparison, then every
// edge of L(sizes, t) must satisfy the edge predicate.
bool verify_embedding(const EmbeddingWitness& w, const poly::PolySpec& p, long long edge_cap);

// Complete decision for polynomials of x-degree <= 1 after parameter
// substitution. Branches over one vanishing-ordering class per edge; a branch
// is feasible iff its linear system is consistent and its solution space is
// not contained in any point-equality subspace. Nonlinear input is an
// unsupported-backend error; exceeding branch_cap yields unknown.
OracleVerdict refute_embedding_linear(const poly::PolySpec& p, const std::vector<Rat>& params,
                                      const tmpl::Template& t, const std::vector<int>& sizes,
                                      const Budget& budget);

// Replays a linear-branch-exhaustion transcript from scratch: re-derives the
// edge list and ordering classes, walks the tree checking class coverage, and
// re-solves every branch prefix to confirm each claimed failure.
bool replay_nonembedding(const NonEmbeddingCertificate& cert, const poly::PolySpec& p,
                         std::string* why = nullptr);

// Axis subsets (one per coordinate) of the requested sizes on which the table
// is injective. The table must be one-to-one in each coordinate (checked).
// table[flat] is a value id; flat indices are row-major over axes.
std::vector<std::vector<int>> extract_injective_subgrid_vec(const std::vector<int>& axes,
                                                            const std::vector<int>& table,
                                                            const std::vector<int>& targets);
std::vector<std::vector<int>> extract_injective_subgrid(const std::vector<int>& axes,
                                                        const std::vector<int>& table, int m);

// Builds a verified witness for L(sizes, t) from an immersion certificate for
// t's pi-collapse: evaluate the map on sampled axis values, extract an
// injective subgrid, and compose with the collapse vertex map.
EmbeddingWitness embedding_from_immersion(const immerse::ImmersionCertificate& cert,
                                          const tmpl::Template& t,
                                          const std::vector<int>& sizes,
                                          const poly::PolySpec& p,
                                          const std::vector<Rat>& params, const Budget& budget);

enum class Strategy { exact_linear, from_immersion, rational_search, external_oracle };

// Positive results are always re-verified through verify_embedding before
// being reported. rational_search never reports unsat.
OracleVerdict search_embedding(const poly::PolySpec& p, const std::vector<Rat>& params,
                               const tmpl::Template& t, const std::vector<int>& sizes,
                               Strategy strategy, const Budget& budget,
                               const std::string& oracle_cmd = "",
                               const immerse::ImmersionCertificate* cert = nullptr);

}  // namespace ahg::embed
