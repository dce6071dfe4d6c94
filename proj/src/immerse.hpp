#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "budget.hpp"
#include "poly.hpp"
#include "sturm.hpp"
#include "template.hpp"

namespace ahg::immerse {

// How a polynomial map is certified one-to-one in each coordinate.
struct InjectivityCert {
  enum class Kind {
    affine_columns,  // map is affine and every input coordinate's column is nonzero
    sturm_monotone,  // m=1: a component's derivative has no root in the interval
  };
  Kind kind = Kind::affine_columns;
  int component = 0;       // sturm_monotone only
  poly::Endpoint lo = poly::Endpoint::neg_inf();
  poly::Endpoint hi = poly::Endpoint::pos_inf();
};

// Self-contained evidence that `map` immerses the template hypergraph of
// `collapsed` over any product of subsets of its domain: the injectivity
// certificate plus the ordering sigma for which the composed polynomial is
// identically zero on the generic pattern.
struct ImmersionCertificate {
  poly::PolyMap map;
  tmpl::Template collapsed;
  std::vector<int> pi;      // the surjection that produced `collapsed`
  InjectivityCert inj;
  std::vector<int> sigma;   // ordering whose composed factor vanishes
};

struct Rejection {
  std::vector<std::string> residual_hashes;  // one per tried ordering, in order
};

bool verify_injective_per_coordinate(const poly::PolyMap& f, const InjectivityCert& cert);

// Accepts iff some ordering of the k pattern points makes the composition
// with the generic pattern of `collapsed` the zero polynomial. A polynomial
// identity survives every specialization of the pattern variables, so every
// edge with pairwise-distinct images lands on an edge of the zero hypergraph.
std::variant<ImmersionCertificate, Rejection> verify_immersion(
    const poly::PolyMap& f, const tmpl::Template& collapsed, const std::vector<int>& pi,
    const poly::PolySpec& p, const std::vector<Rat>& params, const InjectivityCert& inj);

// Re-checks an existing certificate (pinned sigma), including injectivity.
bool replay_immersion(const ImmersionCertificate& cert, const poly::PolySpec& p,
                      const std::vector<Rat>& params);

struct CatalogConfig {
  int affine_height = 2;
  int curve_degree = 3;
  int curve_height = 1;
  Rat curve_lo = -10;
  Rat curve_hi = 10;
  std::vector<poly::PolyMap> user_maps;
};

struct Candidate {
  poly::PolyMap f;
  InjectivityCert inj;
};

// Deterministic stream of (surjection, certified candidate) pairs for a
// template: surjections in restricted-growth order grouped by ascending m,
// affine maps ordered by coefficient height, then curves (m=1 only), then
// user maps. Candidates without a checkable injectivity certificate are
// skipped. Positions index the stream stably, so a dovetailed search can
// resume mid-stream.
class CandidateStream {
 public:
  CandidateStream(const tmpl::Template& t, int n_out, const CatalogConfig& cfg);

  struct Item {
    tmpl::Surjection pi;
    Candidate cand;
  };
  // nullopt once the stream is exhausted.
  std::optional<Item> at(long long pos) const;
  long long size() const { return static_cast<long long>(items_.size()); }

 private:
  std::vector<Item> items_;
};

// First certified immersion in stream order, scanning at most max_candidates
// stream positions. nullopt is "not found", never a refutation.
std::optional<ImmersionCertificate> search_immersion(const poly::PolySpec& p,
                                                     const std::vector<Rat>& params,
                                                     const tmpl::Template& t,
                                                     const CatalogConfig& cfg,
                                                     long long max_candidates);

// Whether the curve (m=1) immerses the complete k-pattern, i.e. all k-subsets
// of the curve's image are edges.
bool complete_curve_check(const poly::PolySpec& p, const std::vector<Rat>& params,
                          const poly::PolyMap& f, const InjectivityCert& inj);

}  // namespace ahg::immerse
