#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "budget.hpp"
#include "embed.hpp"
#include "immerse.hpp"
#include "ordinal.hpp"
#include "poly.hpp"

namespace ahg::depth {

struct TemplateVerdict {
  tmpl::Template t;
  int e = 0;  // minimum distinguisher size of t
  enum class Status { refuted, confirmed, open } status = Status::open;

  // refuted: least grid size M with no embedding, plus the replayable proof
  int refuted_m = 0;
  std::shared_ptr<embed::NonEmbeddingCertificate> refutation;

  // confirmed: replayable immersion certificate
  std::optional<immerse::ImmersionCertificate> confirmation;

  // open: how far the search got
  int max_m_sat = 0;             // largest M with a verified embedding (0 = none)
  int next_m = 2;                // first M not yet decided
  bool refutation_exhausted = false;
  bool catalog_exhausted = false;
};

struct AvoidEntry {
  card::Cardinal kappa{card::OrdinalIndex::finite(0)};
  card::OrdinalIndex gamma;
  enum class V { avoidable, unavoidable, conditional } verdict = V::conditional;
  std::string detail;
};

struct ChiResult {
  card::Cardinal lo{card::OrdinalIndex::finite(0)};  // bound from depth_hi
  card::Cardinal hi{card::OrdinalIndex::finite(0)};  // bound from depth_lo
  bool single = false;
};

// Verdict table over every canonical template with 1 <= d < k, plus the depth
// interval the certificates justify: a confirmed template with distinguisher
// size e caps depth at e-1; refuting every template with e <= t forces depth
// >= t; refuting everything proves infinite depth.
struct DepthReport {
  poly::PolySpec p;
  std::vector<Rat> params;
  Budget budget;
  std::string oracle;  // empty when no external oracle was configured

  std::vector<TemplateVerdict> verdicts;
  card::Depth lo = card::Depth::of(0);
  card::Depth hi = card::Depth::inf();
  bool decided = false;

  std::vector<AvoidEntry> avoidability;
};

DepthReport classify(const poly::PolySpec& p, const std::vector<Rat>& params,
                     const Budget& budget, const std::string& oracle_cmd = "");

// kappa-avoidability under the setting, from the report's depth interval.
AvoidEntry classify_kappa(const DepthReport& report, const card::Cardinal& kappa,
                          const card::ContinuumSetting& setting);

// Least infinite chromatic bound; an interval when the depth is undecided.
ChiResult chromatic_report(const DepthReport& report, const card::ContinuumSetting& setting);

// Recomputes the depth interval from the verdict statuses alone.
void derive_interval(DepthReport& report);

}  // namespace ahg::depth
