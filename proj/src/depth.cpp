#include "depth.hpp"

#include <algorithm>
#include <chrono>

#include "error.hpp"

namespace ahg::depth {

namespace {

bool depth_ge(const card::Depth& d, uint64_t m) { return d.infinite || d.value >= m; }

}  // namespace

void derive_interval(DepthReport& r) {
  bool all_refuted = true;
  std::optional<int> min_unrefuted_e;
  std::optional<int> min_confirmed_cap;
  for (const auto& v : r.verdicts) {
    if (v.status != TemplateVerdict::Status::refuted) {
      all_refuted = false;
      if (!min_unrefuted_e || v.e < *min_unrefuted_e) min_unrefuted_e = v.e;
    }
    if (v.status == TemplateVerdict::Status::confirmed) {
      int cap = v.e - 1;
      if (!min_confirmed_cap || cap < *min_confirmed_cap) min_confirmed_cap = cap;
    }
  }
  if (all_refuted) {
    r.lo = card::Depth::inf();
    r.hi = card::Depth::inf();
  } else {
    r.lo = card::Depth::of(static_cast<uint32_t>(*min_unrefuted_e - 1));
    r.hi = min_confirmed_cap ? card::Depth::of(static_cast<uint32_t>(*min_confirmed_cap))
                             : card::Depth::inf();
  }
  r.decided = r.lo == r.hi;
}

DepthReport classify(const poly::PolySpec& p, const std::vector<Rat>& params,
                     const Budget& budget, const std::string& oracle_cmd) {
  if (p.k < 2) fail(Errc::contract, "classification needs k >= 2");
  if (static_cast<int>(params.size()) != p.l) fail(Errc::arity, "parameter count must equal l");

  DepthReport report;
  report.p = p;
  report.params = params;
  report.budget = budget;
  report.oracle = oracle_cmd;

  for (int d = 1; d < p.k; ++d)
    for (const tmpl::Template& t : tmpl::enumerate_templates(p.k, d))
      report.verdicts.push_back(
          TemplateVerdict{t, tmpl::min_distinguisher(t).e, TemplateVerdict::Status::open, 0,
                          nullptr, std::nullopt, 0, 2, false, false});
  std::stable_sort(report.verdicts.begin(), report.verdicts.end(),
                   [](const TemplateVerdict& a, const TemplateVerdict& b) {
                     if (a.e != b.e) return a.e < b.e;
                     if (a.t.d() != b.t.d()) return a.t.d() < b.t.d();
                     return a.t.key() < b.t.key();
                   });

  const bool linear = poly::xdegree(poly::substitute_params(p, params)) <= 1;
  immerse::CatalogConfig cfg;
  cfg.affine_height = budget.affine_height;
  cfg.curve_degree = budget.curve_degree;
  cfg.curve_height = budget.curve_height;

  // candidate streams and positions, built lazily per template
  std::vector<std::unique_ptr<immerse::CandidateStream>> streams(report.verdicts.size());
  std::vector<long long> stream_pos(report.verdicts.size(), 0);
  std::vector<std::map<std::vector<int>, tmpl::Template>> collapse_cache(report.verdicts.size());

  auto deadline = std::chrono::steady_clock::now() +
                  std::chrono::seconds(budget.time_budget_seconds);
  auto out_of_time = [&]() {
    return budget.time_budget_seconds > 0 && std::chrono::steady_clock::now() > deadline;
  };

  auto resolved = [](const TemplateVerdict& v) {
    return v.status != TemplateVerdict::Status::open ||
           (v.refutation_exhausted && v.catalog_exhausted);
  };

  // Dovetail: round-robin over templates ordered by (e, canonical order); each
  // turn is one refutation step (the next grid size) and one catalog slice.
  bool progress = true;
  while (progress && !report.decided) {
    progress = false;
    for (size_t vi = 0; vi < report.verdicts.size() && !report.decided; ++vi) {
      TemplateVerdict& v = report.verdicts[vi];
      if (resolved(v)) continue;
      if (out_of_time()) {
        v.refutation_exhausted = true;
        v.catalog_exhausted = true;
        continue;
      }
      progress = true;

      // refutation step at the next grid size
      if (!v.refutation_exhausted && v.status == TemplateVerdict::Status::open) {
        if (v.next_m > budget.grid_max) {
          v.refutation_exhausted = true;
        } else {
          std::vector<int> sizes(v.t.d(), v.next_m);
          try {
            embed::OracleVerdict res;
            if (linear) {
              res = embed::refute_embedding_linear(p, params, v.t, sizes, budget);
            } else if (!oracle_cmd.empty()) {
              res = embed::search_embedding(p, params, v.t, sizes,
                                            embed::Strategy::external_oracle, budget, oracle_cmd);
            } else {
              res = embed::search_embedding(p, params, v.t, sizes,
                                            embed::Strategy::rational_search, budget);
            }
            switch (res.status) {
              case embed::OracleVerdict::Status::unsat:
                v.status = TemplateVerdict::Status::refuted;
                v.refuted_m = v.next_m;
                v.refutation = res.certificate;
                break;
              case embed::OracleVerdict::Status::sat:
                v.max_m_sat = v.next_m;
                ++v.next_m;
                break;
              case embed::OracleVerdict::Status::unknown:
                // raising M only makes refutation harder; stop here
                v.refutation_exhausted = true;
                break;
            }
          } catch (const Error& e) {
            if (e.code() == Errc::budget)
              v.refutation_exhausted = true;
            else
              throw;
          }
        }
      }

      // immersion step: one slice of the candidate catalog
      if (!v.catalog_exhausted && v.status == TemplateVerdict::Status::open) {
        if (!streams[vi])
          streams[vi] = std::make_unique<immerse::CandidateStream>(v.t, p.n, cfg);
        long long end = std::min(stream_pos[vi] + budget.catalog_slice, streams[vi]->size());
        for (; stream_pos[vi] < end; ++stream_pos[vi]) {
          auto item = streams[vi]->at(stream_pos[vi]);
          auto it = collapse_cache[vi].find(item->pi.map);
          if (it == collapse_cache[vi].end())
            it = collapse_cache[vi].emplace(item->pi.map, tmpl::collapse(v.t, item->pi)).first;
          auto res = immerse::verify_immersion(item->cand.f, it->second, item->pi.map, p, params,
                                               item->cand.inj);
          if (std::holds_alternative<immerse::ImmersionCertificate>(res)) {
            v.status = TemplateVerdict::Status::confirmed;
            v.confirmation = std::get<immerse::ImmersionCertificate>(std::move(res));
            break;
          }
        }
        if (v.status == TemplateVerdict::Status::open && stream_pos[vi] >= streams[vi]->size())
          v.catalog_exhausted = true;
      }

      derive_interval(report);
    }
  }
  derive_interval(report);
  return report;
}

AvoidEntry classify_kappa(const DepthReport& report, const card::Cardinal& kappa,
                          const card::ContinuumSetting& setting) {
  if (!card::validate_setting(setting))
    fail(Errc::invalid, "invalid continuum setting: gamma=" + setting.gamma.str());
  AvoidEntry entry;
  entry.kappa = kappa;
  entry.gamma = setting.gamma;

  std::optional<uint64_t> m = card::least_m_reaching(kappa, setting.gamma);
  // avoidable iff depth >= m (m infinite: iff depth is infinite)
  bool lo_ge_m = m ? depth_ge(report.lo, *m) : report.lo.infinite;
  bool hi_lt_m = m ? !depth_ge(report.hi, *m) : !report.hi.infinite;
  std::string m_str = m ? std::to_string(*m) : "inf";
  if (lo_ge_m) {
    entry.verdict = AvoidEntry::V::avoidable;
    entry.detail = "depth >= " + report.lo.str() + " >= " + m_str;
  } else if (hi_lt_m) {
    entry.verdict = AvoidEntry::V::unavoidable;
    entry.detail = "depth <= " + report.hi.str() + " < " + m_str;
  } else if (!report.decided) {
    entry.verdict = AvoidEntry::V::conditional;
    entry.detail = "avoidable iff true depth >= " + m_str + "; interval [" + report.lo.str() +
                   ", " + report.hi.str() + "] does not settle it";
  } else {
    entry.verdict = AvoidEntry::V::unavoidable;
    entry.detail = "depth = " + report.lo.str() + " < " + m_str;
  }
  return entry;
}

ChiResult chromatic_report(const DepthReport& report, const card::ContinuumSetting& setting) {
  ChiResult res;
  res.lo = card::infinite_chromatic(report.hi, setting);
  res.hi = card::infinite_chromatic(report.lo, setting);
  res.single = res.lo == res.hi;
  return res;
}

}  // namespace ahg::depth
