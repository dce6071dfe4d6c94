#include "ahg/ahg.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "depth.hpp"
#include "error.hpp"
#include "jsonio.hpp"

using namespace ahg;

struct ahg_poly {
  poly::PolySpec p;
};
struct ahg_template {
  tmpl::Template t;
};
struct ahg_report {
  depth::DepthReport r;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

ahg_status status_of(const Error& e) {
  switch (e.code()) {
    case Errc::budget:
      return AHG_BUDGET;
    case Errc::unsupported:
      return AHG_UNSUPPORTED;
    default:
      return AHG_ERROR;
  }
}

template <typename F>
ahg_status guarded(F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return AHG_ERROR;
  }
}

Budget budget_of(const ahg_budget* b) {
  Budget out;
  if (!b) return out;
  out.grid_max = b->grid_max;
  out.edge_cap = b->edge_cap;
  out.branch_cap = b->branch_cap;
  out.affine_height = b->affine_height;
  out.curve_degree = b->curve_degree;
  out.curve_height = b->curve_height;
  out.rational_height = b->rational_height;
  out.rational_nodes = b->rational_nodes;
  out.catalog_slice = b->catalog_slice;
  out.time_budget_seconds = b->time_budget_seconds;
  return out;
}

}  // namespace

extern "C" {

void ahg_budget_defaults(ahg_budget* budget) {
  Budget d;
  budget->grid_max = d.grid_max;
  budget->edge_cap = d.edge_cap;
  budget->branch_cap = d.branch_cap;
  budget->affine_height = d.affine_height;
  budget->curve_degree = d.curve_degree;
  budget->curve_height = d.curve_height;
  budget->rational_height = d.rational_height;
  budget->rational_nodes = d.rational_nodes;
  budget->catalog_slice = d.catalog_slice;
  budget->time_budget_seconds = d.time_budget_seconds;
}

const char* ahg_version(void) { return "0.1.0"; }

const char* ahg_last_error(void) { return g_last_error.c_str(); }

void ahg_string_free(char* s) { std::free(s); }

ahg_status ahg_poly_parse(const char* json, ahg_poly** out) {
  return guarded([&] {
    *out = new ahg_poly{io::polyspec_from_json(io::parse_json_text(json))};
    return AHG_OK;
  });
}

void ahg_poly_free(ahg_poly* p) { delete p; }

ahg_status ahg_poly_json(const ahg_poly* p, char** out_json) {
  return guarded([&] {
    *out_json = dup_string(io::dump(io::polyspec_to_json(p->p)));
    return AHG_OK;
  });
}

ahg_status ahg_template_parse(const char* json, ahg_template** out) {
  return guarded([&] {
    *out = new ahg_template{io::template_from_json(io::parse_json_text(json))};
    return AHG_OK;
  });
}

void ahg_template_free(ahg_template* t) { delete t; }

ahg_status ahg_template_canonical_json(const ahg_template* t, char** out_json) {
  return guarded([&] {
    *out_json = dup_string(io::dump(io::template_to_json(tmpl::canonicalize(t->t))));
    return AHG_OK;
  });
}

ahg_status ahg_template_distinguisher(const ahg_template* t, int* e_out, char** witness_json) {
  return guarded([&] {
    tmpl::Distinguisher dist = tmpl::min_distinguisher(t->t);
    *e_out = dist.e;
    *witness_json = dup_string(io::dump(io::json(dist.coords)));
    return AHG_OK;
  });
}

ahg_status ahg_template_collapse(const ahg_template* t, const int* pi, int pi_len,
                                 ahg_template** out) {
  return guarded([&] {
    tmpl::Surjection s(pi_len, std::vector<int>(pi, pi + pi_len));
    *out = new ahg_template{tmpl::collapse(t->t, s)};
    return AHG_OK;
  });
}

ahg_status ahg_enumerate_templates(int k, int d, char** out_json) {
  return guarded([&] {
    io::json arr = io::json::array();
    for (const auto& t : tmpl::enumerate_templates(k, d)) arr.push_back(io::template_to_json(t));
    *out_json = dup_string(io::dump(arr));
    return AHG_OK;
  });
}

ahg_status ahg_template_hypergraph(const ahg_template* t, const int* sizes, int nsizes,
                                   long long edge_cap, char** out_json) {
  return guarded([&] {
    tmpl::FiniteHypergraph h =
        tmpl::template_hypergraph(t->t, std::vector<int>(sizes, sizes + nsizes), edge_cap);
    *out_json = dup_string(io::dump(io::hypergraph_to_json(h)));
    return AHG_OK;
  });
}

ahg_status ahg_classify(const ahg_poly* p, const char* params_json, const ahg_budget* budget,
                        const char* oracle_cmd, ahg_report** out) {
  return guarded([&] {
    std::vector<Rat> params;
    if (params_json) params = io::rats_from_json(io::parse_json_text(params_json));
    depth::DepthReport r = depth::classify(p->p, params, budget_of(budget),
                                           oracle_cmd ? oracle_cmd : "");
    bool decided = r.decided;
    *out = new ahg_report{std::move(r)};
    return decided ? AHG_OK : AHG_INCONCLUSIVE;
  });
}

ahg_status ahg_report_parse(const char* json, ahg_report** out) {
  return guarded([&] {
    *out = new ahg_report{io::report_from_json(io::parse_json_text(json))};
    return AHG_OK;
  });
}

void ahg_report_free(ahg_report* r) { delete r; }

ahg_status ahg_report_json(const ahg_report* r, char** out_json) {
  return guarded([&] {
    *out_json = dup_string(io::dump(io::report_to_json(r->r)));
    return AHG_OK;
  });
}

ahg_status ahg_report_depth(const ahg_report* r, char** lo, char** hi, int* decided) {
  return guarded([&] {
    *lo = dup_string(r->r.lo.str());
    *hi = dup_string(r->r.hi.str());
    *decided = r->r.decided ? 1 : 0;
    return AHG_OK;
  });
}

ahg_status ahg_report_avoid(ahg_report* r, const char* kappa, const char* continuum,
                            int allow_invalid_setting, char** verdict_json) {
  return guarded([&] {
    card::Cardinal kap = card::Cardinal::parse(kappa);
    card::ContinuumSetting setting{card::Cardinal::parse(continuum).index,
                                   allow_invalid_setting != 0};
    depth::AvoidEntry entry = depth::classify_kappa(r->r, kap, setting);
    r->r.avoidability.push_back(entry);
    const char* verdict = entry.verdict == depth::AvoidEntry::V::avoidable     ? "avoidable"
                          : entry.verdict == depth::AvoidEntry::V::unavoidable ? "unavoidable"
                                                                               : "conditional";
    *verdict_json =
        dup_string(io::dump(io::json{{"verdict", verdict}, {"detail", entry.detail}}));
    return entry.verdict == depth::AvoidEntry::V::conditional ? AHG_INCONCLUSIVE : AHG_OK;
  });
}

ahg_status ahg_report_chi(const ahg_report* r, const char* continuum, int allow_invalid_setting,
                          char** chi_json) {
  return guarded([&] {
    card::ContinuumSetting setting{card::Cardinal::parse(continuum).index,
                                   allow_invalid_setting != 0};
    depth::ChiResult chi = depth::chromatic_report(r->r, setting);
    *chi_json = dup_string(io::dump(
        io::json{{"lo", chi.lo.str()}, {"hi", chi.hi.str()}, {"single", chi.single}}));
    return chi.single ? AHG_OK : AHG_INCONCLUSIVE;
  });
}

ahg_status ahg_verify(const char* json, const char* oracle_cmd) {
  return guarded([&] {
    io::VerifyOutcome out =
        io::verify_any(io::parse_json_text(json), oracle_cmd ? oracle_cmd : "");
    if (out.ok) return AHG_OK;
    g_last_error = out.what + ": " + out.detail;
    return AHG_VERIFY_FAILED;
  });
}

}  // extern "C"
