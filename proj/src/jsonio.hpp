#pragma once

#include <json.hpp>
#include <string>

#include "depth.hpp"
#include "embed.hpp"
#include "hypergraph.hpp"
#include "immerse.hpp"
#include "ordinal.hpp"
#include "poly.hpp"
#include "template.hpp"

// JSON forms of every exchanged object. All serialization is deterministic:
// object keys are sorted, rationals are canonical "num/den" strings, and
// polynomial terms print leading term first.
namespace ahg::io {

using json = nlohmann::json;

json rat_to_json(const Rat& q);
Rat rat_from_json(const json& j);
std::vector<Rat> rats_from_json(const json& j);
json rats_to_json(const std::vector<Rat>& v);

json template_to_json(const tmpl::Template& t);
tmpl::Template template_from_json(const json& j);

json hypergraph_to_json(const tmpl::FiniteHypergraph& h);
tmpl::FiniteHypergraph hypergraph_from_json(const json& j);

// (k,n)+l polynomial with "xI.J" / "yT" variable keys.
json polyspec_to_json(const poly::PolySpec& p);
poly::PolySpec polyspec_from_json(const json& j);

// Generic polynomial with "tJ" variable keys (polynomial map components).
json tpoly_to_json(const poly::Poly& p);
poly::Poly tpoly_from_json(const json& j, int nvars);

json polymap_to_json(const poly::PolyMap& f);
poly::PolyMap polymap_from_json(const json& j);

json witness_to_json(const embed::EmbeddingWitness& w, const poly::PolySpec& p);
struct ParsedWitness {
  embed::EmbeddingWitness w;
  poly::PolySpec p;
};
ParsedWitness witness_from_json(const json& j);

json nonembedding_to_json(const embed::NonEmbeddingCertificate& c, const poly::PolySpec& p);
struct ParsedNonEmbedding {
  embed::NonEmbeddingCertificate c;
  poly::PolySpec p;
};
ParsedNonEmbedding nonembedding_from_json(const json& j);

json immersion_to_json(const immerse::ImmersionCertificate& c, const poly::PolySpec& p,
                       const std::vector<Rat>& params);
struct ParsedImmersion {
  immerse::ImmersionCertificate c;
  poly::PolySpec p;
  std::vector<Rat> params;
};
ParsedImmersion immersion_from_json(const json& j);

json budget_to_json(const Budget& b);
Budget budget_from_json(const json& j);

json report_to_json(const depth::DepthReport& r);
depth::DepthReport report_from_json(const json& j);

// Certificate/witness/report dispatch on the "type" tag. `ok` means the
// object replayed; `what` names the object kind.
struct VerifyOutcome {
  bool ok = false;
  std::string what;
  std::string detail;
};
VerifyOutcome verify_any(const json& j, const std::string& oracle_cmd = "");

json parse_json_text(const std::string& text);  // wraps parse errors
std::string dump(const json& j);                // 2-space indent, trailing newline

}  // namespace ahg::io
