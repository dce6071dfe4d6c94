#include "jsonio.hpp"

#include <algorithm>
#include <set>

#include "error.hpp"

namespace ahg::io {

namespace {

const json& need(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    fail(Errc::parse, std::string("missing key \"") + key + "\"");
  return j.at(key);
}

int need_int(const json& j, const char* key) {
  const json& v = need(j, key);
  if (!v.is_number_integer()) fail(Errc::parse, std::string("key \"") + key + "\" must be an integer");
  return v.get<int>();
}

std::vector<int> int_vec(const json& j) {
  if (!j.is_array()) fail(Errc::parse, "expected an integer array");
  std::vector<int> out;
  for (const auto& e : j) {
    if (!e.is_number_integer()) fail(Errc::parse, "expected an integer array");
    out.push_back(e.get<int>());
  }
  return out;
}

int var_index_of_key(const std::string& key, int k, int n, int l) {
  if (key.size() >= 2 && key[0] == 'x') {
    size_t dot = key.find('.');
    if (dot == std::string::npos) fail(Errc::parse, "bad variable key: " + key);
    int i = std::stoi(key.substr(1, dot - 1));
    int j = std::stoi(key.substr(dot + 1));
    if (i < 0 || i >= k || j < 0 || j >= n) fail(Errc::parse, "variable out of arity: " + key);
    return i * n + j;
  }
  if (key.size() >= 2 && key[0] == 'y') {
    int t = std::stoi(key.substr(1));
    if (t < 0 || t >= l) fail(Errc::parse, "parameter out of arity: " + key);
    return k * n + t;
  }
  fail(Errc::parse, "bad variable key: " + key);
}

json terms_to_json(const poly::Poly& p, const std::vector<std::string>& names) {
  json arr = json::array();
  const auto& terms = p.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    json exps = json::object();
    for (int i = 0; i < p.nvars(); ++i)
      if (it->first[i] > 0) exps[names[i]] = it->first[i];
    arr.push_back(json{{"coeff", rat_str(it->second)}, {"exps", exps}});
  }
  return arr;
}

}  // namespace

json rat_to_json(const Rat& q) { return rat_str(q); }

Rat rat_from_json(const json& j) {
  if (!j.is_string()) fail(Errc::parse, "rationals are \"num/den\" strings");
  return parse_rat(j.get<std::string>());
}

std::vector<Rat> rats_from_json(const json& j) {
  if (!j.is_array()) fail(Errc::parse, "expected an array of rationals");
  std::vector<Rat> out;
  for (const auto& e : j) out.push_back(rat_from_json(e));
  return out;
}

json rats_to_json(const std::vector<Rat>& v) {
  json arr = json::array();
  for (const Rat& q : v) arr.push_back(rat_str(q));
  return arr;
}

json template_to_json(const tmpl::Template& t) {
  json parts = json::array();
  for (const auto& coord_blocks : t.to_blocks()) {
    json coord = json::array();
    for (const auto& block : coord_blocks) coord.push_back(block);
    parts.push_back(coord);
  }
  return json{{"k", t.k()}, {"d", t.d()}, {"partitions", parts}};
}

tmpl::Template template_from_json(const json& j) {
  int k = need_int(j, "k");
  int d = need_int(j, "d");
  const json& parts = need(j, "partitions");
  if (!parts.is_array() || static_cast<int>(parts.size()) != d)
    fail(Errc::parse, "partitions must list d coordinates");
  std::vector<std::vector<std::vector<int>>> blocks;
  for (const auto& coord : parts) {
    if (!coord.is_array()) fail(Errc::parse, "partition must be an array of blocks");
    std::vector<std::vector<int>> coord_blocks;
    for (const auto& b : coord) coord_blocks.push_back(int_vec(b));
    blocks.push_back(coord_blocks);
  }
  return tmpl::Template::from_blocks(k, d, blocks);
}

json hypergraph_to_json(const tmpl::FiniteHypergraph& h) {
  json edges = json::array();
  for (const auto& e : h.edges) edges.push_back(e);
  return json{{"k", h.k}, {"vertices", h.vertices}, {"edges", edges}};
}

tmpl::FiniteHypergraph hypergraph_from_json(const json& j) {
  tmpl::FiniteHypergraph h;
  h.k = need_int(j, "k");
  h.vertices = int_vec(need(j, "vertices"));
  for (const auto& e : need(j, "edges")) h.edges.push_back(int_vec(e));
  return h;
}

json polyspec_to_json(const poly::PolySpec& p) {
  return json{{"k", p.k}, {"n", p.n}, {"l", p.l}, {"terms", terms_to_json(p.p, p.var_names())}};
}

poly::PolySpec polyspec_from_json(const json& j) {
  poly::PolySpec p;
  p.k = need_int(j, "k");
  p.n = need_int(j, "n");
  p.l = need_int(j, "l");
  if (p.k < 1 || p.n < 1 || p.l < 0) fail(Errc::parse, "bad polynomial arity");
  p.p = poly::Poly(p.nvars());
  for (const auto& term : need(j, "terms")) {
    Rat coeff = rat_from_json(need(term, "coeff"));
    poly::Exps e(p.nvars(), 0);
    for (const auto& [key, val] : need(term, "exps").items()) {
      if (!val.is_number_integer() || val.get<int>() <= 0)
        fail(Errc::parse, "exponents must be positive integers");
      e[var_index_of_key(key, p.k, p.n, p.l)] += val.get<int>();
    }
    p.p.add_term(e, coeff);
  }
  return p;
}

json tpoly_to_json(const poly::Poly& p) {
  std::vector<std::string> names;
  for (int i = 0; i < p.nvars(); ++i) names.push_back("t" + std::to_string(i));
  return json{{"nvars", p.nvars()}, {"terms", terms_to_json(p, names)}};
}

poly::Poly tpoly_from_json(const json& j, int nvars) {
  if (j.contains("nvars") && need_int(j, "nvars") != nvars)
    fail(Errc::parse, "component variable count mismatch");
  poly::Poly p(nvars);
  for (const auto& term : need(j, "terms")) {
    Rat coeff = rat_from_json(need(term, "coeff"));
    poly::Exps e(nvars, 0);
    for (const auto& [key, val] : need(term, "exps").items()) {
      if (key.empty() || key[0] != 't') fail(Errc::parse, "bad variable key: " + key);
      int idx = std::stoi(key.substr(1));
      if (idx < 0 || idx >= nvars) fail(Errc::parse, "variable out of arity: " + key);
      if (!val.is_number_integer() || val.get<int>() <= 0)
        fail(Errc::parse, "exponents must be positive integers");
      e[idx] += val.get<int>();
    }
    p.add_term(e, coeff);
  }
  return p;
}

json polymap_to_json(const poly::PolyMap& f) {
  json comps = json::array();
  for (const auto& c : f.comps) comps.push_back(tpoly_to_json(c));
  return json{{"m", f.m}, {"n", f.n}, {"components", comps}};
}

poly::PolyMap polymap_from_json(const json& j) {
  poly::PolyMap f;
  f.m = need_int(j, "m");
  f.n = need_int(j, "n");
  if (f.m < 1 || f.n < 1) fail(Errc::parse, "bad map arity");
  const json& comps = need(j, "components");
  if (static_cast<int>(comps.size()) != f.n) fail(Errc::parse, "component count must equal n");
  for (const auto& c : comps) f.comps.push_back(tpoly_from_json(c, f.m));
  return f;
}

json witness_to_json(const embed::EmbeddingWitness& w, const poly::PolySpec& p) {
  json assign = json::array();
  for (const auto& [pt, val] : w.assignment)
    assign.push_back(json{{"point", pt}, {"value", rats_to_json(val)}});
  return json{{"type", "embedding-witness"},
              {"poly", polyspec_to_json(p)},
              {"params", rats_to_json(w.params)},
              {"template", template_to_json(w.t)},
              {"sizes", w.sizes},
              {"assignment", assign}};
}

ParsedWitness witness_from_json(const json& j) {
  if (need(j, "type") != "embedding-witness") fail(Errc::parse, "not an embedding witness");
  poly::PolySpec p = polyspec_from_json(need(j, "poly"));
  embed::EmbeddingWitness w{template_from_json(need(j, "template")), int_vec(need(j, "sizes")),
                            rats_from_json(need(j, "params")), {}};
  for (const auto& entry : need(j, "assignment"))
    w.assignment[int_vec(need(entry, "point"))] = rats_from_json(need(entry, "value"));
  return ParsedWitness{std::move(w), std::move(p)};
}

namespace {

json transcript_to_json(const embed::TranscriptNode& node) {
  json children = json::array();
  for (const auto& c : node.children) {
    json cj{{"class", c.cls}};
    switch (c.kind) {
      case embed::TranscriptNode::Child::Kind::inconsistent:
        cj["result"] = "inconsistent";
        break;
      case embed::TranscriptNode::Child::Kind::contained:
        cj["result"] = "contained";
        cj["pair"] = json::array({c.pair_a, c.pair_b});
        break;
      case embed::TranscriptNode::Child::Kind::subtree:
        cj["node"] = transcript_to_json(*c.node);
        break;
    }
    children.push_back(std::move(cj));
  }
  return json{{"edge", node.edge}, {"children", children}};
}

std::unique_ptr<embed::TranscriptNode> transcript_from_json(const json& j) {
  auto node = std::make_unique<embed::TranscriptNode>();
  node->edge = need_int(j, "edge");
  for (const auto& cj : need(j, "children")) {
    embed::TranscriptNode::Child c;
    c.cls = need_int(cj, "class");
    if (cj.contains("node")) {
      c.kind = embed::TranscriptNode::Child::Kind::subtree;
      c.node = transcript_from_json(cj.at("node"));
    } else {
      const json& res = need(cj, "result");
      if (res == "inconsistent") {
        c.kind = embed::TranscriptNode::Child::Kind::inconsistent;
      } else if (res == "contained") {
        c.kind = embed::TranscriptNode::Child::Kind::contained;
        std::vector<int> pr = int_vec(need(cj, "pair"));
        if (pr.size() != 2) fail(Errc::parse, "contained pair must have two vertices");
        c.pair_a = pr[0];
        c.pair_b = pr[1];
      } else {
        fail(Errc::parse, "unknown transcript result");
      }
    }
    node->children.push_back(std::move(c));
  }
  return node;
}

}  // namespace

json nonembedding_to_json(const embed::NonEmbeddingCertificate& c, const poly::PolySpec& p) {
  json out{{"type", "non-embedding-certificate"},
           {"poly", polyspec_to_json(p)},
           {"params", rats_to_json(c.params)},
           {"template", template_to_json(c.t)},
           {"sizes", c.sizes},
           {"method", c.method}};
  if (c.transcript) out["transcript"] = transcript_to_json(*c.transcript);
  return out;
}

ParsedNonEmbedding nonembedding_from_json(const json& j) {
  if (need(j, "type") != "non-embedding-certificate")
    fail(Errc::parse, "not a non-embedding certificate");
  ParsedNonEmbedding out{
      embed::NonEmbeddingCertificate{template_from_json(need(j, "template")),
                                     int_vec(need(j, "sizes")), rats_from_json(need(j, "params")),
                                     need(j, "method").get<std::string>(), nullptr},
      polyspec_from_json(need(j, "poly"))};
  if (j.contains("transcript")) out.c.transcript = transcript_from_json(j.at("transcript"));
  return out;
}

namespace {

json endpoint_to_json(const poly::Endpoint& e) {
  switch (e.kind) {
    case poly::Endpoint::Kind::neg_inf:
      return "-inf";
    case poly::Endpoint::Kind::pos_inf:
      return "+inf";
    case poly::Endpoint::Kind::finite:
      return rat_str(e.value);
  }
  return json();
}

poly::Endpoint endpoint_from_json(const json& j) {
  std::string s = j.get<std::string>();
  if (s == "-inf") return poly::Endpoint::neg_inf();
  if (s == "+inf") return poly::Endpoint::pos_inf();
  return poly::Endpoint::at(parse_rat(s));
}

}  // namespace

json immersion_to_json(const immerse::ImmersionCertificate& c, const poly::PolySpec& p,
                       const std::vector<Rat>& params) {
  json inj;
  if (c.inj.kind == immerse::InjectivityCert::Kind::affine_columns) {
    inj = json{{"kind", "affine-columns"}};
  } else {
    inj = json{{"kind", "sturm-monotone"},
               {"component", c.inj.component},
               {"interval", json::array({endpoint_to_json(c.inj.lo), endpoint_to_json(c.inj.hi)})}};
  }
  return json{{"type", "immersion-certificate"},
              {"poly", polyspec_to_json(p)},
              {"params", rats_to_json(params)},
              {"template", template_to_json(c.collapsed)},
              {"pi", c.pi},
              {"map", polymap_to_json(c.map)},
              {"injectivity", inj},
              {"orderings", json{{"generic", c.sigma}}}};
}

ParsedImmersion immersion_from_json(const json& j) {
  if (need(j, "type") != "immersion-certificate") fail(Errc::parse, "not an immersion certificate");
  ParsedImmersion out{immerse::ImmersionCertificate{}, polyspec_from_json(need(j, "poly")),
                      rats_from_json(need(j, "params"))};
  out.c.map = polymap_from_json(need(j, "map"));
  out.c.collapsed = template_from_json(need(j, "template"));
  out.c.pi = int_vec(need(j, "pi"));
  out.c.sigma = int_vec(need(need(j, "orderings"), "generic"));
  const json& inj = need(j, "injectivity");
  std::string kind = need(inj, "kind").get<std::string>();
  if (kind == "affine-columns") {
    out.c.inj.kind = immerse::InjectivityCert::Kind::affine_columns;
  } else if (kind == "sturm-monotone") {
    out.c.inj.kind = immerse::InjectivityCert::Kind::sturm_monotone;
    out.c.inj.component = need_int(inj, "component");
    const json& iv = need(inj, "interval");
    if (!iv.is_array() || iv.size() != 2) fail(Errc::parse, "interval must have two endpoints");
    out.c.inj.lo = endpoint_from_json(iv[0]);
    out.c.inj.hi = endpoint_from_json(iv[1]);
  } else {
    fail(Errc::parse, "unknown injectivity kind: " + kind);
  }
  return out;
}

json budget_to_json(const Budget& b) {
  return json{{"grid_max", b.grid_max},
              {"edge_cap", b.edge_cap},
              {"branch_cap", b.branch_cap},
              {"affine_height", b.affine_height},
              {"curve_degree", b.curve_degree},
              {"curve_height", b.curve_height},
              {"rational_height", b.rational_height},
              {"rational_nodes", b.rational_nodes},
              {"catalog_slice", b.catalog_slice},
              {"time_budget_seconds", b.time_budget_seconds}};
}

Budget budget_from_json(const json& j) {
  Budget b;
  b.grid_max = need_int(j, "grid_max");
  b.edge_cap = need(j, "edge_cap").get<long long>();
  b.branch_cap = need(j, "branch_cap").get<long long>();
  b.affine_height = need_int(j, "affine_height");
  b.curve_degree = need_int(j, "curve_degree");
  b.curve_height = need_int(j, "curve_height");
  b.rational_height = need_int(j, "rational_height");
  b.rational_nodes = need(j, "rational_nodes").get<long long>();
  b.catalog_slice = need_int(j, "catalog_slice");
  b.time_budget_seconds = need_int(j, "time_budget_seconds");
  return b;
}

namespace {

json depth_to_json(const card::Depth& d) {
  if (d.infinite) return "inf";
  return d.value;
}

card::Depth depth_from_json(const json& j) {
  if (j.is_string()) return card::Depth::parse(j.get<std::string>());
  if (j.is_number_unsigned() || j.is_number_integer())
    return card::Depth::of(j.get<uint32_t>());
  fail(Errc::parse, "depth must be an integer or \"inf\"");
}

}  // namespace

json report_to_json(const depth::DepthReport& r) {
  json verdicts = json::array();
  for (const auto& v : r.verdicts) {
    json vj{{"template", template_to_json(v.t)}, {"e", v.e}};
    switch (v.status) {
      case depth::TemplateVerdict::Status::refuted:
        vj["status"] = "refuted";
        vj["m"] = v.refuted_m;
        vj["certificate"] = nonembedding_to_json(*v.refutation, r.p);
        break;
      case depth::TemplateVerdict::Status::confirmed:
        vj["status"] = "confirmed";
        vj["certificate"] = immersion_to_json(*v.confirmation, r.p, r.params);
        break;
      case depth::TemplateVerdict::Status::open:
        vj["status"] = "open";
        vj["max_m_sat"] = v.max_m_sat;
        vj["next_m"] = v.next_m;
        vj["refutation_exhausted"] = v.refutation_exhausted;
        vj["catalog_exhausted"] = v.catalog_exhausted;
        break;
    }
    verdicts.push_back(std::move(vj));
  }
  json avoid = json::array();
  for (const auto& a : r.avoidability) {
    const char* verdict = a.verdict == depth::AvoidEntry::V::avoidable     ? "avoidable"
                          : a.verdict == depth::AvoidEntry::V::unavoidable ? "unavoidable"
                                                                           : "conditional";
    avoid.push_back(json{{"kappa", a.kappa.str()},
                         {"continuum", "aleph:" + a.gamma.str()},
                         {"verdict", verdict},
                         {"detail", a.detail}});
  }
  return json{{"type", "depth-report"},
              {"poly", polyspec_to_json(r.p)},
              {"params", rats_to_json(r.params)},
              {"budgets", budget_to_json(r.budget)},
              {"oracle", r.oracle},
              {"verdicts", verdicts},
              {"depth_lo", depth_to_json(r.lo)},
              {"depth_hi", depth_to_json(r.hi)},
              {"decided", r.decided},
              {"avoidability", avoid}};
}

depth::DepthReport report_from_json(const json& j) {
  if (need(j, "type") != "depth-report") fail(Errc::parse, "not a depth report");
  depth::DepthReport r;
  r.p = polyspec_from_json(need(j, "poly"));
  r.params = rats_from_json(need(j, "params"));
  r.budget = budget_from_json(need(j, "budgets"));
  r.oracle = need(j, "oracle").get<std::string>();
  for (const auto& vj : need(j, "verdicts")) {
    depth::TemplateVerdict v{template_from_json(need(vj, "template")),
                             need_int(vj, "e"),
                             depth::TemplateVerdict::Status::open,
                             0,
                             nullptr,
                             std::nullopt,
                             0,
                             2,
                             false,
                             false};
    std::string status = need(vj, "status").get<std::string>();
    if (status == "refuted") {
      v.status = depth::TemplateVerdict::Status::refuted;
      v.refuted_m = need_int(vj, "m");
      auto parsed = nonembedding_from_json(need(vj, "certificate"));
      v.refutation =
          std::make_shared<embed::NonEmbeddingCertificate>(std::move(parsed.c));
    } else if (status == "confirmed") {
      v.status = depth::TemplateVerdict::Status::confirmed;
      v.confirmation = immersion_from_json(need(vj, "certificate")).c;
    } else if (status == "open") {
      v.max_m_sat = need_int(vj, "max_m_sat");
      v.next_m = need_int(vj, "next_m");
      v.refutation_exhausted = need(vj, "refutation_exhausted").get<bool>();
      v.catalog_exhausted = need(vj, "catalog_exhausted").get<bool>();
    } else {
      fail(Errc::parse, "unknown verdict status: " + status);
    }
    r.verdicts.push_back(std::move(v));
  }
  r.lo = depth_from_json(need(j, "depth_lo"));
  r.hi = depth_from_json(need(j, "depth_hi"));
  r.decided = need(j, "decided").get<bool>();
  for (const auto& aj : need(j, "avoidability")) {
    depth::AvoidEntry a;
    a.kappa = card::Cardinal::parse(need(aj, "kappa").get<std::string>());
    a.gamma = card::Cardinal::parse(need(aj, "continuum").get<std::string>()).index;
    std::string verdict = need(aj, "verdict").get<std::string>();
    a.verdict = verdict == "avoidable"     ? depth::AvoidEntry::V::avoidable
                : verdict == "unavoidable" ? depth::AvoidEntry::V::unavoidable
                                           : depth::AvoidEntry::V::conditional;
    a.detail = need(aj, "detail").get<std::string>();
    r.avoidability.push_back(std::move(a));
  }
  return r;
}

json parse_json_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(Errc::parse, "malformed JSON");
  return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

namespace {

VerifyOutcome verify_witness(const json& j) {
  ParsedWitness pw = witness_from_json(j);
  VerifyOutcome out{false, "embedding-witness", ""};
  out.ok = embed::verify_embedding(pw.w, pw.p, 1ll << 40);
  if (!out.ok) out.detail = "witness rejected";
  return out;
}

VerifyOutcome verify_nonembedding(const json& j, const std::string& oracle_cmd) {
  ParsedNonEmbedding pn = nonembedding_from_json(j);
  VerifyOutcome out{false, "non-embedding-certificate", ""};
  if (pn.c.method.rfind("oracle:", 0) == 0) {
    if (oracle_cmd.empty()) {
      out.detail = "oracle-backed certificate needs --oracle to replay";
      return out;
    }
    Budget b;
    auto verdict = embed::search_embedding(pn.p, pn.c.params, pn.c.t, pn.c.sizes,
                                           embed::Strategy::external_oracle, b, oracle_cmd);
    out.ok = verdict.status == embed::OracleVerdict::Status::unsat;
    if (!out.ok) out.detail = "oracle did not reproduce the refutation";
    return out;
  }
  std::string why;
  out.ok = embed::replay_nonembedding(pn.c, pn.p, &why);
  out.detail = why;
  return out;
}

VerifyOutcome verify_immersion_cert(const json& j) {
  ParsedImmersion pi = immersion_from_json(j);
  VerifyOutcome out{false, "immersion-certificate", ""};
  out.ok = immerse::replay_immersion(pi.c, pi.p, pi.params);
  if (!out.ok) out.detail = "certificate replay failed";
  return out;
}

VerifyOutcome verify_report(const json& j, const std::string& oracle_cmd) {
  depth::DepthReport r = report_from_json(j);
  VerifyOutcome out{false, "depth-report", ""};

  // the verdict table must cover exactly the canonical template enumeration
  std::set<std::string> expected;
  for (int d = 1; d < r.p.k; ++d)
    for (const auto& t : tmpl::enumerate_templates(r.p.k, d)) expected.insert(t.key());
  std::set<std::string> got;
  for (const auto& v : r.verdicts) got.insert(v.t.key());
  if (expected != got) {
    out.detail = "verdict table does not match the template enumeration";
    return out;
  }

  for (const auto& v : r.verdicts) {
    if (v.e != tmpl::min_distinguisher(v.t).e) {
      out.detail = "stored distinguisher size is wrong for " + v.t.key();
      return out;
    }
    if (v.status == depth::TemplateVerdict::Status::refuted) {
      if (!(v.refutation->t == v.t) ||
          v.refutation->sizes != std::vector<int>(v.t.d(), v.refuted_m)) {
        out.detail = "refutation certificate does not match its verdict";
        return out;
      }
      json cj = nonembedding_to_json(*v.refutation, r.p);
      VerifyOutcome sub = verify_nonembedding(cj, oracle_cmd);
      if (!sub.ok) {
        out.detail = "embedded refutation failed: " + sub.detail;
        return out;
      }
    } else if (v.status == depth::TemplateVerdict::Status::confirmed) {
      const auto& cert = *v.confirmation;
      if (static_cast<int>(cert.pi.size()) != v.t.d() ||
          !(tmpl::collapse(v.t, tmpl::Surjection(v.t.d(), cert.pi)) == cert.collapsed)) {
        out.detail = "immersion certificate does not collapse its verdict template";
        return out;
      }
      if (!immerse::replay_immersion(cert, r.p, r.params)) {
        out.detail = "embedded immersion certificate failed";
        return out;
      }
    }
  }

  depth::DepthReport rederived = r;
  depth::derive_interval(rederived);
  if (!(rederived.lo == r.lo) || !(rederived.hi == r.hi) || rederived.decided != r.decided) {
    out.detail = "stored depth interval does not follow from the verdicts";
    return out;
  }
  for (const auto& a : r.avoidability) {
    depth::AvoidEntry again =
        depth::classify_kappa(r, a.kappa, card::ContinuumSetting{a.gamma, false});
    if (again.verdict != a.verdict) {
      out.detail = "stored avoidability verdict does not follow from the interval";
      return out;
    }
  }
  out.ok = true;
  return out;
}

}  // namespace

VerifyOutcome verify_any(const json& j, const std::string& oracle_cmd) {
  if (!j.is_object() || !j.contains("type"))
    fail(Errc::parse, "verifiable objects carry a \"type\" tag");
  std::string type = j.at("type").get<std::string>();
  if (type == "embedding-witness") return verify_witness(j);
  if (type == "non-embedding-certificate") return verify_nonembedding(j, oracle_cmd);
  if (type == "immersion-certificate") return verify_immersion_cert(j);
  if (type == "depth-report") return verify_report(j, oracle_cmd);
  fail(Errc::parse, "unknown object type: " + type);
}

}  // namespace ahg::io
