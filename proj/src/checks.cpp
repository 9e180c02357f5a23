#include "altq/checks.hpp"

#include <algorithm>
#include <fstream>

#include "altq/fm.hpp"
#include "altq/hilbert.hpp"
#include "altq/loop.hpp"
#include "altq/parse.hpp"
#include "altq/rootvec.hpp"

#include "json.hpp"

namespace altq {

const std::set<std::string>& RunConfig::known_groups() {
  static const std::set<std::string> g = {"ybe",       "fm",         "determinant", "reps",
                                          "classical", "dictionary", "pbw",         "serre"};
  return g;
}

void RunConfig::validate() const {
  if (params.k_plus.is_zero() || params.k_minus.is_zero())
    throw ConfigInvalid("k_plus and k_minus must be nonzero (rho_bar = 0)");
  if (order < 2) throw ConfigInvalid("order must be at least 2");
  for (const auto& g : groups)
    if (!known_groups().count(g)) throw ConfigInvalid("unknown check group: " + g);
  for (const auto& dc : dress_configs) dc.validate();
}

std::vector<DressConfig> RunConfig::effective_dress_configs() const {
  if (!dress_configs.empty()) return dress_configs;
  std::vector<DressConfig> out;
  DressConfig a;
  a.twoj = {1};
  a.v = {RatFuncQ(1)};
  a.params = params;
  DressConfig b;
  b.twoj = {1, 1};
  b.v = {RatFuncQ(1), RatFuncQ(2)};
  b.params = params;
  DressConfig c;
  c.twoj = {1, 2};
  c.v = {RatFuncQ(1), RatFuncQ(3)};
  c.params = params;
  out.push_back(std::move(a));
  out.push_back(std::move(b));
  out.push_back(std::move(c));
  return out;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigInvalid("cannot open config file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ConfigInvalid(std::string("config parse error: ") + e.what());
  }
  RunConfig c;
  if (j.contains("order")) c.order = j["order"].get<unsigned>();
  if (j.contains("k_max")) c.k_max = j["k_max"].get<unsigned>();
  if (j.contains("p_max")) c.p_max = j["p_max"].get<unsigned>();
  if (j.contains("max_degree")) c.max_degree = j["max_degree"].get<unsigned>();
  if (j.contains("params")) {
    const auto& p = j["params"];
    auto get = [&](const char* key, const char* dflt) {
      return parse_scalar(p.contains(key) ? p[key].get<std::string>() : std::string(dflt));
    };
    try {
      c.params = FMParams(get("k_plus", "q^2"), get("k_minus", "-q^-1"), get("eps_plus", "1"),
                          get("eps_minus", "1"));
    } catch (const std::invalid_argument& e) {
      throw ConfigInvalid(e.what());
    }
  }
  if (j.contains("dress_configs")) {
    for (const auto& d : j["dress_configs"]) {
      DressConfig dc;
      dc.params = c.params;
      for (const auto& s : d["spins"]) dc.twoj.push_back(parse_two_j(s.get<std::string>()));
      for (const auto& s : d["v"]) dc.v.push_back(parse_scalar(s.get<std::string>()));
      c.dress_configs.push_back(std::move(dc));
    }
  }
  if (j.contains("groups"))
    for (const auto& g : j["groups"]) c.groups.insert(g.get<std::string>());
  c.validate();
  return c;
}

namespace {

std::string config_tag(const DressConfig& dc) {
  std::string t = "N" + std::to_string(dc.N()) + ".j";
  for (std::size_t i = 0; i < dc.twoj.size(); ++i) {
    if (i) t += "_";
    t += std::to_string(dc.twoj[i]);
    t += "h";  // units of half-integer spin: 2j
  }
  return t;
}

CheckReport printed_generators_check(const FMParams& params) {
  CheckReport rep = CheckReport::pass("generators.printed",
                                      "first generators match the printed example expressions");
  GeneratorTable t = build_generators(2, params);
  const RatFuncQ& rho = params.rho_bar;
  NCPoly w0 = NCPoly::gen(symWminus(0)), w1 = NCPoly::gen(symWplus(1));
  NCPoly delta1(CoeffPoly::delta(1)), delta2(CoeffPoly::delta(2));
  auto qp = [](long e) { return RatFuncQ::q_power(e); };
  bool ok = true;

  NCPoly g1 = rf_q() * (w1 * w0) - rf_qinv() * (w0 * w1) + RatFuncQ(mpq_class(1, 2)) * delta1;
  ok = ok && t.at(symG(1)) == g1;
  NCPoly gt1 = rf_q() * (w0 * w1) - rf_qinv() * (w1 * w0) + RatFuncQ(mpq_class(1, 2)) * delta1;
  ok = ok && t.at(symGt(1)) == gt1;
  NCPoly wm1 = (RatFuncQ(1) / rho) * ((qp(2) + qp(-2)) * (w0 * w1 * w0) - w0 * w0 * w1 - w1 * w0 * w0) +
               (rf_qminus() / (RatFuncQ(2) * rho)) * (delta1 * w0);
  ok = ok && t.at(symWminus(1)) == wm1;
  NCPoly g2 = (RatFuncQ(1) / (rho * (qp(2) + qp(-2)))) *
              ((qp(-3) + qp(-1)) * (w0 * w0 * w1 * w1) - (qp(3) + qp(1)) * (w1 * w1 * w0 * w0) +
               (qp(-3) - qp(3)) * (w0 * w1 * w1 * w0 + w1 * w0 * w0 * w1) -
               (qp(-5) + qp(-3) + RatFuncQ(2) * qp(-1)) * (w0 * w1 * w0 * w1) +
               (qp(5) + qp(3) + RatFuncQ(2) * qp(1)) * (w1 * w0 * w1 * w0));
  g2 += (rf_qminus() / (RatFuncQ(2) * rho)) * (delta1 * (rf_q() * (w1 * w0) - rf_qinv() * (w0 * w1)));
  g2 -= (rf_qminus() / (RatFuncQ(4) * rho * (qp(2) + qp(-2)))) * (delta1 * delta1);
  g2 += RatFuncQ(mpq_class(1, 2)) * delta2;
  ok = ok && t.at(symG(2)) == g2;
  rep.note("G1", t.at(symG(1)) == g1 ? "pass" : "fail");
  rep.note("Gt1", t.at(symGt(1)) == gt1 ? "pass" : "fail");
  rep.note("Wm1", t.at(symWminus(1)) == wm1 ? "pass" : "fail");
  rep.note("G2", t.at(symG(2)) == g2 ? "pass" : "fail");
  return rep.set(ok);
}

CheckReport printed_delta_check(const FMParams& params) {
  CheckReport rep = CheckReport::pass("generators.delta_printed",
                                      "central elements match the printed expressions");
  bool d1 = central_delta(0, params) == central_delta_printed(0, params);
  bool d2 = central_delta(1, params) == central_delta_printed(1, params);
  rep.note("Delta1", d1 ? "pass" : "fail");
  rep.note("Delta2", d2 ? "pass" : "fail");
  // Delta3: the recomputed and printed forms agree modulo a def11 instance;
  // report which level holds rather than privileging either form.
  NCPoly diff = central_delta(2, params) - central_delta_printed(2, params);
  bool d3_literal = diff.is_zero();
  bool d3_mod = false;
  if (!d3_literal) {
    NCPoly def11 = comm(NCPoly::gen(symGt(1)), NCPoly::gen(symG(2))) +
                   comm(NCPoly::gen(symG(1)), NCPoly::gen(symGt(2)));
    NcSpan span;
    span.add(def11);
    d3_mod = span.contains(diff);
  }
  rep.note("Delta3", d3_literal ? "literal" : (d3_mod ? "equal modulo def11" : "fail"));
  return rep.set(d1 && d2 && (d3_literal || d3_mod));
}

CheckReport determinant_literal_check(unsigned order, const FMParams& params,
                                      const std::vector<DressConfig>& configs) {
  CheckReport rep = CheckReport::pass("determinant.expansion",
                                      "Delta(u) coefficients reproduce the central elements");
  auto sk = sklyanin_delta(order, params);
  bool ok = true;
  for (unsigned n = 0; n <= 1; ++n) {
    NCPoly coeff = sk.delta_coeff_U(n);
    NCPoly expect = central_delta(n, params);
    RatFuncQ pre = -RatFuncQ::q_power(-static_cast<long>(n) - 1) *
                   (RatFuncQ::q_power(n + 1) + RatFuncQ::q_power(-static_cast<long>(n) - 1));
    expect.scale(pre);
    bool literal = coeff == expect;
    std::string level = literal ? "literal" : "";
    if (!literal) {
      // Representation-level fallback: compare images in every configured
      // representation.
      bool rep_ok = true;
      for (const auto& dc : configs) {
        auto ops = alt_ops(dc, n + 1);
        RepMatrix diff = eval_in_rep(coeff - expect, ops, dc.total_dim());
        if (!diff.is_zero()) rep_ok = false;
      }
      level = rep_ok ? "representation" : "fail";
      ok = ok && rep_ok;
    }
    rep.note("U^-" + std::to_string(n + 1), level);
  }
  return rep.set(ok);
}

void run_group(const std::string& group, const RunConfig& config, std::vector<CheckReport>& out) {
  const FMParams& params = config.params;
  auto configs = config.effective_dress_configs();
  if (group == "ybe") {
    out.push_back(check_ybe());
    out.push_back(check_ybe_perturbed(1, 2));
  } else if (group == "fm") {
    unsigned claimed_k = config.order >= 1 ? config.order - 1 : 0;
    out.push_back(fm_equivalence_check(config.order, claimed_k, params, FMVariant::RE));
    out.push_back(fm_equivalence_check(config.order, claimed_k, params, FMVariant::REp));
    RelationSet re = extract_fm_relations(config.order, params, FMVariant::RE);
    RelationSet rp = extract_fm_relations(config.order, params, FMVariant::REp);
    out.push_back(compare_relation_spans(re, rp, "fm.re_rep_span_equal"));
  } else if (group == "determinant") {
    out.push_back(determinant_literal_check(std::max(config.order, 3u), params, configs));
    for (const auto& dc : configs)
      if (dc.N() <= 2) {
        CheckReport r = gamma_commutes_in_rep(dc, 2);
        r.check_id += "." + config_tag(dc);
        out.push_back(std::move(r));
      }
  } else if (group == "reps") {
    std::set<long> spins;
    for (const auto& dc : configs)
      for (long tj : dc.twoj) spins.insert(tj);
    for (long tj : spins) {
      out.push_back(spinrep_check(tj));
      out.push_back(lax_exchange_check(tj));
    }
    CheckReport k0 = CheckReport::pass("reps.seed_K0", "the scalar seed satisfies the matrix equation");
    k0.set(fm_residual_is_zero(seed_K0(params), 1));
    out.push_back(std::move(k0));
    for (const auto& dc : configs) {
      std::string tag = config_tag(dc);
      CheckReport re = CheckReport::pass("reps.dressed_re." + tag,
                                         "the dressed solution satisfies the matrix equation");
      re.set(fm_residual_is_zero(dress(dc), dc.total_dim()));
      out.push_back(std::move(re));
      CheckReport cf = dress_vs_closed_form(dc);
      cf.check_id += "." + tag;
      out.push_back(std::move(cf));
      CheckReport lr = linear_relations_check(dc, config.p_max);
      lr.check_id += "." + tag;
      out.push_back(std::move(lr));
      CheckReport rr = relations_in_rep(dc, config.k_max);
      rr.check_id += "." + tag;
      out.push_back(std::move(rr));
    }
  } else if (group == "classical") {
    out.push_back(check_ns_cybe());
    out.push_back(check_cybe());
    out.push_back(classical_fm_equivalence(config.order, 2));
    out.push_back(loop_realization_check(std::max(config.k_max, 4u)));
    out.push_back(specialize_generators_q1(3));
  } else if (group == "dictionary") {
    out.push_back(verify_dictionary());
  } else if (group == "pbw") {
    out.push_back(pbw_census_check(config.max_degree));
  } else if (group == "serre") {
    out.push_back(printed_generators_check(params));
    out.push_back(printed_delta_check(params));
    for (unsigned n = 0; n <= 2; ++n) out.push_back(delta_substitution_check(n, params));
    out.push_back(qserre_consequence(params));
  }
}

}  // namespace

std::vector<CheckReport> run(const RunConfig& config) {
  config.validate();
  std::vector<CheckReport> out;
  std::set<std::string> groups = config.groups.empty() ? RunConfig::known_groups() : config.groups;
  for (const auto& g : groups) {
    try {
      run_group(g, config, out);
    } catch (const PoleAtPoint& e) {
      CheckReport r = CheckReport::fail("group." + g, "group aborted by evaluation pole");
      r.note("error", e.what());
      out.push_back(std::move(r));
    }
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const CheckReport& a, const CheckReport& b) { return a.check_id < b.check_id; });
  return out;
}

std::string reports_to_json(const std::vector<CheckReport>& reports) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json o;
    o["check_id"] = r.check_id;
    o["status"] = r.status;
    o["paper_anchor"] = r.paper_anchor;
    nlohmann::ordered_json details = nlohmann::ordered_json::array();
    for (const auto& [k, v] : r.details) {
      nlohmann::ordered_json d;
      d["key"] = k;
      d["value"] = v;
      details.push_back(std::move(d));
    }
    o["details"] = std::move(details);
    arr.push_back(std::move(o));
  }
  return arr.dump(2) + "\n";
}

bool all_passed(const std::vector<CheckReport>& reports) {
  for (const auto& r : reports)
    if (r.status == "fail") return false;
  return true;
}

}  // namespace altq
