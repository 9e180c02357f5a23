#include <chrono>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "altq/checks.hpp"
#include "altq/parse.hpp"

using namespace altq;

namespace {

Sym parse_generator_name(const std::string& name) {
  auto num = [&](std::size_t from) -> long {
    if (from >= name.size()) throw ParseError("generator name needs an index: " + name);
    return std::stol(name.substr(from));
  };
  if (name.rfind("Gt", 0) == 0) {
    long k = num(2);
    if (k < 1) throw ParseError("Gt index starts at 1");
    return symGt(static_cast<unsigned>(k));
  }
  if (name.rfind("G", 0) == 0) {
    long k = num(1);
    if (k < 1) throw ParseError("G index starts at 1");
    return symG(static_cast<unsigned>(k));
  }
  if (name.rfind("W-", 0) == 0) return symWminus(static_cast<unsigned>(num(2) < 0 ? -num(2) : num(2)));
  if (name.rfind("W", 0) == 0) {
    long k = num(1);
    return k <= 0 ? symWminus(static_cast<unsigned>(-k)) : symWplus(static_cast<unsigned>(k));
  }
  throw ParseError("unknown generator name: " + name + " (use W0, W-2, W3, G1, Gt2, ...)");
}

int emit_reports(const std::vector<CheckReport>& reports, const std::string& json_out) {
  for (const auto& r : reports) {
    std::cout << (r.status == "pass" ? "[pass] " : r.status == "fail" ? "[FAIL] " : "[skip] ")
              << r.check_id << "\n";
    if (r.status == "fail")
      for (const auto& [k, v] : r.details) std::cout << "        " << k << " = " << v << "\n";
  }
  std::string json = reports_to_json(reports);
  if (!json_out.empty()) {
    std::ofstream out(json_out, std::ios::binary);
    out << json;
  }
  bool ok = all_passed(reports);
  std::cout << (ok ? "all checks passed" : "FAILURES present") << " (" << reports.size()
            << " reports)\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification engine for the alternating presentation"};
  app.require_subcommand(1);

  // verify ------------------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "run a verification group (or all)");
  std::string group = "all";
  verify->add_option("group", group, "all|ybe|fm|determinant|reps|classical|dictionary|pbw|serre");
  unsigned order = 3, kmax = 3, pmax = 3, maxdeg = 8;
  std::string config_file, json_out, variant, spins_csv, v_csv;
  unsigned n_legs = 0;
  verify->add_option("--n", n_legs, "reps only: number of tensor legs (consistency check)");
  verify->add_option("--order", order, "truncation order for spectral expansions");
  verify->add_option("--kmax", kmax, "relation index bound");
  verify->add_option("--pmax", pmax, "linear relation depth");
  verify->add_option("--max-degree", maxdeg, "PBW census total degree bound");
  verify->add_option("--variant", variant, "fm only: re|rep");
  verify->add_option("--spins", spins_csv, "reps only: comma-separated spins, e.g. 1/2,1");
  verify->add_option("--v", v_csv, "reps only: comma-separated evaluation parameters");
  verify->add_option("--config", config_file, "JSON config file");
  verify->add_option("--json", json_out, "write the JSON report here");

  // dump --------------------------------------------------------------------
  auto* dump = app.add_subcommand("dump", "print a generator or central element");
  std::string what, symbol;
  unsigned nmax = 3;
  dump->add_option("what", what, "generator|delta")->required();
  dump->add_option("symbol", symbol, "generator name (W-1, G2, ...) or delta index")->required();
  dump->add_option("--nmax", nmax, "table depth");

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) {
      RunConfig cfg;
      if (!config_file.empty()) cfg = load_config(config_file);
      if (verify->count("--order")) cfg.order = order;
      if (verify->count("--kmax")) cfg.k_max = kmax;
      if (verify->count("--pmax")) cfg.p_max = pmax;
      if (verify->count("--max-degree")) cfg.max_degree = maxdeg;
      if (group != "all") {
        cfg.groups.clear();
        cfg.groups.insert(group);
      }
      if (!spins_csv.empty()) {
        DressConfig dc;
        dc.params = cfg.params;
        std::stringstream ss(spins_csv);
        std::string tok;
        while (std::getline(ss, tok, ',')) dc.twoj.push_back(parse_two_j(tok));
        std::stringstream sv(v_csv);
        while (std::getline(sv, tok, ',')) dc.v.push_back(parse_scalar(tok));
        if (n_legs && n_legs != dc.twoj.size())
          throw ConfigInvalid("--n disagrees with the number of spins");
        cfg.dress_configs = {dc};
      }
      if (!variant.empty() && variant != "re" && variant != "rep")
        throw ConfigInvalid("--variant must be re or rep");
      auto t0 = std::chrono::steady_clock::now();
      std::vector<CheckReport> reports;
      if (!variant.empty() && group == "fm") {
        reports.push_back(fm_equivalence_check(cfg.order, cfg.order - 1, cfg.params,
                                               variant == "re" ? FMVariant::RE : FMVariant::REp));
      } else {
        reports = run(cfg);
      }
      auto t1 = std::chrono::steady_clock::now();
      int rc = emit_reports(reports, json_out);
      std::cerr << "elapsed "
                << std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count() << " ms\n";
      return rc;
    }
    if (dump->parsed()) {
      FMParams params = FMParams::standard();
      if (what == "generator") {
        Sym s = parse_generator_name(symbol);
        unsigned need = std::max(nmax, sym_index(s) + 2u);
        GeneratorTable t = build_generators(need, params);
        std::cout << sym_name(s) << " = " << t.at(s).str() << "\n";
        return 0;
      }
      if (what == "delta") {
        unsigned n = static_cast<unsigned>(std::stoul(symbol));
        if (n < 1) throw ConfigInvalid("delta index starts at 1");
        std::cout << "Delta" << n << " = " << central_delta(n - 1, params).str() << "\n";
        return 0;
      }
      throw ConfigInvalid("dump expects 'generator' or 'delta'");
    }
  } catch (const ConfigInvalid& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
