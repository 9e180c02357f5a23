// Acceptance suite: one line per criterion, everything checked with exact
// arithmetic (the only tolerance is identically zero).  The last criterion
// invokes the installed CLI twice and compares report bytes.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "altq/checks.hpp"
#include "altq/fm.hpp"
#include "altq/hilbert.hpp"
#include "altq/loop.hpp"
#include "altq/rootvec.hpp"

using namespace altq;

namespace {

int failures = 0;

// budget_ms <= 0 means no stated runtime bound.
void criterion(int number, const std::string& name, long budget_ms,
               const std::function<bool()>& fn) {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  std::string error;
  try {
    ok = fn();
  } catch (const std::exception& e) {
    error = e.what();
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  bool in_budget = budget_ms <= 0 || ms <= budget_ms;
  ok = ok && in_budget;
  std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << number << ": " << name << " (" << ms
            << " ms" << (budget_ms > 0 ? ", budget " + std::to_string(budget_ms) + " ms" : "")
            << ")" << std::endl;
  if (!in_budget) std::cout << "        over the stated runtime budget" << std::endl;
  if (!error.empty()) std::cout << "        exception: " << error << std::endl;
  if (!ok) ++failures;
}

DressConfig conf_n1(const FMParams& p) {
  DressConfig c;
  c.twoj = {1};
  c.v = {RatFuncQ(1)};
  c.params = p;
  return c;
}

DressConfig conf_n2(const FMParams& p) {
  DressConfig c;
  c.twoj = {1, 1};
  c.v = {RatFuncQ(1), RatFuncQ(2)};
  c.params = p;
  return c;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  FMParams params = FMParams::standard();

  criterion(1, "Yang-Baxter identity and permutation properties", 1000, [&] {
    return check_ybe().passed();
  });

  criterion(2, "Freidel-Maillet equivalence at order 3, both variants, with certificates", 60000, [&] {
    auto re = fm_equivalence_check(3, 2, params, FMVariant::RE);
    auto rep = fm_equivalence_check(3, 2, params, FMVariant::REp);
    bool certs = false;
    for (const auto& [k, v] : re.details)
      if (k.rfind("claimed_span cert", 0) == 0 || k.rfind("extracted_span cert", 0) == 0) certs = true;
    return re.passed() && rep.passed() && certs;
  });

  criterion(3, "generator recursion matches the printed polynomials and Delta collapses", 1000, [&] {
    GeneratorTable t = build_generators(2, params);
    const RatFuncQ& rho = params.rho_bar;
    NCPoly w0 = NCPoly::gen(symWminus(0)), w1 = NCPoly::gen(symWplus(1));
    NCPoly d1(CoeffPoly::delta(1));
    auto qp = [](long e) { return RatFuncQ::q_power(e); };
    NCPoly g1 = rf_q() * (w1 * w0) - rf_qinv() * (w0 * w1) + RatFuncQ(mpq_class(1, 2)) * d1;
    NCPoly wm1 =
        (RatFuncQ(1) / rho) * ((qp(2) + qp(-2)) * (w0 * w1 * w0) - w0 * w0 * w1 - w1 * w0 * w0) +
        (rf_qminus() / (RatFuncQ(2) * rho)) * (d1 * w0);
    NCPoly g2 = (RatFuncQ(1) / (rho * (qp(2) + qp(-2)))) *
                ((qp(-3) + qp(-1)) * (w0 * w0 * w1 * w1) - (qp(3) + qp(1)) * (w1 * w1 * w0 * w0) +
                 (qp(-3) - qp(3)) * (w0 * w1 * w1 * w0 + w1 * w0 * w0 * w1) -
                 (qp(-5) + qp(-3) + RatFuncQ(2) * qp(-1)) * (w0 * w1 * w0 * w1) +
                 (qp(5) + qp(3) + RatFuncQ(2) * qp(1)) * (w1 * w0 * w1 * w0));
    g2 += (rf_qminus() / (RatFuncQ(2) * rho)) *
          (d1 * (rf_q() * (w1 * w0) - rf_qinv() * (w0 * w1)));
    g2 -= (rf_qminus() / (RatFuncQ(4) * rho * (qp(2) + qp(-2)))) * (d1 * d1);
    g2 += RatFuncQ(mpq_class(1, 2)) * NCPoly(CoeffPoly::delta(2));
    bool printed = t.at(symG(1)) == g1 && t.at(symWminus(1)) == wm1 && t.at(symG(2)) == g2;
    bool deltas = central_delta(0, params) == central_delta_printed(0, params) &&
                  central_delta(1, params) == central_delta_printed(1, params);
    bool collapse = delta_substitution_check(0, params).passed();
    return printed && deltas && collapse;
  });

  criterion(4, "q-Serre consequence with reported scalar, both mirrors", 1000, [&] {
    return qserre_consequence(params).passed();
  });

  criterion(5, "representations: closed form, matrix equation, relations, linear relations, center",
            300000, [&] {
              bool ok = true;
              for (const auto& c : {conf_n1(params), conf_n2(params)}) {
                ok = ok && dress_vs_closed_form(c).passed();
                ok = ok && fm_residual_is_zero(dress(c), c.total_dim());
                ok = ok && relations_in_rep(c, 3).passed();
                ok = ok && linear_relations_check(c, 3).passed();
              }
              return ok;
            });

  criterion(6, "quantum determinant expansion and centrality in the representations", 60000, [&] {
    auto sk = sklyanin_delta(3, params);
    bool lit = true;
    for (unsigned n = 0; n <= 1; ++n) {
      NCPoly expect = central_delta(n, params);
      RatFuncQ pre = -RatFuncQ::q_power(-static_cast<long>(n) - 1) *
                     (RatFuncQ::q_power(n + 1) + RatFuncQ::q_power(-static_cast<long>(n) - 1));
      expect.scale(pre);
      lit = lit && sk.delta_coeff_U(n) == expect;
    }
    bool central = gamma_commutes_in_rep(conf_n1(params), 2).passed() &&
                   gamma_commutes_in_rep(conf_n2(params), 2).passed();
    return lit && central;
  });

  criterion(7, "root-vector dictionary at low order with the ambiguity resolved", 1000, [&] {
    auto rep = verify_dictionary();
    if (!rep.passed()) return false;
    for (const auto& [k, v] : rep.details)
      if (k == "exib1_resolution" && v != "q^{-1}G1 (no trailing W0)") return false;
    return true;
  });

  criterion(8, "classical limit: CYBE identities, FRT span, loop realization, specialization",
            60000, [&] {
              return check_ns_cybe().passed() && check_cybe().passed() &&
                     classical_fm_equivalence(3, 2).passed() && loop_realization_check(4).passed() &&
                     specialize_generators_q1(3).passed();
            });

  criterion(9, "PBW census equals the Hilbert series through total degree 8", 10000, [&] {
    auto rep = pbw_census_check(8);
    if (!rep.passed()) return false;
    return hilbert_phi(8).at(1, 1) == 3;
  });

  criterion(10, "byte-identical reports across two full CLI runs", 0, [&] {
    if (cli.empty()) throw std::runtime_error("acceptance needs the CLI path as argv[1]");
    std::string out1 = "acceptance_run1.json", out2 = "acceptance_run2.json";
    std::string cmd1 = cli + " verify all --json " + out1 + " > acceptance_run1.log 2>&1";
    std::string cmd2 = cli + " verify all --json " + out2 + " > acceptance_run2.log 2>&1";
    if (std::system(cmd1.c_str()) != 0) return false;
    if (std::system(cmd2.c_str()) != 0) return false;
    std::string a = slurp(out1), b = slurp(out2);
    return !a.empty() && a == b;
  });

  std::cout << (failures == 0 ? "ACCEPTANCE: all criteria passed"
                              : "ACCEPTANCE: " + std::to_string(failures) + " criteria FAILED")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
