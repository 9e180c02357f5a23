#include "doctest.h"

#include "altq/rootvec.hpp"

using namespace altq;

namespace {

// Letter counts (E1, E0) of every word must match the root.
void check_letter_counts(const NCPoly& p, long n_e1, long n_e0) {
  for (const auto& [w, c] : p.terms()) {
    long c1 = 0, c0 = 0;
    for (Sym s : w) {
      if (sym_kind(s) == Gen::E1) ++c1;
      if (sym_kind(s) == Gen::E0) ++c0;
    }
    CHECK(c1 == n_e1);
    CHECK(c0 == n_e0);
  }
}

}  // namespace

TEST_CASE("printed low-order root vectors") {
  auto t = build_root_vectors(2);
  NCPoly e1 = NCPoly::gen(symE1), e0 = NCPoly::gen(symE0);
  CHECK(t.e_imag.at(1) == e0 * e1 - RatFuncQ::q_power(-2) * (e1 * e0));
  NCPoly ea0 = e0 * e0 * e1 - (RatFuncQ(1) + RatFuncQ::q_power(-2)) * (e0 * e1 * e0) +
               RatFuncQ::q_power(-2) * (e1 * e0 * e0);
  ea0.scale(rf_qplus().inverse());
  CHECK(t.e_delta_a0.at(1) == ea0);
  NCPoly ea1 = e0 * e1 * e1 - (RatFuncQ(1) + RatFuncQ::q_power(-2)) * (e1 * e0 * e1) +
               RatFuncQ::q_power(-2) * (e1 * e1 * e0);
  ea1.scale(rf_qplus().inverse());
  CHECK(t.e_delta_a1.at(1) == ea1);
}

TEST_CASE("root vectors carry the letter counts of their roots") {
  auto t = build_root_vectors(2);
  for (const auto& [k, p] : t.e_delta_a1) check_letter_counts(p, k + 1, k);
  for (const auto& [k, p] : t.e_delta_a0) check_letter_counts(p, k, k + 1);
  for (const auto& [k, p] : t.e_imag) check_letter_counts(p, k, k);
}

TEST_CASE("omega is an involution, maps E_delta as printed, and is linear") {
  auto t = build_root_vectors(1);
  NCPoly f0 = NCPoly::gen(symF0), f1 = NCPoly::gen(symF1);
  NCPoly expect = f1 * f0 - RatFuncQ::q_power(2) * (f0 * f1);
  CHECK(omega_map(t.e_imag.at(1)) == expect);
  CHECK(omega_map(omega_map(t.e_imag.at(1))) == t.e_imag.at(1));
  NCPoly c = rf_qminus() * NCPoly::gen(symE1);
  CHECK(omega_map(c) == rf_qminus().bar() * f1);
  CHECK_THROWS_AS(omega_map(NCPoly::gen(symWminus(0))), AlphabetMismatch);
}

TEST_CASE("dictionary verification passes with the ambiguity resolved") {
  auto rep = verify_dictionary();
  CHECK(rep.passed());
  std::string resolution;
  bool with_w0_fails = false;
  for (const auto& [k, v] : rep.details) {
    if (k == "exib1_resolution") resolution = v;
    if (k == "exib1_Edelta_with_trailing_W0") with_w0_fails = (v == "fail");
  }
  CHECK(resolution == "q^{-1}G1 (no trailing W0)");
  CHECK(with_w0_fails);
}

TEST_CASE("imaginary root E_{2delta} satisfies its defining expansion") {
  // Independent check of the functional equation at order 2:
  // (q-q^{-1}) psi_2 = (q-q^{-1}) E_{2delta} + (q-q^{-1})^2 E_delta^2 / 2.
  auto t = build_root_vectors(2);
  NCPoly e1 = NCPoly::gen(symE1);
  NCPoly psi2 = t.e_delta_a0.at(1) * e1 - RatFuncQ::q_power(-2) * (e1 * t.e_delta_a0.at(1));
  NCPoly rhs = t.e_imag.at(2) +
               (rf_qminus() * RatFuncQ(mpq_class(1, 2))) * (t.e_imag.at(1) * t.e_imag.at(1));
  CHECK(psi2 == rhs);
}
