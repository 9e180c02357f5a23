#include "altq/relations.hpp"

#include <stdexcept>

namespace altq {

FMParams::FMParams(RatFuncQ kp, RatFuncQ km, RatFuncQ ep, RatFuncQ em)
    : k_plus(std::move(kp)), k_minus(std::move(km)), eps_plus(std::move(ep)), eps_minus(std::move(em)) {
  if (k_plus.is_zero() || k_minus.is_zero())
    throw std::invalid_argument("FMParams: k_plus and k_minus must be nonzero (rho_bar = 0)");
  rho_bar = k_plus * k_minus * rf_qplus() * rf_qplus();
}

FMParams FMParams::standard() {
  return FMParams(RatFuncQ::q_power(2), -RatFuncQ::q_power(-1));
}

namespace {

// Canonical key: scale so the first stored coefficient is 1, then print.
std::string canonical_key(const NCPoly& p) {
  if (p.is_zero()) return "0";
  const CoeffPoly& c0 = p.terms().begin()->second;
  RatFuncQ lead = c0.terms().begin()->second;
  NCPoly q = p;
  q.scale(lead.inverse());
  return q.str();
}

}  // namespace

void RelationSet::add(std::string label, NCPoly p) {
  if (p.is_zero()) return;
  std::string key = canonical_key(p);
  for (const auto& k : keys_)
    if (k == key) return;
  keys_.push_back(std::move(key));
  rels_.push_back({std::move(label), std::move(p)});
}

bool RelationSet::contains_label(const std::string& l) const {
  for (const auto& r : rels_)
    if (r.label == l) return true;
  return false;
}

const NCPoly* RelationSet::find(const std::string& label) const {
  for (const auto& r : rels_)
    if (r.label == label) return &r.poly;
  return nullptr;
}

bool RelationSet::contains_equivalent(const NCPoly& p) const {
  if (p.is_zero()) return true;
  std::string key = canonical_key(p);
  for (const auto& k : keys_)
    if (k == key) return true;
  // A negated instance normalizes to a different key only through sign; the
  // canonical scaling already absorbs it, so key equality is the full test.
  return false;
}

RatFuncQ g0_scalar(const FMParams& p) { return p.rho_bar / rf_qminus(); }

namespace {

NCPoly Wm(unsigned k) { return NCPoly::gen(symWminus(k)); }
NCPoly Wp(unsigned k) { return NCPoly::gen(symWplus(k)); }  // W_k, k >= 1

NCPoly Gk(unsigned k, const FMParams& p) {
  return k == 0 ? NCPoly(g0_scalar(p)) : NCPoly::gen(symG(k));
}
NCPoly Gtk(unsigned k, const FMParams& p) {
  return k == 0 ? NCPoly(g0_scalar(p)) : NCPoly::gen(symGt(k));
}

std::string tag(const char* fam, unsigned k) { return std::string(fam) + "[" + std::to_string(k) + "]"; }
std::string tag2(const char* fam, unsigned k, unsigned l) {
  return std::string(fam) + "[" + std::to_string(k) + "," + std::to_string(l) + "]";
}

}  // namespace

RelationSet defining_relations(unsigned k_max, const FMParams& p) {
  RelationSet rs;
  const RatFuncQ qp = rf_qplus();
  const RatFuncQ& rho = p.rho_bar;
  for (unsigned k = 0; k <= k_max; ++k) {
    NCPoly gdiff = NCPoly::gen(symGt(k + 1)) - NCPoly::gen(symG(k + 1));
    gdiff.scale(qp.inverse());
    rs.add(tag("def1a", k), comm(Wm(0), Wp(k + 1)) - gdiff);
    rs.add(tag("def1b", k), comm(Wm(k), Wp(1)) - gdiff);
    rs.add(tag("def2a", k), qcomm(Wm(0), NCPoly::gen(symG(k + 1))) - rho * Wm(k + 1));
    rs.add(tag("def2b", k), qcomm(NCPoly::gen(symGt(k + 1)), Wm(0)) - rho * Wm(k + 1));
    rs.add(tag("def3a", k), qcomm(NCPoly::gen(symG(k + 1)), Wp(1)) - rho * Wp(k + 2));
    rs.add(tag("def3b", k), qcomm(Wp(1), NCPoly::gen(symGt(k + 1))) - rho * Wp(k + 2));
  }
  for (unsigned k = 0; k <= k_max; ++k)
    for (unsigned l = 0; l <= k_max; ++l) {
      rs.add(tag2("def4a", k, l), comm(Wm(k), Wm(l)));
      rs.add(tag2("def4b", k, l), comm(Wp(k + 1), Wp(l + 1)));
      rs.add(tag2("def5", k, l), comm(Wm(k), Wp(l + 1)) + comm(Wp(k + 1), Wm(l)));
      rs.add(tag2("def6", k, l),
             comm(Wm(k), NCPoly::gen(symG(l + 1))) + comm(NCPoly::gen(symG(k + 1)), Wm(l)));
      rs.add(tag2("def7", k, l),
             comm(Wm(k), NCPoly::gen(symGt(l + 1))) + comm(NCPoly::gen(symGt(k + 1)), Wm(l)));
      rs.add(tag2("def8", k, l),
             comm(Wp(k + 1), NCPoly::gen(symG(l + 1))) + comm(NCPoly::gen(symG(k + 1)), Wp(l + 1)));
      rs.add(tag2("def9", k, l),
             comm(Wp(k + 1), NCPoly::gen(symGt(l + 1))) + comm(NCPoly::gen(symGt(k + 1)), Wp(l + 1)));
      rs.add(tag2("def10a", k, l), comm(NCPoly::gen(symG(k + 1)), NCPoly::gen(symG(l + 1))));
      rs.add(tag2("def10b", k, l), comm(NCPoly::gen(symGt(k + 1)), NCPoly::gen(symGt(l + 1))));
      rs.add(tag2("def11", k, l),
             comm(NCPoly::gen(symGt(k + 1)), NCPoly::gen(symG(l + 1))) +
                 comm(NCPoly::gen(symG(k + 1)), NCPoly::gen(symGt(l + 1))));
    }
  return rs;
}

RelationSet derived_relations(unsigned k_max, const FMParams& p) {
  RelationSet rs;
  const RatFuncQ coef = p.rho_bar * rf_qplus();
  for (unsigned k = 0; k <= k_max; ++k)
    for (unsigned l = 0; l <= k_max; ++l) {
      if (k == l) continue;
      rs.add(tag2("wg1a", k, l), qcomm(Wm(k), Gk(l, p)) - qcomm(Wm(l), Gk(k, p)));
      rs.add(tag2("wg1b", k, l), qcomm(Gk(k, p), Wp(l + 1)) - qcomm(Gk(l, p), Wp(k + 1)));
      rs.add(tag2("wg2a", k, l), qcomm(Gtk(k, p), Wm(l)) - qcomm(Gtk(l, p), Wm(k)));
      rs.add(tag2("wg2b", k, l), qcomm(Wp(l + 1), Gtk(k, p)) - qcomm(Wp(k + 1), Gtk(l, p)));

      NCPoly gg1 = comm(Gk(k, p), Gtk(l + 1, p)) - comm(Gk(l, p), Gtk(k + 1, p)) -
                   coef * (qcomm(Wm(l), Wp(k + 1)) - qcomm(Wm(k), Wp(l + 1)));
      rs.add(tag2("gg1", k, l), std::move(gg1));
      NCPoly gg2 = comm(Gtk(k, p), Gk(l + 1, p)) - comm(Gtk(l, p), Gk(k + 1, p)) -
                   coef * (qcomm(Wp(l + 1), Wm(k)) - qcomm(Wp(k + 1), Wm(l)));
      rs.add(tag2("gg2", k, l), std::move(gg2));
      NCPoly gg3 = qcomm(Gk(k + 1, p), Gtk(l + 1, p)) - qcomm(Gk(l + 1, p), Gtk(k + 1, p)) -
                   coef * (comm(Wm(l), Wp(k + 2)) - comm(Wm(k), Wp(l + 2)));
      rs.add(tag2("gg3", k, l), std::move(gg3));
      NCPoly gg4 = qcomm(Gtk(k + 1, p), Gk(l + 1, p)) - qcomm(Gtk(l + 1, p), Gk(k + 1, p)) -
                   coef * (comm(Wp(l + 1), Wm(k + 1)) - comm(Wp(k + 1), Wm(l + 1)));
      rs.add(tag2("gg4", k, l), std::move(gg4));
    }
  return rs;
}

RelationSet classical_derived_relations(unsigned k_max) {
  RelationSet rs;
  for (unsigned k = 0; k <= k_max; ++k)
    for (unsigned l = 0; l <= k_max; ++l)
      rs.add(tag2("pod", k, l),
             comm(NCPoly::gen(symG(k + 1)), NCPoly::gen(symGt(l + 1))));
  return rs;
}

RelationSet classical_relations(unsigned k_max, const RatFuncQ& rho_c) {
  RelationSet rs;
  RatFuncQ half(mpq_class(1, 2));
  for (unsigned k = 0; k <= k_max; ++k)
    for (unsigned l = 0; l <= k_max; ++l) {
      NCPoly gdiff = NCPoly::gen(symGt(k + l + 1)) - NCPoly::gen(symG(k + l + 1));
      gdiff.scale(half);
      rs.add(tag2("po1", k, l), comm(Wm(l), Wp(k + 1)) - gdiff);
      rs.add(tag2("po2a", k, l),
             comm(NCPoly::gen(symGt(k + 1)), Wm(l)) - rho_c * Wm(k + l + 1));
      rs.add(tag2("po2b", k, l),
             comm(Wm(l), NCPoly::gen(symG(k + 1))) - rho_c * Wm(k + l + 1));
      rs.add(tag2("po3a", k, l),
             comm(Wp(l + 1), NCPoly::gen(symGt(k + 1))) - rho_c * Wp(k + l + 2));
      rs.add(tag2("po3b", k, l),
             comm(NCPoly::gen(symG(k + 1)), Wp(l + 1)) - rho_c * Wp(k + l + 2));
      rs.add(tag2("po4a", k, l), comm(Wm(k), Wm(l)));
      rs.add(tag2("po4b", k, l), comm(Wp(k + 1), Wp(l + 1)));
      rs.add(tag2("po4c", k, l), comm(NCPoly::gen(symG(k + 1)), NCPoly::gen(symG(l + 1))));
      rs.add(tag2("po4d", k, l), comm(NCPoly::gen(symGt(k + 1)), NCPoly::gen(symGt(l + 1))));
    }
  return rs;
}

}  // namespace altq
