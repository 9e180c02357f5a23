#ifndef ALTQ_RELATIONS_HPP
#define ALTQ_RELATIONS_HPP

#include <string>
#include <vector>

#include "altq/ncpoly.hpp"

namespace altq {

// Parameters of the Freidel-Maillet presentation.  rho_bar is derived from
// k_plus, k_minus and must be nonzero.
struct FMParams {
  RatFuncQ k_plus;
  RatFuncQ k_minus;
  RatFuncQ eps_plus;
  RatFuncQ eps_minus;

  FMParams(RatFuncQ kp, RatFuncQ km, RatFuncQ ep = RatFuncQ(1), RatFuncQ em = RatFuncQ(1));
  RatFuncQ rho_bar;

  // Paper default: k+ = q^2, k- = -q^{-1}, eps+- = 1.
  static FMParams standard();
};

struct LabeledRelation {
  std::string label;
  NCPoly poly;  // LHS - RHS of an identity
};

class RelationSet {
 public:
  void add(std::string label, NCPoly p);  // drops zero polys, dedupes
  const std::vector<LabeledRelation>& all() const { return rels_; }
  std::size_t size() const { return rels_.size(); }
  bool contains_label(const std::string& l) const;
  const NCPoly* find(const std::string& label) const;
  // True when some stored relation equals p up to an overall scalar.
  bool contains_equivalent(const NCPoly& p) const;

 private:
  std::vector<LabeledRelation> rels_;
  std::vector<std::string> keys_;  // canonical forms for dedup
};

// Scalar standing for G_0 = Gt_0 = rho_bar/(q-q^{-1}); the constant term of
// the G-generating functions that the index-0 instances of the derived
// relations refer to.
RatFuncQ g0_scalar(const FMParams& p);

// All instances of the defining relations with family indices k, l <= k_max.
RelationSet defining_relations(unsigned k_max, const FMParams& p);
// All instances of the derived relation families (two q-commutator symmetry
// families and four quadratic exchange families) with parameters <= k_max.
// Index-0 G's are substituted by the g0_scalar constant.
RelationSet derived_relations(unsigned k_max, const FMParams& p);

// Classical algebra relations with indices <= k_max (coefficient rho_c,
// default 16).  Uses the same symbol alphabet, interpreted classically.
RelationSet classical_relations(unsigned k_max, const RatFuncQ& rho_c = RatFuncQ(16));

// Derived classical commutation: the mixed [g_{k+1}, gt_{l+1}] = 0 family.
// At q = 1 the coupling coefficient of the quantum exchange relations
// vanishes, so the mixed commutators vanish individually.
RelationSet classical_derived_relations(unsigned k_max);

}  // namespace altq

#endif
