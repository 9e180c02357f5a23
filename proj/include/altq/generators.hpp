#ifndef ALTQ_GENERATORS_HPP
#define ALTQ_GENERATORS_HPP

#include <map>

#include "altq/ncpoly.hpp"
#include "altq/relations.hpp"
#include "altq/report.hpp"

namespace altq {

// Every alternating generator with index <= n_max expressed as a polynomial
// in W0, W1 with coefficients in RatFuncQ[Delta_1..Delta_n_max], obtained by
// iterating the recursive relations.
struct GeneratorTable {
  unsigned n_max = 0;
  FMParams params = FMParams::standard();
  std::map<Sym, NCPoly> entries;

  const NCPoly& at(Sym s) const { return entries.at(s); }
  // Substitution callback usable with NCPoly::substitute.
  const NCPoly* image(Sym s) const {
    auto it = entries.find(s);
    return it == entries.end() ? nullptr : &it->second;
  }
};

GeneratorTable build_generators(unsigned n_max, const FMParams& params);

// Delta_{n+1} expressed in the alternating generators (abstract alphabet).
NCPoly central_delta(unsigned n, const FMParams& params);

// The printed low-order expressions, frozen for comparison/testing.
NCPoly central_delta_printed(unsigned n, const FMParams& params);  // n = 0,1,2

// All Delta symbols -> 0 (the quotient map onto bar-A_q).
NCPoly gamma_quotient(const NCPoly& p);

// The q-Serre elements [x,[x,[x,y]_q]_{q^{-1}}] over given letters.
NCPoly qserre_element(const NCPoly& x, const NCPoly& y);

// Checks that [gamma(W_{-1}), W0] is a nonzero scalar multiple of the q-Serre
// element in W0, W1 (and the sigma-mirror for the second relation); reports
// the scalar.
CheckReport qserre_consequence(const FMParams& params);

// Self-consistency: substituting the generator-table polynomials into the
// expression of Delta_{n+1} collapses everything to the symbol Delta_{n+1}.
CheckReport delta_substitution_check(unsigned n, const FMParams& params);

}  // namespace altq

#endif
