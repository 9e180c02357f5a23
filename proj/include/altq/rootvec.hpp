#ifndef ALTQ_ROOTVEC_HPP
#define ALTQ_ROOTVEC_HPP

#include <map>

#include "altq/generators.hpp"
#include "altq/report.hpp"

namespace altq {

// Positive root vectors of U_q^+ at low order, as polynomials in E1, E0.
// Real roots come from the bracket recursion with E_delta, imaginary roots
// from the exponential functional equation for the psi-tilde elements.
struct RootVectorTable {
  unsigned n_max = 0;
  std::map<unsigned, NCPoly> e_delta_a1;  // E_{k delta + alpha_1}, key k (k=0: E1)
  std::map<unsigned, NCPoly> e_delta_a0;  // E_{k delta + alpha_0}, key k (k=0: E0)
  std::map<unsigned, NCPoly> e_imag;      // E_{k delta}, key k >= 1
};

RootVectorTable build_root_vectors(unsigned n_max);

// Images of the alternating generators in the {E0,E1} algebra: W0 -> E1,
// W1 -> E0, deeper generators by substituting into the gamma-quotient
// polynomials.  Parameters fixed to k+ = q^2, k- = -q^{-1}.
std::map<Sym, NCPoly> iota_images(unsigned n_max);

// Omega antiautomorphism: word reversal, E <-> F, q -> q^{-1}.
NCPoly omega_map(const NCPoly& p);

// Verifies the printed iota images and the recursive inverse dictionary at
// degrees where the q-Serre ideal is empty, plus the ambiguity resolution of
// the printed E_delta image.
CheckReport verify_dictionary();

}  // namespace altq

#endif
