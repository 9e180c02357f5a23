#ifndef ALTQ_DRESS_HPP
#define ALTQ_DRESS_HPP

#include <map>

#include "altq/fm.hpp"
#include "altq/generators.hpp"
#include "altq/spinrep.hpp"

namespace altq {

struct ConfigInvalid : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Tensor-product dressing configuration: spins (as 2j) and evaluation
// parameters for each leg, ordered leg 1 first (innermost tensor factor).
struct DressConfig {
  std::vector<long> twoj;
  std::vector<RatFuncQ> v;
  FMParams params = FMParams::standard();

  unsigned N() const { return static_cast<unsigned>(twoj.size()); }
  std::size_t total_dim() const {
    std::size_t d = 1;
    for (long tj : twoj) d *= static_cast<std::size_t>(tj) + 1;
    return d;
  }
  void validate() const;
  // alpha_1 = v1^2 w0^{(j1)}/(q+q^{-1}) + eps+ eps- (q-q^{-1})^2/(k+ k- (q+q^{-1}));
  // alpha_k = vk^2 w0^{(jk)}/(q+q^{-1}) for k >= 2.
  std::vector<RatFuncQ> alphas() const;
  RatFuncQ eps_plus_N() const;   // (-1)^N prod v_k^2 eps+
  RatFuncQ eps_minus_N() const;
};

using RepSeries = BiLaurent<RepMatrix>;
using RepMat2 = SeriesMatrix<RepMatrix>;

// Quantum Lax operators on one leg; the spectral argument is u*scale, so
// entries carry u^{+-1} with the matching power of `scale`.
RepMat2 lax_L(const SpinRep& rep, const RatFuncQ& scale);
RepMat2 lax_L0(const SpinRep& rep, const RatFuncQ& scale);

// Scalar seed solution (1x1 quantum space).
RepMat2 seed_K0(const FMParams& params);

// Exchange-relation checks for the Lax operators at spin j (YBA relations).
CheckReport lax_exchange_check(long twoj);

// K^{(N)}(u) by iterated dressing of the seed.
RepMat2 dress(const DressConfig& config);

// Residual of the Freidel-Maillet equation for a representation-valued K;
// zero iff K satisfies the equation exactly.
SeriesMatrix<RepMatrix> fm_residual_rep(const RepMat2& K, std::size_t dim);
bool fm_residual_is_zero(const RepMat2& K, std::size_t dim);

// The recursively defined operator families W^{(N)}_{-k}, W^{(N)}_{k+1},
// G^{(N)}_{k+1}, Gt^{(N)}_{k+1} for k <= k_max, as a symbol-keyed table.
std::map<Sym, RepMatrix> alt_ops(const DressConfig& config, unsigned k_max);

// Closed form of the dressed solution from the truncated generating
// functions f_k^{(N)}(u).
RepMat2 closed_form_K(const DressConfig& config);
RatFuncQ f_poly_coeff(const DressConfig& config, unsigned k, unsigned p);  // of U^{p-k}

// Linear relations: sum_k c_k^{(N)} W^{(N)}_{-k-p} + delta_{p,0} eps+^{(N)} = 0
// and the three sibling families, for all p <= p_max.
CheckReport linear_relations_check(const DressConfig& config, unsigned p_max);

// Every defining + derived relation with indices <= k_max annihilates, and
// the central Delta_{n+1} images commute with all generator matrices (n <= 2).
CheckReport relations_in_rep(const DressConfig& config, unsigned k_max);

// dress == closed_form_K entrywise.
CheckReport dress_vs_closed_form(const DressConfig& config);

// Gamma(u) of the quantum determinant evaluated in the representation
// commutes with every generator matrix.
CheckReport gamma_commutes_in_rep(const DressConfig& config, unsigned k_max);

// Evaluate an NCPoly under symbol -> matrix (coefficients must be scalar).
RepMatrix eval_in_rep(const NCPoly& p, const std::map<Sym, RepMatrix>& images, std::size_t dim);

}  // namespace altq

#endif
