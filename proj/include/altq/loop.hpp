#ifndef ALTQ_LOOP_HPP
#define ALTQ_LOOP_HPP

#include <array>
#include <map>

#include "altq/relations.hpp"
#include "altq/report.hpp"

namespace altq {

// Element of gl_2 tensor Laurent polynomials in t (central charge zero):
// finite sum of 2x2 rational matrices per power of t, with the associative
// matrix product; the commutator realizes the loop-algebra bracket.
class LoopElement {
 public:
  using Mat2 = std::array<mpq_class, 4>;  // row-major 2x2

  LoopElement() = default;
  static LoopElement unit(long tpow, std::size_t row, std::size_t col, const mpq_class& c);

  bool is_zero() const;
  LoopElement& operator+=(const LoopElement& o);
  friend LoopElement operator+(LoopElement a, const LoopElement& b) { return a += b; }
  friend LoopElement operator-(const LoopElement& a, const LoopElement& b);
  friend LoopElement operator*(const LoopElement& a, const LoopElement& b);
  LoopElement scaled(const mpq_class& c) const;

  const std::map<long, Mat2>& terms() const { return t_; }

 private:
  std::map<long, Mat2> t_;
};

inline LoopElement comm(const LoopElement& a, const LoopElement& b) { return a * b - b * a; }

// Loop images of the alternating symbols; `left` selects the left-subalgebra
// variant of the isomorphism.
LoopElement loop_image(Sym s, bool left);

// Non-standard classical Yang-Baxter equation for the symmetric r-matrix,
// checked exactly after clearing the (u_i^2 - u_j^2) denominators; includes
// the r21 = r12 symmetry.
CheckReport check_ns_cybe();
// Classical Yang-Baxter equation for the traceless r(z), cleared form.
CheckReport check_cybe();

// FRT-type extraction for the classical algebra: coefficients of the cleared
// non-standard Yang-Baxter algebra residual with B(u) truncated, compared
// against the classical relation span.
RelationSet extract_classical_fm(unsigned order, const RatFuncQ& rho_c = RatFuncQ(16));
CheckReport classical_fm_equivalence(unsigned order, unsigned k_max);

// The loop realization annihilates every classical relation instance.
CheckReport loop_realization_check(unsigned k_max);

// q = 1, rho = 16 specialization of the generator table: pole-freeness and
// consistency with the loop realization (direct images and relation checks).
CheckReport specialize_generators_q1(unsigned n_max);

}  // namespace altq

#endif
