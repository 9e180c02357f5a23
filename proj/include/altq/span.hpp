#ifndef ALTQ_SPAN_HPP
#define ALTQ_SPAN_HPP

#include <optional>
#include <utility>
#include <vector>

#include "altq/ncpoly.hpp"

namespace altq {

// Incremental row reduction over the word basis, coefficients in the field
// of rational functions.  Rows must have scalar coefficients (no Delta
// symbols).  Used for span membership with explicit combination certificates.
class NcSpan {
 public:
  // Returns the index the row was stored under, or -1 if it reduced to zero.
  long add(const NCPoly& p) {
    NCPoly r = reduce_only(p);
    if (r.is_zero()) return -1;
    RatFuncQ lead = r.terms().begin()->second.scalar_part();
    r.scale(lead.inverse());
    rows_.push_back(std::move(r));
    return static_cast<long>(rows_.size()) - 1;
  }

  // Reduces p against the basis; coeffs[i] receives the coefficient of basis
  // row i used (certificate: p = sum coeffs[i]*row_i + residual).
  NCPoly reduce(const NCPoly& p, std::vector<RatFuncQ>* coeffs = nullptr) const {
    if (coeffs) coeffs->assign(rows_.size(), RatFuncQ(0));
    NCPoly r = p;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Word& pivot = rows_[i].terms().begin()->first;
      CoeffPoly c = r.coeff(pivot);
      if (c.is_zero()) continue;
      RatFuncQ cs = c.scalar_part();
      NCPoly sub = rows_[i];
      sub.scale(cs);
      r -= sub;
      if (coeffs) (*coeffs)[i] = cs;
    }
    return r;
  }

  bool contains(const NCPoly& p, std::vector<RatFuncQ>* coeffs = nullptr) const {
    return reduce(p, coeffs).is_zero();
  }

  std::size_t dim() const { return rows_.size(); }

 private:
  NCPoly reduce_only(const NCPoly& p) const { return reduce(p, nullptr); }
  std::vector<NCPoly> rows_;  // echelon: each row's first word is its pivot
};

// Span of the two-sided ideal generated by the given elements, restricted to
// one N^2-degree: all x * g * y with x, y words such that deg(x g y) = deg.
// Words are enumerated over the letters appearing in `letters`.
NcSpan ideal_slice(const std::vector<NCPoly>& gens, const std::vector<Sym>& letters, Deg2 deg);

}  // namespace altq

#endif
