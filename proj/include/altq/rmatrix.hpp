#ifndef ALTQ_RMATRIX_HPP
#define ALTQ_RMATRIX_HPP

#include "altq/report.hpp"
#include "altq/series.hpp"

namespace altq {

// The symmetric 4x4 trigonometric R-matrix with spectral argument
// x = u^{du} v^{dv}; entries are exact bivariate Laurent polynomials.
SeriesMatrix<RatFuncQ> r_matrix_scalar(long du, long dv);
// diag(1, q^{-1}, q^{-1}, 1), or its inverse.
SeriesMatrix<RatFuncQ> r0_matrix_scalar(bool inverse = false);
// P = R(1)/(q - q^{-1}).
SeriesMatrix<RatFuncQ> permutation_matrix();

// Embed a two-site 4x4 operator at sites (a, b) of a 3-site space (8x8),
// 0-based sites, a < b or a > b both allowed.
SeriesMatrix<RatFuncQ> embed3(const SeriesMatrix<RatFuncQ>& m, int a, int b);

// Lift scalar series matrices into any coefficient type via conv(RatFuncQ)->C.
template <class C, class Conv>
SeriesMatrix<C> lift_matrix(const SeriesMatrix<RatFuncQ>& m, Conv conv) {
  SeriesMatrix<C> r(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) {
      BiLaurent<C> e;
      for (const auto& [k, c] : m.at(i, j).terms()) {
        C v = conv(c);
        e += BiLaurent<C>::monomial(k.first, k.second, v);
      }
      for (const auto& reg : m.at(i, j).regions()) e.add_region(reg);
      r.at(i, j) = e;
    }
  return r;
}

// Verifies R12(u/v) R13(u) R23(v) = R23(v) R13(u) R12(u/v) exactly, that P is
// an involution, that P R(x) P = R(x), and the u = v specialization.
CheckReport check_ybe();

// Same check after adding `bump` to one entry of R12; the report carries the
// offending matrix position.  Used to validate failure reporting.
CheckReport check_ybe_perturbed(std::size_t row, std::size_t col);

}  // namespace altq

#endif
