#ifndef ALTQ_FM_HPP
#define ALTQ_FM_HPP

#include <set>

#include "altq/relations.hpp"
#include "altq/report.hpp"
#include "altq/rmatrix.hpp"
#include "altq/series.hpp"
#include "altq/span.hpp"

namespace altq {

enum class FMVariant { RE, REp };

// K(u) of the Freidel-Maillet presentation with the generating functions
// truncated at U^{-order}; entries are Laurent in u (exponent bookkeeping is
// in u, not U).  `var` selects which spectral axis (0: u, 1: v) carries the
// exponents, so the same builder serves both tensor slots.
SeriesMatrix<NCPoly> build_K(unsigned order, const FMParams& params, int var = 0);
// The second presentation K'(u): series in positive powers of u.
SeriesMatrix<NCPoly> build_Kprime(unsigned order, const FMParams& params, int var = 0);

// LHS - RHS of the chosen matrix equation for arbitrary slot matrices Ku, Kv
// (4x4 result).  Ku carries u-exponents, Kv carries v-exponents.
SeriesMatrix<NCPoly> fm_residual(const SeriesMatrix<NCPoly>& Ku, const SeriesMatrix<NCPoly>& Kv,
                                 FMVariant variant);

// Coefficient extraction: every exactly-known coefficient of u^a v^b in every
// slot of the residual, split into N^2-homogeneous parts, deduplicated.
RelationSet extract_relations_from(const SeriesMatrix<NCPoly>& residual, const char* label_prefix);

// The full pipeline of the Theorem-level check.  order >= 2 or
// TruncationTooSmall is thrown.
RelationSet extract_fm_relations(unsigned order, const FMParams& params, FMVariant variant);

// Row-reduces both sets over the word basis and reports mutual containment
// with explicit combination certificates (A-rows in terms of B and back).
CheckReport compare_relation_spans(const RelationSet& a, const RelationSet& b,
                                   const char* id = "fm.span_compare");
// One direction only: every member of `members` lies in span(container).
CheckReport span_containment(const RelationSet& container, const RelationSet& members,
                             const char* id);

// Keep only relations whose N^2-degree occurs in `degrees`.
RelationSet restrict_to_degrees(const RelationSet& rs, const std::set<Deg2>& degrees);
std::set<Deg2> degrees_of(const RelationSet& rs);
// Keep only relations supported on the given symbols.
RelationSet restrict_to_alphabet(const RelationSet& rs, const std::set<Sym>& symbols);
std::set<Sym> symbols_of(const RelationSet& rs);

// The Theorem-level equivalence run: extraction at `order` against
// defining_relations(k_max) + derived_relations(k_max).  Checks that every
// extracted relation lies in the span of the claimed set, and that every
// claimed relation the truncation can express (degree and alphabet visible
// in the extraction) lies in the extracted span.  Certificates included.
CheckReport fm_equivalence_check(unsigned order, unsigned k_max, const FMParams& params,
                                 FMVariant variant);

// Quantum determinant data: Delta(u) and Gamma(u) as one-variable truncated
// series with NCPoly coefficients, computed along two routes that must agree:
// the Sklyanin-type trace of K-products and the direct generating-function
// expansion.
struct SklyaninSeries {
  BiLaurent<NCPoly> delta_u;  // u-exponents
  BiLaurent<NCPoly> gamma_u;
  // Coefficient of U^{-n-1} of Delta(u), converted from the u-expansion.
  NCPoly delta_coeff_U(unsigned n) const;
};
SklyaninSeries sklyanin_delta(unsigned order, const FMParams& params);

}  // namespace altq

#endif
