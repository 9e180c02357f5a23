#ifndef ALTQ_HILBERT_HPP
#define ALTQ_HILBERT_HPP

#include <map>

#include "altq/ncpoly.hpp"
#include "altq/report.hpp"

namespace altq {

// Bivariate series with nonnegative integer coefficients on a finite grid.
struct BiSeries {
  std::map<Deg2, unsigned long> d;
  unsigned long at(long i, long j) const {
    auto it = d.find(Deg2{i, j});
    return it == d.end() ? 0 : it->second;
  }
  bool operator==(const BiSeries& o) const { return d == o.d; }
};

// Expansion of the Hilbert series Phi = H * Z truncated to total degree
// max_total_degree.
BiSeries hilbert_phi(unsigned max_total_degree);

enum class PbwBasis { Abar_q, barA_q };

// Count ordered PBW monomials, graded by summed N^2-degree, under the stated
// order; for barA_q both printed orders are enumerated and must agree.
BiSeries census(unsigned max_total_degree, PbwBasis basis);

// census(Abar_q) equals the Phi expansion on the full grid.
CheckReport pbw_census_check(unsigned max_total_degree);

}  // namespace altq

#endif
