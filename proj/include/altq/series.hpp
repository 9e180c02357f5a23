#ifndef ALTQ_SERIES_HPP
#define ALTQ_SERIES_HPP

#include <algorithm>
#include <limits>
#include <map>
#include <utility>
#include <vector>

#include "altq/ncpoly.hpp"

namespace altq {

struct TruncationTooSmall : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr long SER_INF = std::numeric_limits<long>::max() / 4;

// One contamination region of a truncated expansion.  A value is its stored
// terms plus an unknown error; each error term's exponents (a, b) lie in at
// least one region.  `low` regions are {a <= au} & {b <= av} & {a+b <= at};
// `high` regions bound from below instead.  Absent constraints use +-SER_INF.
struct TailRegion {
  long au, av, at;
  bool low;

  bool contains(long a, long b) const {
    return low ? (a <= au && b <= av && a + b <= at)
               : (a >= au && b >= av && a + b >= at);
  }
  bool subsumes(const TailRegion& o) const {
    if (low != o.low) return false;
    return low ? (au >= o.au && av >= o.av && at >= o.at)
               : (au <= o.au && av <= o.av && at <= o.at);
  }
  static TailRegion low_tail(long au, long av, long at) { return {au, av, at, true}; }
  static TailRegion high_tail(long au, long av, long at) { return {au, av, at, false}; }
};

// Exponent ranges of the stored terms together with finite region bounds;
// used to shift the other factor's regions when multiplying.
struct ExpRange {
  long min_u = 0, max_u = 0, min_v = 0, max_v = 0, min_t = 0, max_t = 0;
  bool empty = true;
  void absorb(long a, long b) {
    if (empty) {
      min_u = max_u = a;
      min_v = max_v = b;
      min_t = max_t = a + b;
      empty = false;
    } else {
      min_u = std::min(min_u, a);
      max_u = std::max(max_u, a);
      min_v = std::min(min_v, b);
      max_v = std::max(max_v, b);
      min_t = std::min(min_t, a + b);
      max_t = std::max(max_t, a + b);
    }
  }
};

// Truncated two-variable Laurent object with coefficients C (NCPoly, scalar,
// or representation matrices).  Exponent pairs are (u-exponent, v-exponent).
template <class C>
class BiLaurent {
 public:
  using Key = std::pair<long, long>;

  BiLaurent() = default;
  explicit BiLaurent(const C& constant) {
    if (!is_zero_coeff(constant)) t_[{0, 0}] = constant;
  }

  static BiLaurent monomial(long eu, long ev, const C& c) {
    BiLaurent r;
    if (!is_zero_coeff(c)) r.t_[{eu, ev}] = c;
    return r;
  }

  const std::map<Key, C>& terms() const { return t_; }
  bool stored_zero() const { return t_.empty(); }
  const std::vector<TailRegion>& regions() const { return regions_; }

  void add_region(const TailRegion& r) {
    for (auto& e : regions_)
      if (e.subsumes(r)) return;
    std::vector<TailRegion> keep;
    for (auto& e : regions_)
      if (!r.subsumes(e)) keep.push_back(e);
    keep.push_back(r);
    regions_ = std::move(keep);
  }

  void set_coeff(long eu, long ev, const C& c) {
    if (is_zero_coeff(c))
      t_.erase({eu, ev});
    else
      t_[{eu, ev}] = c;
  }
  C coeff(long eu, long ev) const {
    auto it = t_.find({eu, ev});
    return it == t_.end() ? C{} : it->second;
  }
  bool coeff_exact(long eu, long ev) const {
    for (const auto& r : regions_)
      if (r.contains(eu, ev)) return false;
    return true;
  }

  BiLaurent& operator+=(const BiLaurent& o) {
    for (const auto& [k, c] : o.t_) add_term(k, c);
    for (const auto& r : o.regions_) add_region(r);
    return *this;
  }
  BiLaurent& operator-=(const BiLaurent& o) {
    for (const auto& [k, c] : o.t_) add_term(k, C{} - c);
    for (const auto& r : o.regions_) add_region(r);
    return *this;
  }
  friend BiLaurent operator+(BiLaurent a, const BiLaurent& b) { return a += b; }
  friend BiLaurent operator-(BiLaurent a, const BiLaurent& b) { return a -= b; }

  friend BiLaurent operator*(const BiLaurent& a, const BiLaurent& b) {
    BiLaurent r;
    for (const auto& [ka, ca] : a.t_)
      for (const auto& [kb, cb] : b.t_)
        r.add_term({ka.first + kb.first, ka.second + kb.second}, ca * cb);
    // Error terms: err(a)*full(b) and full(a)*err(b); full = stored + err,
    // and err exponents are bounded by their own region bounds, which the
    // ranges below include.
    ExpRange ra = a.range(), rb = b.range();
    for (const auto& reg : a.regions_) r.add_region(shift(reg, rb));
    for (const auto& reg : b.regions_) r.add_region(shift(reg, ra));
    return r;
  }

  BiLaurent scaled(const C& c) const {
    BiLaurent r;
    r.regions_ = regions_;
    for (const auto& [k, v] : t_) r.add_term(k, v * c);
    return r;
  }

 private:
  static bool is_zero_coeff(const C& c) { return c == C{}; }

  void add_term(const Key& k, const C& c) {
    if (is_zero_coeff(c)) return;
    auto it = t_.find(k);
    if (it == t_.end()) {
      t_.emplace(k, c);
    } else {
      it->second = it->second + c;
      if (is_zero_coeff(it->second)) t_.erase(it);
    }
  }

  ExpRange range() const {
    ExpRange r;
    for (const auto& [k, c] : t_) r.absorb(k.first, k.second);
    // Error terms also belong to the value: a low region bounds them from
    // above only (minima unbounded), a high region from below only.
    for (const auto& reg : regions_) {
      if (reg.low) {
        if (r.empty) {
          r.empty = false;
          r.max_u = reg.au;
          r.max_v = reg.av;
          r.max_t = reg.at;
        } else {
          r.max_u = std::max(r.max_u, reg.au);
          r.max_v = std::max(r.max_v, reg.av);
          r.max_t = std::max(r.max_t, reg.at);
        }
        r.min_u = r.min_v = r.min_t = -SER_INF;
      } else {
        if (r.empty) {
          r.empty = false;
          r.min_u = reg.au;
          r.min_v = reg.av;
          r.min_t = reg.at;
        } else {
          r.min_u = std::min(r.min_u, reg.au);
          r.min_v = std::min(r.min_v, reg.av);
          r.min_t = std::min(r.min_t, reg.at);
        }
        r.max_u = r.max_v = r.max_t = SER_INF;
      }
    }
    return r;
  }

  static long clamp_add(long x, long y) {
    if (x >= SER_INF || y >= SER_INF) return SER_INF;
    if (x <= -SER_INF || y <= -SER_INF) return -SER_INF;
    return x + y;
  }

  // Minkowski shift of an error region by the other factor's full range.
  static TailRegion shift(const TailRegion& reg, const ExpRange& other) {
    if (other.empty) {
      // Other factor is zero as stored; if it has no regions either the
      // product error vanishes, represented by an impossible region.
      return reg.low ? TailRegion::low_tail(-SER_INF, -SER_INF, -SER_INF)
                     : TailRegion::high_tail(SER_INF, SER_INF, SER_INF);
    }
    if (reg.low)
      return TailRegion::low_tail(clamp_add(reg.au, other.max_u), clamp_add(reg.av, other.max_v),
                                  clamp_add(reg.at, other.max_t));
    return TailRegion::high_tail(clamp_add(reg.au, other.min_u), clamp_add(reg.av, other.min_v),
                                 clamp_add(reg.at, other.min_t));
  }

  std::map<Key, C> t_;
  std::vector<TailRegion> regions_;
};

// Square matrix of BiLaurent entries.
template <class C>
class SeriesMatrix {
 public:
  SeriesMatrix() = default;
  explicit SeriesMatrix(std::size_t dim) : dim_(dim), e_(dim * dim) {}

  std::size_t dim() const { return dim_; }
  BiLaurent<C>& at(std::size_t i, std::size_t j) { return e_[i * dim_ + j]; }
  const BiLaurent<C>& at(std::size_t i, std::size_t j) const { return e_[i * dim_ + j]; }

  friend SeriesMatrix operator*(const SeriesMatrix& a, const SeriesMatrix& b) {
    SeriesMatrix r(a.dim_);
    for (std::size_t i = 0; i < a.dim_; ++i)
      for (std::size_t j = 0; j < a.dim_; ++j) {
        BiLaurent<C> acc;
        for (std::size_t k = 0; k < a.dim_; ++k) acc += a.at(i, k) * b.at(k, j);
        r.at(i, j) = acc;
      }
    return r;
  }
  friend SeriesMatrix operator-(const SeriesMatrix& a, const SeriesMatrix& b) {
    SeriesMatrix r(a.dim_);
    for (std::size_t i = 0; i < a.dim_ * a.dim_; ++i) r.e_[i] = a.e_[i] - b.e_[i];
    return r;
  }

  // Kronecker embeddings into dim^2 x dim^2 (auxiliary-space tensor).
  SeriesMatrix tensor_left() const {  // this (x) Id
    SeriesMatrix r(dim_ * dim_);
    for (std::size_t i1 = 0; i1 < dim_; ++i1)
      for (std::size_t j1 = 0; j1 < dim_; ++j1)
        for (std::size_t i2 = 0; i2 < dim_; ++i2)
          r.at(i1 * dim_ + i2, j1 * dim_ + i2) = at(i1, j1);
    return r;
  }
  SeriesMatrix tensor_right() const {  // Id (x) this
    SeriesMatrix r(dim_ * dim_);
    for (std::size_t i2 = 0; i2 < dim_; ++i2)
      for (std::size_t j2 = 0; j2 < dim_; ++j2)
        for (std::size_t i1 = 0; i1 < dim_; ++i1)
          r.at(i1 * dim_ + i2, i1 * dim_ + j2) = at(i2, j2);
    return r;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<BiLaurent<C>> e_;
};

}  // namespace altq

#endif
