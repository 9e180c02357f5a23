#ifndef ALTQ_NCPOLY_HPP
#define ALTQ_NCPOLY_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "altq/ratfunc.hpp"

namespace altq {

struct AlphabetMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Generator symbols.  The numeric kind order fixes the symbol order used by
// the deglex word order: W_{-k} < G_{k+1} < Gt_{k+1} < W_{k+1} < E1 < E0 < ...
enum class Gen : std::uint8_t { Wm = 0, G = 1, Gt = 2, Wp = 3, E1 = 4, E0 = 5, F1 = 6, F0 = 7 };

using Sym = std::uint32_t;  // (kind << 24) | index

constexpr Sym make_sym(Gen g, std::uint32_t idx = 0) {
  return (static_cast<Sym>(g) << 24) | idx;
}
constexpr Gen sym_kind(Sym s) { return static_cast<Gen>(s >> 24); }
constexpr std::uint32_t sym_index(Sym s) { return s & 0xffffffu; }

// Named constructors following the one-based family numbering.
constexpr Sym symWminus(std::uint32_t k) { return make_sym(Gen::Wm, k); }   // W_{-k}
constexpr Sym symWplus(std::uint32_t k) { return make_sym(Gen::Wp, k - 1); }  // W_k, k >= 1
constexpr Sym symG(std::uint32_t k) { return make_sym(Gen::G, k - 1); }       // G_k, k >= 1
constexpr Sym symGt(std::uint32_t k) { return make_sym(Gen::Gt, k - 1); }     // Gt_k, k >= 1
constexpr Sym symE0 = make_sym(Gen::E0);
constexpr Sym symE1 = make_sym(Gen::E1);
constexpr Sym symF0 = make_sym(Gen::F0);
constexpr Sym symF1 = make_sym(Gen::F1);

struct Deg2 {
  long a = 0, b = 0;
  Deg2& operator+=(const Deg2& o) {
    a += o.a;
    b += o.b;
    return *this;
  }
  bool operator==(const Deg2&) const = default;
  bool operator<(const Deg2& o) const { return a != o.a ? a < o.a : b < o.b; }
};

Deg2 sym_deg(Sym s);
std::string sym_name(Sym s);
bool is_alternating(Sym s);  // Wm/Wp/G/Gt

using Word = std::vector<Sym>;

struct WordLess {
  bool operator()(const Word& x, const Word& y) const {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  }
};

// Monomial in the central symbols Delta_1, Delta_2, ...; exponent of Delta_{i+1}
// at position i, trailing zeros trimmed.  Empty = the constant monomial.
using DeltaMono = std::vector<std::uint32_t>;

// Polynomial in the Delta symbols over RatFuncQ.  This is the coefficient ring
// of NCPoly; plain scalars are degree-0 elements.
class CoeffPoly {
 public:
  CoeffPoly() = default;
  CoeffPoly(const RatFuncQ& c) {  // NOLINT
    if (!c.is_zero()) t_[DeltaMono{}] = c;
  }
  CoeffPoly(long n) : CoeffPoly(RatFuncQ(n)) {}  // NOLINT
  static CoeffPoly delta(std::uint32_t n);  // the symbol Delta_n, n >= 1

  bool is_zero() const { return t_.empty(); }
  bool is_scalar() const;
  RatFuncQ scalar_part() const;  // coefficient of the constant monomial
  const std::map<DeltaMono, RatFuncQ>& terms() const { return t_; }

  CoeffPoly& operator+=(const CoeffPoly& o);
  CoeffPoly& operator-=(const CoeffPoly& o);
  friend CoeffPoly operator+(CoeffPoly a, const CoeffPoly& b) { return a += b; }
  friend CoeffPoly operator-(CoeffPoly a, const CoeffPoly& b) { return a -= b; }
  friend CoeffPoly operator*(const CoeffPoly& a, const CoeffPoly& b);
  CoeffPoly operator-() const;
  bool operator==(const CoeffPoly& o) const { return t_ == o.t_; }

  CoeffPoly& scale(const RatFuncQ& c);
  CoeffPoly drop_deltas() const;  // all Delta symbols -> 0
  // Substitute CoeffPoly values for the Delta symbols (index n -> values[n-1]);
  // missing entries keep the symbol.
  CoeffPoly substitute_deltas(const std::vector<CoeffPoly>& values) const;
  CoeffPoly map_scalars(const std::function<RatFuncQ(const RatFuncQ&)>& f) const;
  Deg2 delta_degree() const;  // Delta_m carries degree (m, m); 0 for scalars

  std::string str() const;

 private:
  std::map<DeltaMono, RatFuncQ> t_;
};

// Noncommutative polynomial: CoeffPoly-linear combination of words, kept in
// canonical sorted form (deglex word order, no zero coefficients).
class NCPoly {
 public:
  NCPoly() = default;
  NCPoly(const CoeffPoly& c) {  // NOLINT
    if (!c.is_zero()) t_[Word{}] = c;
  }
  NCPoly(const RatFuncQ& c) : NCPoly(CoeffPoly(c)) {}  // NOLINT
  static NCPoly gen(Sym s) { return word(Word{s}); }
  static NCPoly word(const Word& w, const CoeffPoly& c = CoeffPoly(1));

  bool is_zero() const { return t_.empty(); }
  const std::map<Word, CoeffPoly, WordLess>& terms() const { return t_; }
  std::size_t term_count() const { return t_.size(); }
  CoeffPoly coeff(const Word& w) const;

  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
  NCPoly operator-() const;
  bool operator==(const NCPoly& o) const { return t_ == o.t_; }
  bool operator!=(const NCPoly& o) const { return !(*this == o); }

  NCPoly& scale(const RatFuncQ& c);
  NCPoly& scale(const CoeffPoly& c);
  friend NCPoly operator*(const RatFuncQ& c, NCPoly p) { return p.scale(c); }

  // Grading.  is_homogeneous also reports the common degree when true.
  bool is_homogeneous(Deg2* deg = nullptr) const;
  std::map<Deg2, NCPoly> split_by_degree() const;
  // Group terms by Delta monomial; each value has plain scalar coefficients.
  std::map<DeltaMono, NCPoly> split_by_delta() const;
  bool has_delta() const;

  // Word-level substitution: every symbol is replaced by its image (images
  // multiply in word order).  Symbols without an image are kept as letters.
  NCPoly substitute(const std::function<const NCPoly*(Sym)>& image) const;
  NCPoly map_coeffs(const std::function<CoeffPoly(const CoeffPoly&)>& f) const;

  NCPoly sigma() const;  // automorphism: W_{-k} <-> W_{k+1}, G <-> Gt
  NCPoly antiS() const;  // antiautomorphism: fixes W, G <-> Gt, reverses words
  NCPoly gamma() const;  // quotient map: all Delta symbols -> 0

  // Deterministic text form (sorted terms), used for golden files and reports.
  std::string str() const;

 private:
  std::map<Word, CoeffPoly, WordLess> t_;
};

// [X,Y] = XY - YX
NCPoly comm(const NCPoly& x, const NCPoly& y);
// [X,Y]_q = q XY - q^{-1} YX
NCPoly qcomm(const NCPoly& x, const NCPoly& y);
// General weighted commutator a XY - a^{-1} YX used for [.,.]_{q^{-1}}.
NCPoly wcomm(const RatFuncQ& a, const NCPoly& x, const NCPoly& y);

}  // namespace altq

#endif
