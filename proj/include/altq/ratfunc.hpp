#ifndef ALTQ_RATFUNC_HPP
#define ALTQ_RATFUNC_HPP

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace altq {

struct PoleAtPoint : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IndexOutOfRange : std::out_of_range {
  using std::out_of_range::out_of_range;
};

// Laurent polynomial in the base indeterminate s, with q = s^2.  Stored as a
// dense coefficient vector starting at exponent `off_`, trimmed at both ends
// (empty = zero); exact rational coefficients throughout.
class LaurentQ {
 public:
  LaurentQ() = default;
  LaurentQ(const mpq_class& c) {  // NOLINT: implicit from constants
    if (c != 0) c_.push_back(c);
  }
  LaurentQ(long num, long den = 1) : LaurentQ(mpq_class(num, den)) {}

  static LaurentQ monomial(long exp, const mpq_class& c = 1) {
    LaurentQ r;
    if (c != 0) {
      r.off_ = exp;
      r.c_.push_back(c);
    }
    return r;
  }

  bool is_zero() const { return c_.empty(); }
  long min_exp() const { return c_.empty() ? 0 : off_; }
  long max_exp() const { return c_.empty() ? 0 : off_ + static_cast<long>(c_.size()) - 1; }
  mpq_class coeff(long exp) const {
    long i = exp - off_;
    if (c_.empty() || i < 0 || i >= static_cast<long>(c_.size())) return 0;
    return c_[static_cast<std::size_t>(i)];
  }
  std::size_t term_count() const;

  LaurentQ& operator+=(const LaurentQ& o);
  LaurentQ& operator-=(const LaurentQ& o);
  friend LaurentQ operator+(LaurentQ a, const LaurentQ& b) { return a += b; }
  friend LaurentQ operator-(LaurentQ a, const LaurentQ& b) { return a -= b; }
  friend LaurentQ operator*(const LaurentQ& a, const LaurentQ& b);
  LaurentQ operator-() const;
  bool operator==(const LaurentQ& o) const {
    return c_.empty() ? o.c_.empty() : (off_ == o.off_ && c_ == o.c_);
  }

  // Multiply by s^exp.
  LaurentQ shifted(long exp) const;
  // Substitute s -> s^{-1}.
  LaurentQ bar() const;
  mpq_class eval(const mpq_class& s0) const;  // s0 != 0 unless all exps >= 0

  std::string str() const;

  // Dense access for the reduction helpers (coefficient of s^{off()+i}).
  long off() const { return off_; }
  const std::vector<mpq_class>& dense() const { return c_; }

 private:
  void trim();
  long off_ = 0;
  std::vector<mpq_class> c_;
};

// Rational function in s over Q, kept in canonical reduced form:
//   den is an ordinary polynomial (min exponent 0) with constant term 1,
//   gcd(num-part, den) = 1.  Equality is syntactic equality of this form.
class RatFuncQ {
 public:
  RatFuncQ() : num_(), den_(LaurentQ(1)) {}
  RatFuncQ(const mpq_class& c) : num_(c), den_(LaurentQ(1)) {}  // NOLINT
  RatFuncQ(long num, long den = 1) : RatFuncQ(mpq_class(num, den)) {}
  RatFuncQ(const LaurentQ& num, const LaurentQ& den);
  RatFuncQ(const LaurentQ& num) : num_(num), den_(LaurentQ(1)) {}  // NOLINT

  static RatFuncQ s_power(long exp) { return RatFuncQ(LaurentQ::monomial(exp)); }
  static RatFuncQ q_power(long exp) { return s_power(2 * exp); }

  const LaurentQ& num() const { return num_; }
  const LaurentQ& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_ == LaurentQ(1) && den_ == LaurentQ(1); }

  RatFuncQ& operator+=(const RatFuncQ& o);
  RatFuncQ& operator-=(const RatFuncQ& o);
  RatFuncQ& operator*=(const RatFuncQ& o);
  RatFuncQ& operator/=(const RatFuncQ& o);
  friend RatFuncQ operator+(RatFuncQ a, const RatFuncQ& b) { return a += b; }
  friend RatFuncQ operator-(RatFuncQ a, const RatFuncQ& b) { return a -= b; }
  friend RatFuncQ operator*(RatFuncQ a, const RatFuncQ& b) { return a *= b; }
  friend RatFuncQ operator/(RatFuncQ a, const RatFuncQ& b) { return a /= b; }
  RatFuncQ operator-() const;
  bool operator==(const RatFuncQ& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const RatFuncQ& o) const { return !(*this == o); }
  bool operator<(const RatFuncQ& o) const;  // arbitrary total order (for maps)

  RatFuncQ inverse() const;
  // Substitute s -> s^{-1} (i.e. q -> q^{-1}).
  RatFuncQ bar() const;
  // Exact value at s = s0; throws PoleAtPoint when den(s0) = 0.
  mpq_class eval_at(const mpq_class& s0) const;

  std::string str() const;

 private:
  void reduce();
  static RatFuncQ cross_reduced(const LaurentQ& num, const LaurentQ& den);
  LaurentQ num_, den_;
};

// q and frequently used combinations, as rational functions of s.
RatFuncQ rf_q();          // q = s^2
RatFuncQ rf_qinv();       // q^{-1}
RatFuncQ rf_qplus();      // q + q^{-1}
RatFuncQ rf_qminus();     // q - q^{-1}

// [x] = (q^x - q^{-x}) / (q - q^{-1}); always a Laurent polynomial in q.
RatFuncQ qbracket(long x);

// Elementary symmetric polynomial e_k of the given values; e_0 = 1.
// Throws IndexOutOfRange unless 0 <= k <= values.size().
RatFuncQ elementary_symmetric(std::size_t k, const std::vector<RatFuncQ>& values);

}  // namespace altq

#endif
