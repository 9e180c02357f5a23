#include "altq/ratfunc.hpp"

#include <algorithm>
#include <sstream>

namespace altq {

void LaurentQ::trim() {
  std::size_t lead = 0;
  while (lead < c_.size() && c_[lead] == 0) ++lead;
  if (lead == c_.size()) {
    c_.clear();
    off_ = 0;
    return;
  }
  if (lead) {
    c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
    off_ += static_cast<long>(lead);
  }
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::size_t LaurentQ::term_count() const {
  std::size_t n = 0;
  for (const auto& c : c_)
    if (c != 0) ++n;
  return n;
}

LaurentQ& LaurentQ::operator+=(const LaurentQ& o) {
  if (o.c_.empty()) return *this;
  if (c_.empty()) {
    *this = o;
    return *this;
  }
  long lo = std::min(off_, o.off_);
  long hi = std::max(max_exp(), o.max_exp());
  std::vector<mpq_class> merged(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t i = 0; i < c_.size(); ++i) merged[static_cast<std::size_t>(off_ - lo) + i] = c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i)
    merged[static_cast<std::size_t>(o.off_ - lo) + i] += o.c_[i];
  off_ = lo;
  c_ = std::move(merged);
  trim();
  return *this;
}

LaurentQ& LaurentQ::operator-=(const LaurentQ& o) {
  if (o.c_.empty()) return *this;
  if (c_.empty()) {
    *this = -o;
    return *this;
  }
  long lo = std::min(off_, o.off_);
  long hi = std::max(max_exp(), o.max_exp());
  std::vector<mpq_class> merged(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t i = 0; i < c_.size(); ++i) merged[static_cast<std::size_t>(off_ - lo) + i] = c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i)
    merged[static_cast<std::size_t>(o.off_ - lo) + i] -= o.c_[i];
  off_ = lo;
  c_ = std::move(merged);
  trim();
  return *this;
}

LaurentQ operator*(const LaurentQ& a, const LaurentQ& b) {
  LaurentQ r;
  if (a.c_.empty() || b.c_.empty()) return r;
  r.off_ = a.off_ + b.off_;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j] == 0) continue;
      r.c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
  r.trim();
  return r;
}

LaurentQ LaurentQ::operator-() const {
  LaurentQ r;
  r.off_ = off_;
  r.c_.reserve(c_.size());
  for (const auto& c : c_) r.c_.push_back(-c);
  return r;
}

LaurentQ LaurentQ::shifted(long exp) const {
  LaurentQ r = *this;
  if (!r.c_.empty()) r.off_ += exp;
  return r;
}

LaurentQ LaurentQ::bar() const {
  LaurentQ r;
  if (c_.empty()) return r;
  r.off_ = -max_exp();
  r.c_.assign(c_.rbegin(), c_.rend());
  return r;
}

mpq_class LaurentQ::eval(const mpq_class& s0) const {
  if (c_.empty()) return 0;
  mpq_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= s0;
    acc += *it;
  }
  if (off_ > 0) {
    for (long k = 0; k < off_; ++k) acc *= s0;
  } else if (off_ < 0) {
    if (s0 == 0) throw PoleAtPoint("evaluation of negative power at s=0");
    mpq_class p = 1;
    for (long k = 0; k < -off_; ++k) p *= s0;
    acc /= p;
  }
  return acc;
}

std::string LaurentQ::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    long e = off_ + static_cast<long>(i);
    mpq_class a = c_[i];
    if (!first) {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    } else if (a < 0) {
      os << "-";
      a = -a;
    }
    first = false;
    if (a != 1 || e == 0) os << a.get_str();
    if (e != 0) {
      if (a != 1) os << "*";
      os << "s";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

namespace {

// Dense ordinary polynomial over Q, coefficient of s^i at index i.
using Poly = std::vector<mpq_class>;

Poly to_poly(const LaurentQ& l, long shift) {
  Poly p(static_cast<std::size_t>(l.max_exp() - shift) + 1, mpq_class(0));
  for (std::size_t i = 0; i < l.dense().size(); ++i)
    p[static_cast<std::size_t>(l.off() + static_cast<long>(i) - shift)] = l.dense()[i];
  return p;
}

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Integer polynomials for the gcd computation: rational Euclid suffers from
// quadratic fraction blowup, so the gcd runs on primitive integer parts with
// pseudo-division and per-step content removal.
using ZPoly = std::vector<mpz_class>;

void trimz(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

mpz_class content(const ZPoly& p) {
  mpz_class g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

ZPoly primitive(ZPoly p) {
  mpz_class c = content(p);
  if (c > 1)
    for (auto& x : p) x /= c;
  if (!p.empty() && p.back() < 0)
    for (auto& x : p) x = -x;
  return p;
}

ZPoly to_zpoly(const Poly& p) {
  mpz_class lcm = 1;
  for (const auto& c : p)
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  ZPoly z;
  z.reserve(p.size());
  for (const auto& c : p) {
    mpq_class scaled = c * mpq_class(lcm);
    z.push_back(scaled.get_num());
  }
  trimz(z);
  return primitive(z);
}

// Pseudo-remainder: lc(b)^{deg a - deg b + 1} * a mod b, exact over Z.
ZPoly prem(ZPoly a, const ZPoly& b) {
  trimz(a);
  while (a.size() >= b.size() && !a.empty()) {
    mpz_class lead = a.back();
    std::size_t off = a.size() - b.size();
    const mpz_class& lb = b.back();
    for (auto& c : a) c *= lb;
    for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= lead * b[i];
    a.pop_back();
    trimz(a);
  }
  return a;
}

Poly gcd_poly(const Poly& pa, const Poly& pb) {
  ZPoly a = to_zpoly(pa), b = to_zpoly(pb);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    ZPoly r = primitive(prem(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  Poly g;
  if (a.empty()) return g;
  g.reserve(a.size());
  const mpz_class& lead = a.back();
  for (const auto& c : a) g.emplace_back(mpq_class(c) / mpq_class(lead));
  return g;
}

Poly div_exact(const Poly& a, const Poly& b) {
  Poly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, mpq_class(0));
  Poly r = a;
  trim(r);
  while (r.size() >= b.size() && !r.empty()) {
    mpq_class f = r.back() / b.back();
    std::size_t off = r.size() - b.size();
    q[off] = f;
    for (std::size_t i = 0; i < b.size(); ++i) r[off + i] -= f * b[i];
    r.pop_back();
    trim(r);
  }
  return q;
}

LaurentQ from_poly(const Poly& p, long shift) {
  LaurentQ r;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != 0) r += LaurentQ::monomial(static_cast<long>(i) + shift, p[i]);
  return r;
}

}  // namespace

RatFuncQ::RatFuncQ(const LaurentQ& num, const LaurentQ& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw std::domain_error("RatFuncQ: zero denominator");
  reduce();
}

void RatFuncQ::reduce() {
  if (num_.is_zero()) {
    den_ = LaurentQ(1);
    return;
  }
  long a = num_.min_exp();
  long b = den_.min_exp();
  Poly n = to_poly(num_, a);
  Poly d = to_poly(den_, b);
  Poly g = gcd_poly(n, d);
  if (g.size() > 1) {
    n = div_exact(n, g);
    d = div_exact(d, g);
  }
  // Constant term of d is nonzero by construction; scale it to 1.
  mpq_class c0 = d.front();
  for (auto& c : n) c /= c0;
  for (auto& c : d) c /= c0;
  num_ = from_poly(n, a - b);
  den_ = from_poly(d, 0);
}

RatFuncQ& RatFuncQ::operator+=(const RatFuncQ& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
    if (num_.is_zero())
      den_ = LaurentQ(1);
    else if (den_.max_exp() > 0)
      reduce();
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  reduce();
  return *this;
}

RatFuncQ& RatFuncQ::operator-=(const RatFuncQ& o) {
  if (den_ == o.den_) {
    num_ -= o.num_;
    if (num_.is_zero())
      den_ = LaurentQ(1);
    else if (den_.max_exp() > 0)
      reduce();
    return *this;
  }
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ = den_ * o.den_;
  reduce();
  return *this;
}

RatFuncQ& RatFuncQ::operator*=(const RatFuncQ& o) {
  if (is_zero() || o.is_zero()) {
    num_ = LaurentQ();
    den_ = LaurentQ(1);
    return *this;
  }
  // Laurent-polynomial fast path: nothing to cancel when both dens are 1.
  if (den_.max_exp() == 0 && o.den_.max_exp() == 0 && den_.coeff(0) == 1 && o.den_.coeff(0) == 1) {
    num_ = num_ * o.num_;
    return *this;
  }
  // Cross-reduce before multiplying: both inputs are already reduced, so the
  // only possible cancellations are num against the other den.
  RatFuncQ a = cross_reduced(num_, o.den_);
  RatFuncQ b = cross_reduced(o.num_, den_);
  num_ = a.num_ * b.num_;
  den_ = a.den_ * b.den_;
  // Renormalize the denominator constant term without another gcd.
  if (!num_.is_zero()) {
    mpq_class c0 = den_.coeff(den_.min_exp());
    long sh = den_.min_exp();
    if (sh != 0 || c0 != 1) {
      den_ = den_.shifted(-sh);
      num_ = num_.shifted(-sh);
      LaurentQ inv(1 / c0);
      den_ = den_ * inv;
      num_ = num_ * inv;
    }
  } else {
    den_ = LaurentQ(1);
  }
  return *this;
}

RatFuncQ RatFuncQ::cross_reduced(const LaurentQ& num, const LaurentQ& den) {
  RatFuncQ r;
  r.num_ = num;
  r.den_ = den;
  r.reduce();
  return r;
}

RatFuncQ& RatFuncQ::operator/=(const RatFuncQ& o) { return *this *= o.inverse(); }

RatFuncQ RatFuncQ::operator-() const {
  RatFuncQ r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

namespace {
int cmp_laurent(const LaurentQ& x, const LaurentQ& y) {
  if (x.is_zero() || y.is_zero()) return x.is_zero() ? (y.is_zero() ? 0 : -1) : 1;
  if (x.off() != y.off()) return x.off() < y.off() ? -1 : 1;
  const auto& a = x.dense();
  const auto& b = y.dense();
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    int c = mpq_cmp(a[i].get_mpq_t(), b[i].get_mpq_t());
    if (c != 0) return c;
  }
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}
}  // namespace

bool RatFuncQ::operator<(const RatFuncQ& o) const {
  int c = cmp_laurent(num_, o.num_);
  if (c != 0) return c < 0;
  return cmp_laurent(den_, o.den_) < 0;
}

RatFuncQ RatFuncQ::inverse() const {
  if (is_zero()) throw std::domain_error("RatFuncQ: inverse of zero");
  RatFuncQ r;
  r.num_ = den_;
  r.den_ = num_;
  r.reduce();
  return r;
}

RatFuncQ RatFuncQ::bar() const {
  RatFuncQ r;
  r.num_ = num_.bar();
  r.den_ = den_.bar();
  r.reduce();
  return r;
}

mpq_class RatFuncQ::eval_at(const mpq_class& s0) const {
  mpq_class d = den_.eval(s0);
  if (d == 0) throw PoleAtPoint("denominator vanishes at s = " + s0.get_str());
  return num_.eval(s0) / d;
}

std::string RatFuncQ::str() const {
  if (den_ == LaurentQ(1)) return num_.str();
  std::string n = num_.str();
  if (num_.term_count() > 1) n = "(" + n + ")";
  return n + "/(" + den_.str() + ")";
}

RatFuncQ rf_q() { return RatFuncQ::q_power(1); }
RatFuncQ rf_qinv() { return RatFuncQ::q_power(-1); }
RatFuncQ rf_qplus() { return rf_q() + rf_qinv(); }
RatFuncQ rf_qminus() { return rf_q() - rf_qinv(); }

RatFuncQ qbracket(long x) {
  return (RatFuncQ::q_power(x) - RatFuncQ::q_power(-x)) / rf_qminus();
}

RatFuncQ elementary_symmetric(std::size_t k, const std::vector<RatFuncQ>& values) {
  if (k > values.size())
    throw IndexOutOfRange("elementary_symmetric: k exceeds value count");
  // e[j] after processing i values = e_j(x_1..x_i).
  std::vector<RatFuncQ> e(k + 1, RatFuncQ(0));
  e[0] = RatFuncQ(1);
  for (const auto& x : values)
    for (std::size_t j = std::min(k, values.size()); j >= 1; --j)
      e[j] += x * e[j - 1];
  return e[k];
}

}  // namespace altq
