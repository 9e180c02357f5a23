#include "altq/spinrep.hpp"

namespace altq {

RepMatrix operator+(const RepMatrix& a, const RepMatrix& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  RepMatrix r(a.r_, a.c_);
  for (std::size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] + b.e_[i];
  return r;
}

RepMatrix operator-(const RepMatrix& a, const RepMatrix& b) {
  if (b.empty()) return a;
  if (a.empty()) {
    RepMatrix r(b.r_, b.c_);
    for (std::size_t i = 0; i < b.e_.size(); ++i) r.e_[i] = -b.e_[i];
    return r;
  }
  RepMatrix r(a.r_, a.c_);
  for (std::size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] - b.e_[i];
  return r;
}

RepMatrix operator*(const RepMatrix& a, const RepMatrix& b) {
  if (a.empty() || b.empty()) return RepMatrix();
  RepMatrix r(a.r_, b.c_);
  for (std::size_t i = 0; i < a.r_; ++i)
    for (std::size_t k = 0; k < a.c_; ++k) {
      const RatFuncQ& f = a.at(i, k);
      if (f.is_zero()) continue;
      for (std::size_t j = 0; j < b.c_; ++j) {
        const RatFuncQ& g = b.at(k, j);
        if (g.is_zero()) continue;
        r.at(i, j) += f * g;
      }
    }
  return r;
}

RepMatrix RepMatrix::scaled(const RatFuncQ& c) const {
  RepMatrix r(r_, c_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * c;
  return r;
}

bool RepMatrix::operator==(const RepMatrix& o) const {
  if (empty()) return o.is_zero();
  if (o.empty()) return is_zero();
  return r_ == o.r_ && c_ == o.c_ && e_ == o.e_;
}

RepMatrix kron(const RepMatrix& a, const RepMatrix& b) {
  if (a.empty() || b.empty()) return RepMatrix();
  RepMatrix r(a.r_ * b.r_, a.c_ * b.c_);
  for (std::size_t i = 0; i < a.r_; ++i)
    for (std::size_t j = 0; j < a.c_; ++j) {
      if (a.at(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < b.r_; ++k)
        for (std::size_t l = 0; l < b.c_; ++l)
          if (!b.at(k, l).is_zero())
            r.at(i * b.r_ + k, j * b.c_ + l) = a.at(i, j) * b.at(k, l);
    }
  return r;
}

SpinRep make_spin_rep(long twoj) {
  SpinRep rep;
  rep.twoj = twoj;
  rep.dim = static_cast<std::size_t>(twoj) + 1;
  std::size_t d = rep.dim;
  rep.sp = RepMatrix(d, d);
  rep.sm = RepMatrix(d, d);
  rep.qs3 = RepMatrix(d, d);
  rep.qs3inv = RepMatrix(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    // Basis vector i has weight m = j - i; q^{s3} entry is s^{2j - 2i}.
    rep.qs3.at(i, i) = RatFuncQ::s_power(twoj - 2 * static_cast<long>(i));
    rep.qs3inv.at(i, i) = RatFuncQ::s_power(-(twoj - 2 * static_cast<long>(i)));
  }
  for (std::size_t i = 1; i < d; ++i) rep.sp.at(i - 1, i) = qbracket(static_cast<long>(i));
  for (std::size_t i = 0; i + 1 < d; ++i)
    rep.sm.at(i + 1, i) = qbracket(twoj - static_cast<long>(i));
  return rep;
}

RatFuncQ casimir_w0(long twoj) {
  return RatFuncQ::q_power(twoj + 1) + RatFuncQ::q_power(-twoj - 1);
}

CheckReport spinrep_check(long twoj) {
  SpinRep r = make_spin_rep(twoj);
  CheckReport rep = CheckReport::pass("spinrep.2j=" + std::to_string(twoj),
                                      "U_q(sl_2) relations and Casimir eigenvalue");
  // q^{s3} S+- q^{-s3} = q^{+-1} S+-.
  bool ok1 = r.qs3 * r.sp * r.qs3inv == rf_q() * r.sp;
  bool ok2 = r.qs3 * r.sm * r.qs3inv == rf_qinv() * r.sm;
  // [S+,S-] = (q^{2s3} - q^{-2s3})/(q - q^{-1}).
  RepMatrix rhs = (r.qs3 * r.qs3 - r.qs3inv * r.qs3inv).scaled(rf_qminus().inverse());
  bool ok3 = comm(r.sp, r.sm) == rhs;
  // Casimir via both orderings.
  RatFuncQ c1 = rf_qinv(), c2 = rf_q();
  RepMatrix omega1 = (c1 * (r.qs3 * r.qs3) + c2 * (r.qs3inv * r.qs3inv))
                         .scaled((rf_qminus() * rf_qminus()).inverse()) +
                     r.sp * r.sm;
  RepMatrix omega2 = (c2 * (r.qs3 * r.qs3) + c1 * (r.qs3inv * r.qs3inv))
                         .scaled((rf_qminus() * rf_qminus()).inverse()) +
                     r.sm * r.sp;
  RepMatrix expect = RepMatrix::scalar(r.dim, casimir_w0(twoj) / (rf_qminus() * rf_qminus()));
  bool ok4 = omega1 == expect && omega2 == expect;
  rep.set(ok1 && ok2 && ok3 && ok4);
  if (!rep.passed())
    rep.note("failed", std::string(ok1 ? "" : "weight+ ") + (ok2 ? "" : "weight- ") +
                           (ok3 ? "" : "commutator ") + (ok4 ? "" : "casimir"));
  return rep;
}

}  // namespace altq
