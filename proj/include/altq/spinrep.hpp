#ifndef ALTQ_SPINREP_HPP
#define ALTQ_SPINREP_HPP

#include <vector>

#include "altq/ratfunc.hpp"
#include "altq/report.hpp"

namespace altq {

// Dense matrix over the exact scalar field.  A default-constructed (0x0)
// matrix acts as a universal zero for the series containers.
class RepMatrix {
 public:
  RepMatrix() = default;
  RepMatrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), e_(rows * cols) {}
  static RepMatrix identity(std::size_t n) {
    RepMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = RatFuncQ(1);
    return m;
  }
  static RepMatrix scalar(std::size_t n, const RatFuncQ& c) {
    RepMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = c;
    return m;
  }

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  bool empty() const { return r_ == 0; }
  RatFuncQ& at(std::size_t i, std::size_t j) { return e_[i * c_ + j]; }
  const RatFuncQ& at(std::size_t i, std::size_t j) const { return e_[i * c_ + j]; }

  bool is_zero() const {
    for (const auto& x : e_)
      if (!x.is_zero()) return false;
    return true;
  }

  friend RepMatrix operator+(const RepMatrix& a, const RepMatrix& b);
  friend RepMatrix operator-(const RepMatrix& a, const RepMatrix& b);
  friend RepMatrix operator*(const RepMatrix& a, const RepMatrix& b);
  RepMatrix scaled(const RatFuncQ& c) const;
  friend RepMatrix operator*(const RatFuncQ& c, const RepMatrix& m) { return m.scaled(c); }
  bool operator==(const RepMatrix& o) const;

  friend RepMatrix kron(const RepMatrix& a, const RepMatrix& b);

 private:
  std::size_t r_ = 0, c_ = 0;
  std::vector<RatFuncQ> e_;
};

inline RepMatrix comm(const RepMatrix& a, const RepMatrix& b) { return a * b - b * a; }

// Spin-j irreducible representation with exact entries: weight basis ordered
// j, j-1, ..., -j; S+ on the superdiagonal with entries [i], S- on the
// subdiagonal with entries [2j-i], q^{s3} = diag(q^{j-i}).
struct SpinRep {
  long twoj = 0;  // 2j
  std::size_t dim = 0;
  RepMatrix sp, sm, qs3, qs3inv;
};

SpinRep make_spin_rep(long twoj);

// w0^{(j)} = q^{2j+1} + q^{-2j-1}; the Casimir acts as w0/(q-q^{-1})^2.
RatFuncQ casimir_w0(long twoj);

// Exact verification of the defining relations and the Casimir eigenvalue.
CheckReport spinrep_check(long twoj);

}  // namespace altq

#endif
