#include "doctest.h"

#include <random>

#include "altq/ratfunc.hpp"

using namespace altq;

namespace {

std::mt19937 rng(20240817);

RatFuncQ random_ratfunc() {
  std::uniform_int_distribution<int> nterm(1, 3), expo(-4, 4), val(-5, 5);
  LaurentQ num, den;
  for (int i = 0, n = nterm(rng); i < n; ++i)
    num += LaurentQ::monomial(expo(rng), val(rng));
  while (den.is_zero())
    for (int i = 0, n = nterm(rng); i < n; ++i)
      den += LaurentQ::monomial(expo(rng), val(rng));
  if (num.is_zero()) num = LaurentQ(1);
  return RatFuncQ(num, den);
}

}  // namespace

TEST_CASE("qbracket small values") {
  CHECK(qbracket(0).is_zero());
  CHECK(qbracket(1) == RatFuncQ(1));
  CHECK(qbracket(2) == rf_q() + rf_qinv());
  CHECK(qbracket(3) == RatFuncQ::q_power(2) + RatFuncQ(1) + RatFuncQ::q_power(-2));
  // [x] is a Laurent polynomial: reduced denominator is 1.
  for (long x = -6; x <= 6; ++x) CHECK(qbracket(x).den() == LaurentQ(1));
}

TEST_CASE("qbracket is odd") {
  for (long x = 0; x <= 8; ++x) CHECK(qbracket(-x) == -qbracket(x));
}

TEST_CASE("eval_at spot checks") {
  CHECK((rf_q() + rf_qinv()).eval_at(1) == 2);
  CHECK_THROWS_AS(rf_qminus().inverse().eval_at(1), PoleAtPoint);
  // [3]_q at q = 4 (s = 2): 16 + 1 + 1/16 = 273/16.
  CHECK(qbracket(3).eval_at(2) == mpq_class(273, 16));
}

TEST_CASE("eval_at respects ring operations") {
  for (int i = 0; i < 40; ++i) {
    RatFuncQ a = random_ratfunc(), b = random_ratfunc();
    mpq_class s0(3, 2);
    mpq_class ea, eb;
    try {
      ea = a.eval_at(s0);
      eb = b.eval_at(s0);
    } catch (const PoleAtPoint&) {
      continue;
    }
    CHECK((a + b).eval_at(s0) == ea + eb);
    CHECK((a * b).eval_at(s0) == ea * eb);
  }
}

TEST_CASE("canonical form independent of construction order") {
  for (int i = 0; i < 40; ++i) {
    RatFuncQ a = random_ratfunc(), b = random_ratfunc(), c = random_ratfunc();
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("canonical denominator normalization") {
  // 1/(q - q^{-1}) = s^2/(s^4 - 1): den constant term 1, no negative powers.
  RatFuncQ f = rf_qminus().inverse();
  CHECK(f.den().min_exp() == 0);
  CHECK(f.den().coeff(0) == 1);
  // Same value built two different ways compares equal syntactically.
  RatFuncQ g = RatFuncQ(LaurentQ(1), LaurentQ::monomial(2) - LaurentQ::monomial(-2));
  CHECK(f == g);
}

TEST_CASE("division and inverse") {
  for (int i = 0; i < 30; ++i) {
    RatFuncQ a = random_ratfunc();
    if (a.is_zero()) continue;
    CHECK(a * a.inverse() == RatFuncQ(1));
    RatFuncQ b = random_ratfunc();
    if (b.is_zero()) continue;
    CHECK((a / b) * b == a);
  }
}

TEST_CASE("bar involution (q -> q^{-1})") {
  for (int i = 0; i < 30; ++i) {
    RatFuncQ a = random_ratfunc();
    CHECK(a.bar().bar() == a);
  }
  CHECK(rf_q().bar() == rf_qinv());
  CHECK(rf_qminus().bar() == -rf_qminus());
}

TEST_CASE("elementary symmetric polynomials") {
  RatFuncQ a = rf_q(), b = rf_qinv(), c = RatFuncQ(3);
  CHECK(elementary_symmetric(0, {a, b}) == RatFuncQ(1));
  CHECK(elementary_symmetric(1, {a, b}) == a + b);
  CHECK(elementary_symmetric(2, {a, b, c}) == a * b + a * c + b * c);
  CHECK(elementary_symmetric(3, {a, b, c}) == a * b * c);
  CHECK_THROWS_AS(elementary_symmetric(3, {a, b}), IndexOutOfRange);
  // Newton-style sanity: prod (x + x_i) = sum e_k x^{n-k}.
  RatFuncQ x(7);
  RatFuncQ prod = (x + a) * (x + b) * (x + c);
  RatFuncQ sum(0);
  for (std::size_t k = 0; k <= 3; ++k) {
    RatFuncQ xp(1);
    for (std::size_t i = 0; i < 3 - k; ++i) xp *= x;
    sum += elementary_symmetric(k, {a, b, c}) * xp;
  }
  CHECK(prod == sum);
}
