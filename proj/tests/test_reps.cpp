#include "doctest.h"

#include "altq/dress.hpp"

using namespace altq;

namespace {

DressConfig config_n1() {
  DressConfig c;
  c.twoj = {1};
  c.v = {RatFuncQ(1)};
  return c;
}

DressConfig config_n2() {
  DressConfig c;
  c.twoj = {1, 1};
  c.v = {RatFuncQ(1), RatFuncQ(2)};
  return c;
}

DressConfig config_n2_mixed() {
  DressConfig c;
  c.twoj = {1, 2};
  c.v = {RatFuncQ(1), RatFuncQ(3)};
  return c;
}

}  // namespace

TEST_CASE("spin representations satisfy the defining relations exactly") {
  for (long twoj : {1L, 2L, 3L}) {
    auto rep = spinrep_check(twoj);
    CHECK(rep.passed());
  }
}

TEST_CASE("Lax exchange relations hold for j = 1/2 and j = 1") {
  CHECK(lax_exchange_check(1).passed());
  CHECK(lax_exchange_check(2).passed());
}

TEST_CASE("seed K0 satisfies the matrix equation for several parameter sets") {
  CHECK(fm_residual_is_zero(seed_K0(FMParams::standard()), 1));
  CHECK(fm_residual_is_zero(seed_K0(FMParams(RatFuncQ(1), RatFuncQ(1), RatFuncQ(1), RatFuncQ(0))), 1));
  // eps = 0 on both sides: constant off-diagonal seed.
  CHECK(fm_residual_is_zero(seed_K0(FMParams(RatFuncQ(2), -rf_q(), RatFuncQ(0), RatFuncQ(0))), 1));
}

TEST_CASE("invalid configurations are rejected") {
  DressConfig c;
  CHECK_THROWS_AS(c.validate(), ConfigInvalid);
  c = config_n1();
  c.v[0] = RatFuncQ(0);
  CHECK_THROWS_AS(dress(c), ConfigInvalid);
  CHECK_THROWS_AS(FMParams(RatFuncQ(0), RatFuncQ(1)), std::invalid_argument);
}

TEST_CASE("N=1 operators match the printed expressions") {
  DressConfig c = config_n1();
  auto ops = alt_ops(c, 0);
  SpinRep r = make_spin_rep(1);
  const FMParams& p = c.params;
  RatFuncQ sqrtq = RatFuncQ::s_power(1);
  // W0^{(1)} = k+ v1 q^{1/2} S+ q^{s3} + eps+ q^{2s3}.
  RepMatrix w0 = (p.k_plus * c.v[0] * sqrtq) * (r.sp * r.qs3) + p.eps_plus * (r.qs3 * r.qs3);
  CHECK(ops.at(symWminus(0)) == w0);
  // W1^{(1)} = k- v1 q^{1/2} S- q^{-s3} + eps- q^{-2s3}.
  RepMatrix w1 = (p.k_minus * c.v[0] * sqrtq) * (r.sm * r.qs3inv) + p.eps_minus * (r.qs3inv * r.qs3inv);
  CHECK(ops.at(symWplus(1)) == w1);
  // G1^{(1)} per the printed formula.
  RatFuncQ w0j = casimir_w0(1);
  RepMatrix g1 = (p.k_plus * p.k_minus * c.v[0] * c.v[0] / rf_qminus()) *
                     (RepMatrix::scalar(r.dim, w0j) - rf_qplus() * (r.qs3 * r.qs3)) +
                 ((rf_q() * rf_q() - RatFuncQ::q_power(-2)) * p.k_minus * p.eps_plus * c.v[0] /
                  sqrtq) *
                     (r.sm * r.qs3) +
                 RepMatrix::scalar(r.dim, rf_qminus() * p.eps_plus * p.eps_minus);
  CHECK(ops.at(symG(1)) == g1);
}

TEST_CASE("zero-index conventions: G_0 scalar differs from W-family zeroes") {
  // The recursion's k = 0 placeholders: W_k|_{k=0} = 0 is implicit in the
  // construction; G_k|_{k=0} = rho/(q - q^{-1}).  Check via a (wg1a) index-0
  // instance in the representation: [W_{-1}, G_0]_q = rho W_{-1}.
  DressConfig c = config_n1();
  auto ops = alt_ops(c, 1);
  std::size_t dim = c.total_dim();
  RepMatrix g0 = RepMatrix::scalar(dim, g0_scalar(c.params));
  RepMatrix lhs = rf_q() * (ops.at(symWminus(1)) * g0) - rf_qinv() * (g0 * ops.at(symWminus(1)));
  CHECK(lhs == c.params.rho_bar * ops.at(symWminus(1)));
}

TEST_CASE("dressed K satisfies the matrix equation exactly") {
  for (const auto& c : {config_n1(), config_n2()}) {
    auto K = dress(c);
    CHECK(fm_residual_is_zero(K, c.total_dim()));
  }
}

TEST_CASE("dress equals closed form entrywise") {
  CHECK(dress_vs_closed_form(config_n1()).passed());
  CHECK(dress_vs_closed_form(config_n2()).passed());
  CHECK(dress_vs_closed_form(config_n2_mixed()).passed());
}

TEST_CASE("f_N^{(N)} is the constant (q+q^{-1})^{N-1}") {
  DressConfig c = config_n2();
  CHECK(f_poly_coeff(c, 2, 2) == rf_qplus());
  DressConfig c1 = config_n1();
  CHECK(f_poly_coeff(c1, 1, 1) == RatFuncQ(1));
}

TEST_CASE("linear relations vanish for p <= 3, up to three tensor legs") {
  CHECK(linear_relations_check(config_n1(), 3).passed());
  CHECK(linear_relations_check(config_n2(), 3).passed());
  DressConfig n3;
  n3.twoj = {1, 1, 1};
  n3.v = {RatFuncQ(1), RatFuncQ(2), RatFuncQ(3)};
  CHECK(linear_relations_check(n3, 3).passed());
  // The three-leg dressed solution also matches its closed form and solves
  // the matrix equation.
  CHECK(dress_vs_closed_form(n3).passed());
  CHECK(fm_residual_is_zero(dress(n3), n3.total_dim()));
}

TEST_CASE("all defining and derived relations annihilate in the representations") {
  CHECK(relations_in_rep(config_n1(), 3).passed());
  CHECK(relations_in_rep(config_n2(), 3).passed());
  CHECK(relations_in_rep(config_n2_mixed(), 2).passed());
}

TEST_CASE("gamma commutes with the dressed generators") {
  CHECK(gamma_commutes_in_rep(config_n1(), 2).passed());
  CHECK(gamma_commutes_in_rep(config_n2(), 2).passed());
}
