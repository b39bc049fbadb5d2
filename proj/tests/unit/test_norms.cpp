#include <gtest/gtest.h>

#include <random>

#include "qortho/aw.hpp"
#include "qortho/norms.hpp"
#include "qortho/u8.hpp"
#include "qortho/zerofind.hpp"
#include "support.hpp"

namespace qortho {
namespace {

using test::rel_diff;

QParams swap_ab(const QParams& s) { return QParams(s.base, s.b, s.a, s.c, s.d, s.alpha); }

Real first_zero(const QParams& s) { return find_zeros(s, 1).front().nu; }

TEST(INGamma, SymmetricInAB) {
  const QParams s = test::p0();
  for (int n : {0, 2}) {
    EXPECT_LT(rel_diff(i_n_gamma(n, s.c, 0.7L, s), i_n_gamma(n, s.c, 0.7L, swap_ab(s))), 1e-12L);
  }
}

TEST(INGamma, QuadratureOracle) {
  const QParams s = test::p0();
  for (int n : {0, 1}) {
    for (Real nu : {0.3L, 0.8L}) {
      const Complex closed = i_n_gamma(n, s.c, nu, s);
      EXPECT_LT(rel_diff(closed, i_n_gamma_quad(n, s.c.real(), nu, s)), 1e-7L);
    }
  }
}

TEST(NormClosed, SymmetricInAB) {
  const QParams s = test::p0();
  for (Real nu : {1.2L, 2.9L}) {
    EXPECT_LT(rel_diff(norm_sq_closed(nu, s), norm_sq_closed(nu, swap_ab(s))), 1e-14L);
  }
}

TEST(NormClosed, MatchesQuadratureAtFirstZero) {
  const QParams s = test::p0();
  const Real nu = first_zero(s);
  const Real quad = ortho_integral(nu, nu, s).value;
  EXPECT_LT(rel_diff(norm_sq_closed(nu, s), quad), 1e-6L);
}

// 31.6023513154413: closed form at the first zero of P0, frozen after
// agreeing with quadrature and with the limit form.
TEST(NormClosed, FrozenFirstZero) {
  const QParams s = test::p0();
  EXPECT_NEAR(static_cast<double>(norm_sq_closed(first_zero(s), s)), 31.6023513154413, 1e-10);
}

// With alpha = d the weight for v_n^2 is the Askey–Wilson weight times u_n^2,
// and u_n is a multiple of p_n, so the squared norm is scale^2 aw_norm(n, n).
TEST(NormClosed, IntegerAgainstAskeyWilson) {
  const QParams s(QBase(0.5L), 0.3L, 0.2L, 0.1L, 0.8L, 0.8L);
  const QBase& B = s.base;
  const Real q = s.q();
  for (int n : {1, 2, 3}) {
    const Complex scale = pinf(s.b * s.c * std::pow(q, n), B) *
                          pinf(std::pow(q, 1 - n) / (s.a * s.d), B) /
                          pinf({s.b * s.c, q / (s.a * s.d)}, B) * std::pow(s.a, Real(n)) /
                          pn({s.a * s.b, s.a * s.c, s.a * s.d}, B, n);
    const Real want = std::norm(scale) * aw_norm(n, n, s);
    EXPECT_LT(rel_diff(ortho_integral(n, n, s).value, want), 1e-10L) << n;
    EXPECT_LT(rel_diff(norm_sq_closed(n, s), want), 1e-8L) << n;
  }
}

TEST(NormRhs, MatchesQuadratureAndClosed) {
  const QParams s = test::p0();
  const Real nu = first_zero(s);
  const Real rhs = norm_sq_rhs(nu, s);
  EXPECT_GT(rhs, 0);
  EXPECT_LT(rel_diff(rhs, ortho_integral(nu, nu, s).value), 1e-5L);
  EXPECT_LT(rel_diff(rhs, norm_sq_closed(nu, s)), 1e-5L);
}

TEST(NormRhs, PositiveAtZeros) {
  const QParams s = test::p0();
  for (const auto& z : find_zeros(s, 5)) EXPECT_GT(norm_sq_rhs(z.nu, s), 0);
}

TEST(NormRhs, PrefactorSign) { EXPECT_LT(identity_prefactor(test::p0()), 0); }

TEST(WronskianClosed, VanishesAtIntegers) {
  const QParams s = test::p1();
  const LatticePoint p = point_from_theta(0.9L, s.base);
  for (int n : {0, 1, 3}) EXPECT_EQ(std::abs(wronskian_closed(n, p, s)), 0) << n;
}

TEST(WronskianClosed, LatticeAgreement) {
  const QParams s = test::p1();
  std::mt19937_64 rng(53);
  std::uniform_real_distribution<double> dth(0.1, 3.0);
  for (int k = 0; k < 5; ++k) {
    EXPECT_LE(wronskian_identity_residual(1.5L, point_from_theta(dth(rng), s.base), s), 1e-8L);
  }
  std::uniform_real_distribution<double> dnu(0.1, 6.0);
  for (int k = 0; k < 10; ++k) {
    EXPECT_LE(wronskian_identity_residual(dnu(rng), point_from_theta(dth(rng), s.base), s), 1e-8L);
  }
}

// The closed form against a hardware-float lattice Wronskian at small nu,
// where that route is still accurate; u for (a,b,c;d), v for (a,b,d;c).
TEST(WronskianClosed, HardwareFloatRoute) {
  const QParams s = test::p1();
  const QParams t = s.with_cd_swapped();
  const LatticePoint p = point_from_theta(1.3L, s.base);
  const LatticePoint pm = p.shifted(-1, s.base);
  const Real nu = 1.5L;
  const Complex w = wronskian(u_nu(nu, p, s, Representation::C_sym),
                              u_nu(nu, pm, s, Representation::C_sym),
                              u_nu(nu, p, t, Representation::B_43pair),
                              u_nu(nu, pm, t, Representation::B_43pair), p.x, pm.x);
  EXPECT_LT(rel_diff(w, wronskian_closed(nu, p, s)), 1e-8L);
}

TEST(MainIdentity, ZerosGiveZero) {
  const QParams s = test::p0();
  const auto z = find_zeros(s, 2);
  const IdentityCheck c = main_identity(z[0].nu, z[1].nu, s);
  const Real scale = std::sqrt(norm_sq_closed(z[0].nu, s) * norm_sq_closed(z[1].nu, s));
  EXPECT_LT(std::abs(c.lhs), 1e-8L * scale);
  EXPECT_LT(std::abs(c.rhs), 1e-8L * scale);
}

TEST(MainIdentity, NonZeroPairs) {
  const QParams s = test::p0();
  EXPECT_LE(main_identity_residual(0, 1.3L, s), 1e-6L);
  EXPECT_LE(main_identity_residual(1, 2, s), 1e-6L);
  EXPECT_LE(main_identity_residual(0.7L, 3.1L, s), 1e-6L);
}

TEST(MainIdentity, RhsSymmetric) {
  const QParams s = test::p0();
  EXPECT_LT(rel_diff(main_identity_rhs(0.4L, 2.2L, s), main_identity_rhs(2.2L, 0.4L, s)), 1e-15L);
}

}  // namespace
}  // namespace qortho
