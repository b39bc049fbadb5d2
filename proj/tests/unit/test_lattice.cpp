#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "qortho/lattice.hpp"
#include "support.hpp"

namespace qortho {
namespace {

using test::rel_diff;

constexpr Real kPi = std::numbers::pi_v<Real>;
// QParams rejects d = 0; a negligible d stands in for the a=b=c=d=0 cases.
constexpr Real kTinyD = 1e-30L;

QParams zero_params(Real q) { return QParams(QBase(q), 0, 0, 0, kTinyD, 0.5L); }

TEST(QParams, Validity) {
  EXPECT_TRUE(test::p0().satisfies_orthogonality());
  EXPECT_TRUE(test::p_complex().satisfies_orthogonality());
  EXPECT_NO_THROW(test::p0().check_orthogonality());
  // |q/d| > 1
  EXPECT_FALSE(QParams(QBase(0.5L), 0.3L, 0.2L, 0.1L, 0.4L, 0.8L).satisfies_orthogonality());
  // a lone complex parameter
  EXPECT_FALSE(QParams(QBase(0.5L), Complex(0.3L, 0.1L), 0.2L, 0.1L, 2.2L, 0.8L)
                   .satisfies_orthogonality());
  // |a| >= 1
  EXPECT_THROW(QParams(QBase(0.5L), 1.2L, 0.2L, 0.1L, 2.2L, 0.8L).check_orthogonality(), Error);
  EXPECT_THROW(QParams(QBase(0.5L), 0.3L, 0.2L, 0.1L, 2.2L, 0), Error);
  EXPECT_THROW(QParams(QBase(0.5L), 0.3L, 0.2L, 0.1L, 0, 0.8L), Error);
}

TEST(QParams, ReferenceSet) {
  const QParams s = reference_params();
  EXPECT_EQ(s.q(), 0.5L);
  EXPECT_EQ(s.a, Complex(0.3L));
  EXPECT_EQ(s.d, Complex(2.2L));
  EXPECT_EQ(s.alpha, Complex(0.8L));
  const QParams w = s.with_cd_swapped();
  EXPECT_EQ(w.c, s.d);
  EXPECT_EQ(w.d, s.c);
}

TEST(LatticePoint, ThetaEndpoints) {
  const QBase B(0.5L);
  EXPECT_NEAR(static_cast<double>(point_from_theta(0, B).x.real()), 1.0, 1e-18);
  EXPECT_NEAR(static_cast<double>(point_from_theta(kPi / 2, B).x.real()), 0.0, 1e-18);
  EXPECT_NEAR(static_cast<double>(point_from_theta(kPi, B).x.real()), -1.0, 1e-18);
}

TEST(LatticePoint, Invariants) {
  const QBase B(0.6L);
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-2, 2);
  for (int k = 0; k < 30; ++k) {
    const LatticePoint p = LatticePoint::from_z(Complex(u(rng), u(rng)), B);
    EXPECT_LT(std::abs(p.qz * B.pow(-p.z) - Real(1)), 1e-17L);
    EXPECT_LT(std::abs(p.x - (p.qz + Real(1) / p.qz) / Real(2)), 1e-17L * std::abs(p.x) + 1e-18L);
    const LatticePoint r = LatticePoint::from_qz(p.qz, B);
    EXPECT_LT(std::abs(r.x - p.x), 1e-16L * (1 + std::abs(p.x)));
  }
  for (Real th : {0.1L, 1.0L, 2.0L, 3.1L}) {
    const LatticePoint p = point_from_theta(th, B);
    EXPECT_NEAR(static_cast<double>(std::abs(p.qz)), 1.0, 1e-18);
    EXPECT_EQ(p.x.imag(), 0);
    EXPECT_LT(std::abs(LatticePoint::from_z(p.z, B).qz - p.qz), 1e-17L);
  }
}

TEST(Sigma, VanishesAtParameter) {
  const QParams s = test::p0();
  EXPECT_LT(std::abs(sigma(LatticePoint::from_qz(s.a, s.base), s)), 1e-18L);
}

TEST(Sigma, UnitAtOrigin) {
  const QParams s = zero_params(0.5L);
  EXPECT_LT(std::abs(sigma(LatticePoint::from_qz(1, s.base), s) - Real(1)), 1e-18L);
}

TEST(Tau, ZeroParams) {
  const QParams s = zero_params(0.5L);
  EXPECT_LT(std::abs(tau(0, s)), 1e-18L);
  const Real q = 0.5L;
  EXPECT_LT(std::abs(tau(1, s) - 4 * std::sqrt(q) / (1 - q)), 1e-17L);
}

// tau(x(z)) = (sigma(-z) - sigma(z)) / (x(z + 1/2) - x(z - 1/2)).
TEST(Tau, DefiningQuotient) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  for (const QParams& s : {test::p0(), test::p_complex()}) {
    for (int k = 0; k < 20; ++k) {
      const LatticePoint p = LatticePoint::from_z(Complex(u(rng), u(rng)), s.base);
      const LatticePoint m = LatticePoint::from_qz(Real(1) / p.qz, s.base);
      const Complex q = (sigma(m, s) - sigma(p, s)) /
                        (p.shifted(0.5L, s.base).x - p.shifted(-0.5L, s.base).x);
      EXPECT_LT(rel_diff(tau(p.x, s), q), 1e-12L);
    }
  }
}

TEST(NablaX1, MatchesHalfSteps) {
  const QBase B(0.5L);
  const LatticePoint p = LatticePoint::from_z(Complex(0.3L, 0.7L), B);
  EXPECT_LT(rel_diff(nabla_x1(p, B), p.shifted(0.5L, B).x - p.shifted(-0.5L, B).x), 1e-17L);
}

TEST(Lambda, ZeroAtNuZero) {
  const Eigenvalue e = lambda_nu(0, test::p0());
  EXPECT_EQ(e.lambda, Complex(0));
}

TEST(Lambda, DirectSubstitution) {
  const QParams s(QBase(0.25L), 0, 0.2L, 0.1L, 2.2L, 0.8L);  // abcd = 0
  EXPECT_LT(std::abs(lambda_nu(1, s).lambda - Real(-8) / 3), 1e-17L);
}

TEST(Lambda, ClosedForm) {
  const QParams s = test::p0();
  const Real q = s.q();
  for (Real nu : {0.3L, 1.7L, 4.2L}) {
    const Complex want = 4 * std::pow(q, 1.5L) / ((1 - q) * (1 - q)) * (Real(1) - std::pow(q, -nu)) *
                         (Real(1) - s.abcd() * std::pow(q, nu - 1));
    EXPECT_LT(rel_diff(lambda_nu(nu, s).lambda, want), 1e-17L);
  }
}

TEST(Lambda, DerivativeMatchesFiniteDifference) {
  const QParams s = test::p_complex();
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(0.1, 6);
  for (int k = 0; k < 20; ++k) {
    const Real nu = u(rng), h = 1e-5L;
    const Complex fd = (lambda_nu(nu + h, s).lambda - lambda_nu(nu - h, s).lambda) / (2 * h);
    EXPECT_LT(rel_diff(lambda_nu(nu, s).dlambda_dnu, fd), 1e-8L);
  }
}

// rho(z+1) / rho(z) = sigma(-z) / sigma(z+1), both weights.
TEST(Pearson, RatioTest) {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> u(-1.2, 1.2);
  for (const QParams& s : {test::p0(), test::p_complex()}) {
    const QBase& B = s.base;
    for (int k = 0; k < 15; ++k) {
      const LatticePoint p = LatticePoint::from_z(Complex(u(rng), u(rng)), B);
      const LatticePoint p1 = p.shifted(1, B);
      const LatticePoint m = LatticePoint::from_qz(Real(1) / p.qz, B);
      const Complex want = sigma(m, s) / sigma(p1, s);
      EXPECT_LT(rel_diff(pearson_rho(p1, s) / pearson_rho(p, s), want), 1e-10L);
      EXPECT_LT(rel_diff(pearson_rho_sec7(p1, s) / pearson_rho_sec7(p, s), want), 1e-10L);
    }
  }
}

// Delta(sigma rho) = tau rho nabla x_1, at z.
TEST(Pearson, DifferenceEquation) {
  const QParams s = test::p0();
  const QBase& B = s.base;
  for (Complex z : {Complex(0.2L, 0.5L), Complex(-0.4L, 1.1L), Complex(0.9L, -0.3L)}) {
    const LatticePoint p = LatticePoint::from_z(z, B);
    const LatticePoint p1 = p.shifted(1, B);
    const Complex lhs = sigma(p1, s) * pearson_rho(p1, s) - sigma(p, s) * pearson_rho(p, s);
    const Complex rhs = tau(p.x, s) * pearson_rho(p, s) * nabla_x1(p, B);
    EXPECT_LT(rel_diff(lhs, rhs), 1e-10L);
  }
}

// With alpha = d the alpha block cancels against (q e^{+-it}/d), leaving the
// Askey–Wilson weight over 2 i sin(t) up to a constant.
TEST(Pearson, AlphaEqualsDReduction) {
  const QParams p0 = test::p0();
  const QParams s(p0.base, p0.a, p0.b, p0.c, 0.8L, 0.8L);
  std::vector<Complex> ratios;
  for (Real th : {0.3L, 1.1L, 2.0L, 2.9L}) {
    const LatticePoint p = point_from_theta(th, s.base);
    const Complex w = p.qz, wi = Real(1) / w;
    Complex aw = pinf({w * w, wi * wi}, s.base) /
                 pinf({s.a * w, s.a * wi, s.b * w, s.b * wi, s.c * w, s.c * wi, s.d * w, s.d * wi},
                      s.base);
    ratios.push_back(pearson_rho(p, s) * (w - wi) / aw);
  }
  for (const Complex& r : ratios) EXPECT_LT(rel_diff(r, ratios.front()), 1e-14L);
}

TEST(Pearson, ContourSymmetry) {
  const QParams s = test::p0();
  for (Real th : {0.4L, 1.3L, 2.6L}) {
    const LatticePoint p = point_from_theta(th, s.base);
    const LatticePoint m = LatticePoint::from_qz(Real(1) / p.qz, s.base);
    EXPECT_LT(std::abs(std::abs(pearson_rho(p, s)) - std::abs(pearson_rho(m, s))),
              1e-15L * std::abs(pearson_rho(p, s)));
    EXPECT_LT(rel_diff(pearson_rho_sec7(p, s), pearson_rho_sec7(m, s)), 1e-15L);
  }
}

TEST(PearsonSec7, ZeroNumeratorParams) {
  const QParams s(QBase(0.5L), 0, 0, 0.1L, 2.2L, 0.8L);
  const LatticePoint p = point_from_theta(0.7L, s.base);
  const Complex w = p.qz, q = 0.5L;
  const Complex want = pinf({q * w / s.c, q / (w * s.c), q * w / s.d, q / (w * s.d)}, s.base);
  EXPECT_LT(rel_diff(pearson_rho_sec7(p, s), want), 1e-16L);
}

TEST(Wronskian, Antisymmetry) {
  const Complex u0(0.3L, 0.1L), u1(-0.2L, 0.4L), v0(1.1L, -0.5L), v1(0.7L, 0.2L);
  const Complex x0 = 0.4L, x1 = -0.1L;
  EXPECT_EQ(wronskian(u0, u1, u0, u1, x0, x1), Complex(0));
  EXPECT_LT(std::abs(wronskian(u0, u1, v0, v1, x0, x1) + wronskian(v0, v1, u0, u1, x0, x1)),
            1e-18L);
}

TEST(Wronskian, DifferenceQuotientOfIdentity) {
  const QBase B(0.5L);
  const LatticePoint p = LatticePoint::from_z(Complex(0.4L, 0.9L), B);
  const LatticePoint pm = p.shifted(-1, B);
  EXPECT_LT(std::abs(wronskian(1, 1, p.x, pm.x, p.x, pm.x) - Real(1)), 1e-17L);
}

TEST(Wronskian, DegenerateStep) {
  try {
    wronskian(1, 2, 3, 4, 0.5L, 0.5L);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::degenerate_step);
  }
}

}  // namespace
}  // namespace qortho
