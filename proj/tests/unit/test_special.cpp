#include <gtest/gtest.h>

#include <numbers>

#include "qortho/quad.hpp"
#include "qortho/special.hpp"
#include "qortho/u8.hpp"
#include "support.hpp"

namespace qortho {
namespace {

using test::rel_diff;

constexpr Real kPi = std::numbers::pi_v<Real>;
constexpr Real kSmall = 1e-6L;

const QBase B(0.5L);
const Complex a = 0.3L, b = 0.2L, c = 2.2L;

// Largest relative spread of a list of ratios that should be constant.
Real spread(const std::vector<Complex>& r) {
  Real worst = 0;
  for (const Complex& x : r) worst = std::max(worst, rel_diff(x, r.front()));
  return worst;
}

TEST(Ladder, NuZeroIsOne) {
  for (Real th : {0.4L, 1.3L, 2.5L}) {
    const LatticePoint p = point_from_theta(th, B);
    EXPECT_LT(std::abs(dual_qhahn_u(0, p, a, b, c, B) - Real(1)), 1e-14L);
    EXPECT_LT(std::abs(dual_qhahn_u_pair(0, p, a, b, c, B) - Real(1)), 1e-12L);
    EXPECT_LT(std::abs(al_salam_chihara_u(0, p, a, c, B) - Real(1)), 1e-14L);
    EXPECT_LT(std::abs(big_qhermite_u(0, p, c, B) - Real(1)), 1e-14L);
    EXPECT_LT(std::abs(qhermite_H(0, p, B) - Real(1)), 1e-14L);
  }
}

// Each family is the small-parameter limit of its parent; at 1e-6 the
// deviation is first order in that parameter.
TEST(Ladder, Continuity) {
  for (Real nu : {0.6L, 1.7L}) {
    for (Real th : {0.4L, 1.3L, 2.5L}) {
      const LatticePoint p = point_from_theta(th, B);
      const Complex dq = dual_qhahn_u(nu, p, a, b, c, B);
      const Complex asc = al_salam_chihara_u(nu, p, a, c, B);
      EXPECT_LT(rel_diff(u_nu(nu, p, QParams(B, a, b, kSmall, c, 0.8L)), dq), 1e-4L);
      EXPECT_LT(rel_diff(dual_qhahn_u(nu, p, a, kSmall, c, B), asc), 1e-4L);
      EXPECT_LT(rel_diff(al_salam_chihara_u(nu, p, kSmall, c, B), big_qhermite_u(nu, p, c, B)),
                1e-4L);
    }
  }
}

TEST(DualQHahn, SingleMatchesPair) {
  for (Real nu : {0.4L, 1.3L, 2.8L}) {
    for (Real th : {0.5L, 1.6L, 2.9L}) {
      const LatticePoint p = point_from_theta(th, B);
      EXPECT_LT(rel_diff(dual_qhahn_u(nu, p, a, b, c, B), dual_qhahn_u_pair(nu, p, a, b, c, B)),
                1e-9L);
    }
  }
}

TEST(DualQHahn, BoundaryMatchesDefinition) {
  const Real alpha = 0.8L, nu = 1.4L;
  const LatticePoint p = LatticePoint::from_qz(alpha, B);
  const Complex want =
      pinf({B.q() * p.qz / c, B.q() / (p.qz * c)}, B) * dual_qhahn_u(nu, p, a, b, c, B);
  EXPECT_LT(rel_diff(dual_qhahn_boundary(nu, a, b, c, alpha, B), want), 1e-12L);
}

TEST(AlSalamChihara, SingleMatchesPair) {
  for (Real nu : {0.4L, 1.3L, 2.8L}) {
    for (Real th : {0.5L, 1.6L, 2.9L}) {
      const LatticePoint p = point_from_theta(th, B);
      EXPECT_LT(rel_diff(al_salam_chihara_u(nu, p, a, c, B),
                         al_salam_chihara_u_pair(nu, p, a, c, B)),
                1e-9L);
    }
  }
}

TEST(AlSalamChihara, BoundaryMatchesDefinition) {
  const Real alpha = 0.8L, nu = 2.3L;
  const LatticePoint p = LatticePoint::from_qz(alpha, B);
  const Complex want =
      pinf({B.q() * p.qz / c, B.q() / (p.qz * c)}, B) * al_salam_chihara_u(nu, p, a, c, B);
  EXPECT_LT(rel_diff(al_salam_chihara_boundary(nu, a, c, alpha, B), want), 1e-12L);
}

TEST(BigQHermite, BoundaryMatchesDefinition) {
  const Real alpha = 0.8L, nu = 1.1L;
  const LatticePoint p = LatticePoint::from_qz(alpha, B);
  const Complex want =
      pinf({B.q() * p.qz / c, B.q() / (p.qz * c)}, B) * big_qhermite_u(nu, p, c, B);
  EXPECT_LT(rel_diff(big_qhermite_boundary(nu, c, alpha, B), want), 1e-12L);
}

// At integer nu each family is a constant multiple of its polynomial.
TEST(Ladder, IntegerRatiosConstant) {
  for (int n : {1, 2, 3}) {
    std::vector<Complex> rd, ra, rb;
    for (Real th : {0.3L, 1.2L, 2.4L}) {
      const LatticePoint p = point_from_theta(th, B);
      rd.push_back(dual_qhahn_u(n, p, a, b, c, B) / dual_qhahn_poly(n, p, a, b, c, B));
      ra.push_back(al_salam_chihara_u(n, p, a, c, B) / al_salam_chihara_poly(n, p, a, c, B));
      rb.push_back(big_qhermite_u(n, p, c, B) / big_qhermite_poly(n, p, c, B));
    }
    EXPECT_LT(spread(rd), 1e-10L) << n;
    EXPECT_LT(spread(ra), 1e-10L) << n;
    EXPECT_LT(spread(rb), 1e-10L) << n;
  }
}

TEST(QHermite, EvenInZ) {
  for (Real nu : {0.7L, 2.2L}) {
    const LatticePoint p = LatticePoint::from_z(Complex(0.3L, 0.8L), B);
    const LatticePoint m = LatticePoint::from_z(-p.z, B);
    EXPECT_LT(rel_diff(qhermite_H(nu, p, B), qhermite_H(nu, m, B)), 1e-13L);
  }
}

TEST(QHermite, EvenDegreeProportional) {
  for (int n : {2, 4}) {
    std::vector<Complex> r;
    for (Real th : {0.3L, 1.2L, 2.4L}) {
      const LatticePoint p = point_from_theta(th, B);
      r.push_back(qhermite_H(n, p, B) / qhermite_poly(n, p, B));
    }
    EXPECT_LT(spread(r), 1e-10L) << n;
  }
}

// For odd n the ratio is only periodic in z with period 1.
TEST(QHermite, OddDegreePeriodicRatio) {
  for (int n : {1, 3}) {
    for (Real th : {0.4L, 1.9L}) {
      const LatticePoint p = LatticePoint::from_z(Complex(0.2L, 0) + point_from_theta(th, B).z, B);
      const LatticePoint s = p.shifted(1, B);
      EXPECT_LT(rel_diff(qhermite_H(n, p, B) / qhermite_poly(n, p, B),
                         qhermite_H(n, s, B) / qhermite_poly(n, s, B)),
                1e-10L);
    }
  }
}

TEST(QBessel, ZeroArgument) {
  const LatticePoint p = point_from_theta(0.9L, B);
  EXPECT_LT(std::abs(qbessel_J(0, p, 0, B) - Real(1)), 1e-15L);
  EXPECT_EQ(qbessel_J(0.5L, p, 0, B), Complex(0));
}

TEST(QBessel, HeineMatchesDirect) {
  for (Real th : {0.5L, 2.0L}) {
    const LatticePoint p = point_from_theta(th, B);
    for (Complex t : {Complex(0.3L), Complex(-0.4L), Complex(0.1L, 0.35L)}) {
      EXPECT_LT(rel_diff(qbessel_J_t(0.5L, p, t, B), qbessel_J_t_direct(0.5L, p, t, B)), 1e-14L);
    }
  }
}

TEST(QBessel, PowerPrefactor) {
  const LatticePoint p = point_from_theta(1.1L, B);
  const Complex r(0, 1.6L);
  const Complex t = -r * r / Real(4);
  EXPECT_LT(rel_diff(qbessel_J(0.5L, p, r, B), std::pow(r / Real(2), Complex(0.5L)) *
                                                   qbessel_J_t(0.5L, p, t, B)),
            1e-15L);
}

// Zeros in t at the boundary point q^z = q^alpha, then orthogonality
// against qbessel_weight on the contour.
TEST(QBessel, OrthogonalAtZeros) {
  const Real nu = 0.5L, alpha = 0.3L;
  const LatticePoint edge = LatticePoint::from_qz(std::pow(B.q(), alpha), B);
  const auto roots =
      scan_roots([&](Real t) { return qbessel_J_t(nu, edge, t, B).real(); }, 0.05L, 8, 2);
  ASSERT_EQ(roots.size(), 2u);
  EXPECT_NEAR(static_cast<double>(roots[0].x), 1.2395, 1e-4);
  EXPECT_NEAR(static_cast<double>(roots[1].x), 2.5762, 1e-4);
  auto J = [&](Real th, Real t) { return qbessel_J_t(nu, point_from_theta(th, B), t, B).real(); };
  auto inner = [&](Real s, Real t) {
    return integrate([&](Real th) { return J(th, s) * J(th, t) * qbessel_weight(th, nu, alpha, B); })
        .value;
  };
  const Real t0 = roots[0].x, t1 = roots[1].x;
  const Real n0 = inner(t0, t0), n1 = inner(t1, t1);
  EXPECT_GT(n0, 0);
  EXPECT_GT(n1, 0);
  EXPECT_LE(std::abs(inner(t0, t1)), 1e-5L * std::sqrt(n0 * n1));
}

TEST(QBessel, WeightRejectsEndpoints) {
  EXPECT_THROW(qbessel_weight(0, 0.5L, 0.3L, B), Error);
  EXPECT_GT(qbessel_weight(1.0L, 0.5L, 0.3L, B), 0);
}

TEST(QTrig, ZeroFrequency) {
  for (Real x : {-0.7L, 0.3L, 0.9L}) {
    EXPECT_LT(std::abs(qtrig_C(x, 0, B) - 1), 1e-15L);
    EXPECT_EQ(qtrig_S(x, 0, B), 0);
  }
}

TEST(QTrig, RootsAreZerosOfS) {
  const auto roots = qtrig_roots(3, B);
  ASSERT_EQ(roots.size(), 3u);
  const Real xb = qtrig_boundary_x(B);
  for (std::size_t k = 0; k < roots.size(); ++k) {
    const Real nearby = std::abs(qtrig_S(xb, roots[k] + 0.01L, B));
    EXPECT_LE(std::abs(qtrig_S(xb, roots[k], B)), 1e-10L * nearby);
    if (k > 0) EXPECT_GT(roots[k], roots[k - 1]);
  }
}

TEST(QTrig, OrthogonalAtRoots) {
  const auto roots = qtrig_roots(2, B);
  auto ip = [&](auto f, auto g) {
    return integrate([&](Real th) { return f(th) * g(th) * qtrig_weight(th, B); }).value;
  };
  auto C = [&](Real om) {
    return [&, om](Real th) { return qtrig_C_at(point_from_theta(th, B), om, B).real(); };
  };
  auto S = [&](Real om) {
    return [&, om](Real th) { return qtrig_S_at(point_from_theta(th, B), om, B).real(); };
  };
  const Real c0 = ip(C(roots[0]), C(roots[0])), c1 = ip(C(roots[1]), C(roots[1]));
  EXPECT_LE(std::abs(ip(C(roots[0]), C(roots[1]))), 1e-10L * std::sqrt(c0 * c1));
  EXPECT_LE(std::abs(ip(S(roots[0]), S(roots[1]))), 1e-10L * std::sqrt(c0 * c1));
  EXPECT_LE(std::abs(ip(C(roots[0]), S(roots[1]))), 1e-10L * std::sqrt(c0 * c1));
  // Same norm for C and S at a root.
  EXPECT_LT(rel_diff(ip(S(roots[0]), S(roots[0])), c0), 1e-8L);
}

TEST(QTrig, DiagonalMatchesQuadrature) {
  for (Real om : qtrig_roots(2, B)) {
    const Real quad = integrate([&](Real th) {
                        const Real v = qtrig_C_at(point_from_theta(th, B), om, B).real();
                        return v * v * qtrig_weight(th, B);
                      }).value;
    EXPECT_LT(rel_diff(quad, qtrig_diagonal(om, B)), 1e-6L);
  }
}

TEST(QTrig, WeightPositive) {
  for (Real th = 0.05L; th < kPi; th += 0.2L) EXPECT_GT(qtrig_weight(th, B), 0);
}

}  // namespace
}  // namespace qortho
