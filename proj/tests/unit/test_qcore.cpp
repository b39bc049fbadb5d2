#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

#include "qortho/extended.hpp"
#include "qortho/qcore.hpp"
#include "support.hpp"

namespace qortho {
namespace {

using test::product_oracle;
using test::rel_diff;

TEST(QBase, RejectsOutOfRange) {
  for (Real q : {Real(0), Real(-0.5L), Real(1), Real(1.5L), std::numeric_limits<Real>::quiet_NaN()}) {
    try {
      QBase b(q);
      FAIL() << "accepted q=" << static_cast<double>(q);
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::invalid_base);
    }
  }
  EXPECT_NO_THROW(QBase(0.5L));
}

TEST(QBase, PowMatchesExp) {
  const QBase b(0.3L);
  EXPECT_NEAR(static_cast<double>(b.pow(Real(2))), 0.09, 1e-16);
  EXPECT_LT(rel_diff(b.pow(Complex(0.5L, 1)), std::exp(Complex(0.5L, 1) * std::log(Real(0.3L)))),
            1e-17L);
  EXPECT_NEAR(static_cast<double>(b.squared().q()), 0.09, 1e-16);
}

TEST(Qpoch, EmptyProduct) {
  const QBase b(0.5L);
  EXPECT_EQ(qpoch(Complex(7.3L, -2), b, 0), Complex(1));
}

TEST(Qpoch, ThreeFactors) {
  EXPECT_NEAR(static_cast<double>(qpoch(0.5L, QBase(0.5L), 3).real()), 0.328125, 1e-17);
}

TEST(Qpoch, VanishingFirstFactor) { EXPECT_EQ(qpoch(1.0L, QBase(0.5L), 2), Complex(0)); }

TEST(Qpoch, NegativeLengthRejected) {
  EXPECT_THROW(qpoch(0.5L, QBase(0.5L), -1), Error);
}

TEST(QpochInf, ZeroArgument) {
  const auto r = qpoch_inf(0, QBase(0.9L));
  EXPECT_EQ(r.value, Complex(1));
  EXPECT_TRUE(r.converged);
}

// (0.5; 0.5)_inf from a naive product run to |a q^k| < 1e-22, frozen.
TEST(QpochInf, EulerProductFrozen) {
  constexpr long double kFrozen = 0.28878809508660242128L;
  EXPECT_LT(std::abs(product_oracle(0.5L, 0.5L).real() - kFrozen), 1e-18L);
  const auto r = qpoch_inf(0.5L, QBase(0.5L));
  EXPECT_LT(std::abs(r.value.real() - kFrozen), 1e-18L);
}

TEST(QpochInf, QuarterAgainstOracle) {
  const auto r = qpoch_inf(0.25L, QBase(0.5L));
  EXPECT_LT(rel_diff(r.value, product_oracle(0.25L, 0.5L)), 1e-18L);
}

TEST(QpochInf, RandomComplexAgainstOracle) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1.5, 1.5), uq(0.05, 0.9);
  for (int k = 0; k < 50; ++k) {
    const Complex a(u(rng), u(rng));
    const Real q = uq(rng);
    const auto r = qpoch_inf(a, QBase(q));
    EXPECT_TRUE(r.converged);
    EXPECT_LT(std::abs(r.value - product_oracle(a, q)), 1e-16L * (1 + std::abs(r.value)));
  }
}

TEST(QpochInf, RejectsNonPositiveTol) { EXPECT_THROW(qpoch_inf(0.5L, QBase(0.5L), 0), Error); }

TEST(QpochMulti, EmptyList) {
  EXPECT_EQ(qpoch_multi({}, QBase(0.5L), 5), Complex(1));
}

TEST(QpochMulti, SquaredFactor) {
  const Complex ps[] = {0.5L, 0.5L};
  EXPECT_NEAR(static_cast<double>(qpoch_multi(ps, QBase(0.5L), 1).real()), 0.25, 1e-18);
}

TEST(QpochMulti, InfiniteIsProductOfOracles) {
  const Complex ps[] = {0.5L, 0.25L};
  const Complex want = product_oracle(0.5L, 0.5L) * product_oracle(0.25L, 0.5L);
  EXPECT_LT(rel_diff(qpoch_multi(ps, QBase(0.5L), kInfinite), want), 1e-18L);
  EXPECT_LT(rel_diff(pinf({0.5L, 0.25L}, QBase(0.5L)), want), 1e-18L);
}

TEST(Phi, OnlyFirstTerm) {
  SeriesSpec s;
  s.argument = 0;
  const auto r = phi(s);
  EXPECT_EQ(r.value, Complex(1));
  EXPECT_GE(r.terms_used, 1);
}

TEST(Phi, TwoTermHandSum) {
  const Real q = 0.5L, b = 0.3L, c = 0.7L;
  SeriesSpec s{{1 / q, b}, {c}, q, QBase(q)};
  const Real want = 1 + (1 - 1 / q) * (1 - b) / ((1 - q) * (1 - c)) * q;
  const auto r = phi(s);
  EXPECT_NEAR(static_cast<double>(r.value.real()), static_cast<double>(want), 1e-17);
  EXPECT_EQ(r.terms_used, 2);
}

TEST(Phi, DivergentArgumentRejected) {
  SeriesSpec s{{0.3L, 0.2L}, {0.4L}, 1.2L, QBase(0.5L)};
  try {
    phi(s);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::divergent_series);
  }
}

TEST(Phi, PoleLatticeRejected) {
  SeriesSpec s{{0.3L}, {4.0L}, 0.5L, QBase(0.5L)};  // 4 = q^{-2}
  try {
    phi(s);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::pole_proximity);
  }
}

// Converged results carry a tail bound under tol * max(1, |value|).
TEST(Phi, ConvergenceContract) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-0.8, 0.8);
  for (int k = 0; k < 40; ++k) {
    SeriesSpec s{{u(rng), u(rng), u(rng)}, {u(rng) + 0.05, 0.5L * u(rng)}, u(rng), QBase(0.6L)};
    const Real tol = 1e-15L;
    const auto r = phi(s, tol);
    ASSERT_TRUE(r.converged);
    EXPECT_GE(r.terms_used, 1);
    EXPECT_LE(r.tail_bound, tol * std::max(Real(1), std::abs(r.value)));
  }
}

// Nonterminating 3phi2 against the 50-digit summation.
TEST(Phi, AgreesWithExtendedPrecision) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-0.9, 0.9);
  for (int k = 0; k < 20; ++k) {
    SeriesSpec s{{Complex(u(rng), u(rng)), u(rng), u(rng)},
                 {u(rng) * 0.5, Complex(0.3, u(rng) * 0.5)},
                 Complex(u(rng), u(rng)) * 0.7L,
                 QBase(0.5L)};
    const Complex lo = phi(s).value;
    const extended::Complex50 hi = extended::phi(s, extended::Real50("1e-40"));
    const Complex hi_c(static_cast<Real>(hi.real()), static_cast<Real>(hi.imag()));
    EXPECT_LT(std::abs(lo - hi_c), 1e-17L * (1 + std::abs(hi_c)));
  }
}

TEST(WSeries, ZeroArgument) {
  const Complex extras[] = {0.3L, 0.25L};
  EXPECT_EQ(w_series(0.4L, extras, QBase(0.5L), 0).value, Complex(1));
}

// 8W7 with one extra = q^{-1}: terms 0 and 1 only.
TEST(WSeries, TerminatingTwoTerms) {
  const Real q = 0.5L;
  const Complex a = 0.2L, b = 0.3L, c = 0.15L, d = 0.4L, e = 0.25L, t = 0.7L;
  const Complex extras[] = {1 / q, b, c, d, e};
  Complex num = (Real(1) - a) * (Real(1) - a * q * q) / (Real(1) - a);
  Complex den = Real(1) - q;
  for (Complex x : extras) {
    num *= Real(1) - x;
    den *= Real(1) - a * q / x;
  }
  const Complex want = Real(1) + num / den * t;
  const auto r = w_series(a, extras, QBase(q), t);
  EXPECT_LT(rel_diff(r.value, want), 1e-18L);
}

// 6W5 summation: sum with A = abc/(q alpha), extras a/alpha, b/alpha,
// c/alpha and argument alpha^2 equals a ratio of infinite products.
TEST(WSeries, SixPhiFiveClosedForm) {
  const QBase B(0.5L);
  const Real q = 0.5L;
  const Complex a = 0.2L, b = 0.3L, c = 0.1L, al = 0.8L;
  const Complex A = a * b * c / (q * al);
  const Complex extras[] = {a / al, b / al, c / al};
  const Complex direct = w_series(A, extras, B, al * al).value;
  const Complex closed = product_oracle(al * a, q) * product_oracle(al * b, q) *
                         product_oracle(al * c, q) * product_oracle(a * b * c / al, q) /
                         (product_oracle(a * b, q) * product_oracle(a * c, q) *
                          product_oracle(b * c, q) * product_oracle(al * al, q));
  EXPECT_LT(rel_diff(direct, closed), 1e-12L);
}

// The +-sqrt(a) insertions make the sum independent of the root's branch:
// crossing the negative real axis flips the principal root but not the value.
TEST(WSeries, BranchIndependent) {
  const QBase B(0.5L);
  const Complex extras[] = {0.3L, Complex(0.1L, 0.2L)};
  const Complex above(-0.3L, 1e-14L), below(-0.3L, -1e-14L);
  const Complex va = w_series(above, extras, B, 0.4L).value;
  const Complex vb = w_series(below, extras, B, 0.4L).value;
  EXPECT_LT(std::abs(va - vb), 1e-12L);
}

TEST(AbsorbedSum, MatchesPlainSeriesWithProducts) {
  // sum (a)_n / (q, b)_n t^n (c q^n)_inf, summed directly below.
  const QBase B(0.5L);
  const Complex a = 0.3L, b = 0.4L, c = 0.6L, t = 0.35L;
  AbsorbedSeries s;
  s.numerators = {a};
  s.denominators = {b};
  s.absorbed = {c};
  s.argument = t;
  const Complex got = absorbed_sum(s, B).value;
  Complex sum = 0, coef = 1;
  Real qn = 1;
  for (int n = 0; n < 200; ++n) {
    sum += coef * std::pow(t, Real(n)) * product_oracle(c * qn, 0.5L);
    coef *= (Real(1) - a * qn) / ((Real(1) - qn * 0.5L) * (Real(1) - b * qn));
    qn *= 0.5L;
  }
  EXPECT_LT(rel_diff(got, sum), 1e-17L);
}

}  // namespace
}  // namespace qortho
