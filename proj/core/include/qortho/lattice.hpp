#pragma once

// The q-quadratic grid x(z) = (q^z + q^-z)/2, the coefficients of the
// hypergeometric-type difference equation, and Pearson weights.

#include "qortho/qcore.hpp"

namespace qortho {

struct QParams {
  QBase base;
  Complex a, b, c, d, alpha;

  // Rejects alpha == 0 and d == 0 only; see check_orthogonality().
  QParams(QBase base, Complex a, Complex b, Complex c, Complex d, Complex alpha);

  Real q() const noexcept { return base.q(); }
  Complex abcd() const { return a * b * c * d; }

  // max(|a|,|b|,|c|,|q/d|) < 1 and the reality condition (all real, or one
  // conjugate pair among a, b, c with the rest real).
  bool satisfies_orthogonality() const;
  void check_orthogonality() const;

  QParams with_cd_swapped() const { return QParams(base, a, b, d, c, alpha); }
};

// The parameter set used throughout the tests and the CLI defaults:
// q=0.5, a=0.3, b=0.2, c=0.1, d=2.2, alpha=0.8.
QParams reference_params();

struct LatticePoint {
  Complex z;
  Complex qz;
  Complex x;

  static LatticePoint from_qz(Complex qz, const QBase& base);
  static LatticePoint from_z(Complex z, const QBase& base);
  // Point at z + dz.
  LatticePoint shifted(Real dz, const QBase& base) const;
};

LatticePoint point_from_theta(Real theta, const QBase& base);

struct Eigenvalue {
  Complex nu;
  Complex lambda;
  Complex dlambda_dnu;
};

Complex sigma(const LatticePoint& point, const QParams& params);
Complex tau(Complex x, const QParams& params);
Eigenvalue lambda_nu(Complex nu, const QParams& params);

// x(z + 1/2) - x(z - 1/2), from the exact lattice formula.
Complex nabla_x1(const LatticePoint& point, const QBase& base);

Complex pearson_rho(const LatticePoint& point, const QParams& params, Real tol = kDefaultTol);
Complex pearson_rho_sec7(const LatticePoint& point, const QParams& params,
                         Real tol = kDefaultTol);

// (v(z) u(z-1) - u(z) v(z-1)) / (x(z) - x(z-1)).
Complex wronskian(Complex u_at_z, Complex u_at_zm1, Complex v_at_z, Complex v_at_zm1,
                  Complex x_z, Complex x_zm1);

}  // namespace qortho
