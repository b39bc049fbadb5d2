#pragma once

// Closed-form squared norms, the explicit Wronskian identity, and the
// integral identity tying weighted integrals to boundary Wronskians.

#include "qortho/lattice.hpp"
#include "qortho/quad.hpp"

namespace qortho {

// Integral over (0, pi) of u_nu(cos t) times
//   (e^{+-2it}, q e^{+-it}/d)_inf / (a, b, gamma q^n, alpha, q/alpha; e^{+-it})_inf
// in terms of two balanced 5phi4.
Complex i_n_gamma(int n, Complex gamma, Complex nu, const QParams& params,
                  Real tol = kDefaultTol);

// The same integral by quadrature (test oracle).
Real i_n_gamma_quad(int n, Real gamma, Real nu, const QParams& params,
                    const QuadOptions& opt = {});

// Four-term double-sum expression for the integral of v_nu^2 weight_8phi7.
// The terms cancel by many orders of magnitude, so the sum is carried out in
// 50-digit arithmetic and rounded once.
Real norm_sq_closed(Complex nu, const QParams& params);

// -4 pi q^{1/2} d / ((1 - q) K) with K = (q, q, alpha a, q a/alpha, alpha b,
// q b/alpha, alpha c, q c/alpha, q alpha/d, q^2/(alpha d))_inf.
Real identity_prefactor(const QParams& params);

// Limit mu -> nu of the integral identity:
//   prefactor * (f'(nu) g(nu) - f(nu) g'(nu)) / lambda'(nu),
// derivatives in nu by Richardson-extrapolated central differences.
Real norm_sq_rhs(Real nu, const QParams& params, Real dnu = 1e-4L, Real tol = kDefaultTol);

// Closed form of W(u, v) for u = u_nu(x; a, b, c; d), v = u_nu(x; a, b, d; c).
Complex wronskian_closed(Complex nu, const LatticePoint& point, const QParams& params);

// Relative residual between the lattice Wronskian of u, v at point and the
// closed form. The lattice side uses the 50-digit pair form of u_nu.
Real wronskian_identity_residual(Complex nu, const LatticePoint& point, const QParams& params);

// prefactor * (f_nu f_mu(lower) - f_mu f_nu(lower)) / ((x0 - x1)(lambda_mu - lambda_nu)).
Real main_identity_rhs(Real mu, Real nu, const QParams& params, Real tol = kDefaultTol);

struct IdentityCheck {
  Real lhs = 0;
  Real rhs = 0;
  Real residual = 0;
};

IdentityCheck main_identity(Real mu, Real nu, const QParams& params, const QuadOptions& opt = {});
Real main_identity_residual(Real mu, Real nu, const QParams& params, const QuadOptions& opt = {});

}  // namespace qortho
