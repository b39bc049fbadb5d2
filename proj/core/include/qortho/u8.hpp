#pragma once

// The very-well-poised 8phi7 solution u_nu(x; a, b, c; d) of the difference
// equation, its entire regularization v_nu, and the boundary functions.

#include <utility>

#include "qortho/lattice.hpp"

namespace qortho {

enum class Representation {
  A_87,      // single 8W7 in bc q^nu
  B_43pair,  // pair of balanced 4phi3
  C_sym,     // 8W7 symmetric in a, b, c, argument q/(d q^z)
  D_asym,    // two 8W7 in ad q^nu
  Auto,
};

const char* to_string(Representation rep) noexcept;

// Whether rep can evaluate at (nu, point). margin tightens the convergence
// radius of A, C, D (1 = the formal radius).
bool admissible(Representation rep, Complex nu, const LatticePoint& point, const QParams& params,
                Real margin = 1);

// The representation Auto resolves to: B for Re nu <= 3 away from its pole
// lattice, otherwise the first of C, D, A inside 0.9 of its radius, then B.
Representation select_representation(Complex nu, const LatticePoint& point,
                                     const QParams& params);

Complex u_nu(Complex nu, const LatticePoint& point, const QParams& params,
             Representation rep = Representation::Auto, Real tol = kDefaultTol);

// (q^{1+z}/d, q^{1-z}/d)_inf u_nu with every pole/zero pair cancelled before
// evaluation.
Complex v_nu(Complex nu, const LatticePoint& point, const QParams& params,
             Representation rep = Representation::Auto, Real tol = kDefaultTol);

// The second balanced 4phi3-pair form, obtained from C by a three-term
// transformation. Used as an extra cross-check.
Complex u_nu_c_pair(Complex nu, const LatticePoint& point, const QParams& params,
                    Real tol = kDefaultTol);

struct BoundaryEval {
  Real nu = 0;
  Real value = 0;
  Representation representation_used = Representation::C_sym;
  Real residual_diag = 0;  // disagreement with the D form; 0 when not computed
};

// f(nu) = v_nu at q^z = alpha.
BoundaryEval boundary_f(Real nu, const QParams& params, Real tol = kDefaultTol,
                        bool cross_check = true);
Real boundary_f_value(Real nu, const QParams& params, Real tol = kDefaultTol);

// v_nu at q^z = alpha / q, i.e. one lattice step below the boundary point.
Real boundary_f_lower(Real nu, const QParams& params, Real tol = kDefaultTol);

// Lattice divided difference of v_nu at the boundary point.
Real boundary_g(Real nu, const QParams& params, Real tol = kDefaultTol);

// x at the boundary point and one step below it.
std::pair<Real, Real> boundary_abscissae(const QParams& params);

// Relative residual of the difference-differentiation formula.
Real diff_formula_check(Complex nu, const LatticePoint& point, const QParams& params);

struct Amplitude {
  Real magnitude = 0;
  Real phase = 0;
  // |A|^{-2} against the weight for u_nu, relative.
  Real identity_residual = 0;
};

Amplitude asymptotic_amplitude(Real theta, const QParams& params);

// Leading large-n term of u_{gamma_n}(cos theta), q^{gamma_n} = q^n / (alpha d).
Real asymptotic_leading(int n, Real theta, const QParams& params);

// gamma_n = n - log(alpha d) / log q.
Real gamma_n(int n, const QParams& params);

}  // namespace qortho
