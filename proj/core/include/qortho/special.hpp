#pragma once

// Limiting families of u_nu (dual q-Hahn, Al-Salam–Chihara, big q-Hermite,
// q-Hermite) and the q-Bessel and q-trigonometric functions on the same grid.

#include "qortho/lattice.hpp"
#include "qortho/zerofind.hpp"

namespace qortho {

// ---- c -> 0: continuous dual q-Hahn type, parameters a, b, c ----

// Single 3phi2 in ab q^nu; needs |ab q^nu| < 1.
Complex dual_qhahn_u(Complex nu, const LatticePoint& point, Complex a, Complex b, Complex c,
                     const QBase& base, Real tol = kDefaultTol);
// Pair of balanced 3phi2, valid for all nu.
Complex dual_qhahn_u_pair(Complex nu, const LatticePoint& point, Complex a, Complex b, Complex c,
                          const QBase& base, Real tol = kDefaultTol);
// (q^{1+z}/c, q^{1-z}/c)_inf u at q^z = alpha.
Real dual_qhahn_boundary(Real nu, Complex a, Complex b, Complex c, Real alpha, const QBase& base,
                         Real tol = kDefaultTol);
// a^{-n} (ab, ac)_n 3phi2(q^{-n}, a q^z, a q^{-z}; ab, ac; q, q).
Complex dual_qhahn_poly(int n, const LatticePoint& point, Complex a, Complex b, Complex c,
                        const QBase& base);

// ---- b -> 0: Al-Salam–Chihara type, parameters a, b ----

Complex al_salam_chihara_u(Complex nu, const LatticePoint& point, Complex a, Complex b,
                           const QBase& base, Real tol = kDefaultTol);
Complex al_salam_chihara_u_pair(Complex nu, const LatticePoint& point, Complex a, Complex b,
                                const QBase& base, Real tol = kDefaultTol);
Real al_salam_chihara_boundary(Real nu, Complex a, Complex b, Real alpha, const QBase& base,
                               Real tol = kDefaultTol);
// a^{-n} (ab)_n 3phi2(q^{-n}, a q^z, a q^{-z}; ab, 0; q, q).
Complex al_salam_chihara_poly(int n, const LatticePoint& point, Complex a, Complex b,
                              const QBase& base);

// ---- a -> 0: big q-Hermite type, parameter a ----

Complex big_qhermite_u(Complex nu, const LatticePoint& point, Complex a, const QBase& base,
                       Real tol = kDefaultTol);
Real big_qhermite_boundary(Real nu, Complex a, Real alpha, const QBase& base,
                           Real tol = kDefaultTol);
// a^{-n} 3phi2(q^{-n}, a q^z, a q^{-z}; 0, 0; q, q).
Complex big_qhermite_poly(int n, const LatticePoint& point, Complex a, const QBase& base);

// ---- q-Hermite (series in base q^2) ----

Complex qhermite_H(Complex nu, const LatticePoint& point, const QBase& base,
                   Real tol = kDefaultTol);
// H_n(x|q) = sum_k (q)_n / ((q)_k (q)_{n-k}) q^{(n-2k)z}.
Complex qhermite_poly(int n, const LatticePoint& point, const QBase& base);

// ---- q-Bessel ----

// (r/2)^nu (q^{nu+1}, -r^2/4)_inf / (q)_inf
//   * 2phi1(q^{(nu+1)/2+z}, q^{(nu+1)/2-z}; q^{nu+1}; q, -r^2/4).
// r is complex: the zeros of interest lie on the imaginary r axis.
Complex qbessel_J(Complex nu, const LatticePoint& point, Complex r, const QBase& base,
                  Real tol = kDefaultTol);
// The same without (r/2)^nu, as a function of t = -r^2/4 (Heine-transformed sum).
Complex qbessel_J_t(Complex nu, const LatticePoint& point, Complex t, const QBase& base,
                    Real tol = kDefaultTol);
// Direct 2phi1 form; only for |t| < 1.
Complex qbessel_J_t_direct(Complex nu, const LatticePoint& point, Complex t, const QBase& base,
                           Real tol = kDefaultTol);
// (e^{+-2it})_inf / (q^alpha e^{+-it}, q^{1-alpha} e^{+-it}, s e^{+-it}, s e^{+-it})_inf,
// s = q^{(nu+1)/2}; the repeated pair is kept as written.
Real qbessel_weight(Real theta, Real nu, Real alpha, const QBase& base, Real tol = kDefaultTol);

// ---- q-trigonometric functions (series in base q^2) ----

Complex qtrig_C_at(const LatticePoint& point, Real omega, const QBase& base,
                   Real tol = kDefaultTol);
Complex qtrig_S_at(const LatticePoint& point, Real omega, const QBase& base,
                   Real tol = kDefaultTol);
Real qtrig_C(Real x, Real omega, const QBase& base, Real tol = kDefaultTol);
Real qtrig_S(Real x, Real omega, const QBase& base, Real tol = kDefaultTol);
// (e^{+-2it}; q)_inf / (q^{1/2} e^{+-2it}; q)_inf.
Real qtrig_weight(Real theta, const QBase& base, Real tol = kDefaultTol);
// (q^{1/4} + q^{-1/4}) / 2.
Real qtrig_boundary_x(const QBase& base);
// First n positive omega with S(boundary x, omega) = 0.
std::vector<Real> qtrig_roots(int n, const QBase& base, const ScanOptions& opt = {0.01L});
// Integral of C(cos t, omega)^2 qtrig_weight for such omega, in closed form.
Real qtrig_diagonal(Real omega, const QBase& base, Real tol = kDefaultTol);

}  // namespace qortho
