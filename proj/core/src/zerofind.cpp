#include "qortho/zerofind.hpp"

#include <algorithm>
#include <cmath>

#include "qortho/detail/parallel.hpp"
#include "qortho/quad.hpp"
#include "qortho/u8.hpp"

namespace qortho {

namespace {

int sign_of(Real x) { return (x > 0) - (x < 0); }

Root refine(const std::function<Real(Real)>& f, Real lo, Real hi, Real flo, Real fhi, Real tol) {
  Root r;
  r.scale = std::max(std::abs(flo), std::abs(fhi));
  if (flo == 0) hi = lo;
  if (fhi == 0) lo = hi;
  while (hi - lo > tol) {
    const Real mid = (lo + hi) / 2;
    const Real fm = f(mid);
    if (fm == 0) {
      lo = hi = mid;
      flo = fhi = 0;
      break;
    }
    if (sign_of(fm) == sign_of(flo)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
      fhi = fm;
    }
  }
  r.lo = lo;
  r.hi = hi;
  Real x = (lo + hi) / 2;
  if (hi > lo && fhi != flo) {
    x = std::clamp(lo - flo * (hi - lo) / (fhi - flo), lo, hi);
  }
  r.x = x;
  r.fx = f(x);
  return r;
}

}  // namespace

std::vector<Root> scan_roots(const std::function<Real(Real)>& f, Real start, Real cap,
                             int max_roots, const ScanOptions& opt) {
  std::vector<Root> out;
  if (max_roots <= 0) return out;
  if (!(opt.step > 0)) throw Error(Errc::param_error, "scan step must be positive");
  const int n = static_cast<int>(std::floor((cap - start) / opt.step)) + 1;
  const unsigned threads = opt.threads == 0 ? default_threads() : opt.threads;
  // Evaluate in blocks so a short request does not pay for the whole grid.
  const int block = std::max(64, static_cast<int>(threads) * 16);
  std::vector<Real> xs, fs;
  for (int base = 0; base < n && static_cast<int>(out.size()) < max_roots; base += block) {
    const int m = std::min(block, n - base);
    const std::size_t off = xs.size();
    xs.resize(off + m);
    fs.resize(off + m);
    detail::parallel_for(m, threads, [&](int i) {
      const Real x = start + (base + i) * opt.step;
      xs[off + i] = x;
      fs[off + i] = f(x);
    });
    for (std::size_t i = off == 0 ? 1 : off; i < xs.size(); ++i) {
      if (static_cast<int>(out.size()) >= max_roots) break;
      const Real f0 = fs[i - 1], f1 = fs[i];
      // An exact zero on the grid is reported once, by the cell it ends.
      if (sign_of(f0) * sign_of(f1) < 0 || f1 == 0 || (i == 1 && f0 == 0)) {
        out.push_back(refine(f, xs[i - 1], xs[i], f0, f1, opt.tol));
      }
    }
  }
  return out;
}

std::vector<Real> test_points(Real beta, int n_max, const QBase& base) {
  const Real q = base.q();
  if (!(beta > q && beta < 1)) throw Error(Errc::bad_beta, "test points need q < beta < 1");
  if (n_max < 0) throw Error(Errc::param_error, "test points: n_max must be >= 0");
  const Real w0 = std::log(beta) / base.log_q();
  std::vector<Real> pts;
  for (int k = 0; k <= n_max; ++k) pts.push_back(w0 + k);
  return pts;
}

Real scan_cap(int n_zeros, const QParams& s) {
  return n_zeros + 5 + std::abs(std::log(std::abs(s.alpha * s.d)) / s.base.log_q());
}

std::vector<ZeroRecord> find_zeros(const QParams& s, int n_zeros, const ScanOptions& opt) {
  s.check_orthogonality();
  std::vector<ZeroRecord> out;
  if (n_zeros <= 0) return out;
  auto f = [&s](Real nu) { return boundary_f_value(nu, s); };
  const auto roots = scan_roots(f, 0, scan_cap(n_zeros, s), n_zeros, opt);
  if (static_cast<int>(roots.size()) < n_zeros) {
    throw Error(Errc::scan_exhausted, "find_zeros: fewer sign changes than requested below the cap");
  }
  for (std::size_t k = 0; k < roots.size(); ++k) {
    ZeroRecord z;
    z.index = static_cast<int>(k) + 1;
    z.nu = roots[k].x;
    z.bracket = {roots[k].lo, roots[k].hi};
    z.f_residual = roots[k].scale > 0 ? std::abs(roots[k].fx) / roots[k].scale : 0;
    z.predicted = gamma_n(z.index, s);
    z.g_sign = sign_of(boundary_g(z.nu, s));
    out.push_back(z);
  }
  return out;
}

std::vector<Real> find_g_zeros(const QParams& s, int n_zeros, const ScanOptions& opt) {
  std::vector<Real> out;
  if (n_zeros <= 0) return out;
  auto g = [&s](Real nu) { return boundary_g(nu, s); };
  const auto roots = scan_roots(g, 0, scan_cap(n_zeros, s), n_zeros, opt);
  if (static_cast<int>(roots.size()) < n_zeros) {
    throw Error(Errc::scan_exhausted, "find_g_zeros: fewer sign changes than requested below the cap");
  }
  for (const Root& r : roots) out.push_back(r.x);
  return out;
}

InterlacingReport interlacing_report(const QParams& s, int n_zeros, const ScanOptions& opt) {
  InterlacingReport rep;
  if (n_zeros <= 0) return rep;
  const auto zeros = find_zeros(s, n_zeros, opt);
  for (const auto& z : zeros) rep.nu.push_back(z.nu);
  // Every g-zero up to the last located f-zero, so the count per gap is exact.
  auto g = [&s](Real nu) { return boundary_g(nu, s); };
  for (const Root& r : scan_roots(g, 0, rep.nu.back(), 4 * n_zeros + 8, opt)) rep.mu.push_back(r.x);
  rep.mu1_below_nu1 = !rep.mu.empty() && rep.mu.front() < rep.nu.front();
  for (int k = 1; k < n_zeros; ++k) {
    const auto in_gap = std::count_if(rep.mu.begin(), rep.mu.end(), [&](Real m) {
      return rep.nu[k - 1] < m && m < rep.nu[k];
    });
    if (in_gap != 1) rep.interlaced = false;
  }
  for (std::size_t k = 1; k < zeros.size(); ++k) {
    if (zeros[k].g_sign == 0 || zeros[k].g_sign == zeros[k - 1].g_sign) rep.g_signs_alternate = false;
  }
  return rep;
}

JensenReport jensen_count_check(const QParams& s, Real beta, int n,
                                const std::vector<ZeroRecord>& zeros) {
  const QBase& B = s.base;
  const Real q = s.q();
  if (!(beta > q && beta < 1)) throw Error(Errc::bad_beta, "jensen_count_check: need q < beta < 1");
  const Real abcd = s.abcd().real();
  JensenReport r;
  r.n = n;
  r.radius = std::pow(q, -n) / beta + beta * abcd * std::pow(q, n - 1);
  auto zeta = [&](Real nu) { return std::abs(B.pow(-nu) + abcd * B.pow(nu - 1)); };
  if (zeros.empty() || zeta(zeros.back().nu) < r.radius) {
    throw Error(Errc::insufficient_zeros, "jensen_count_check: located zeros do not reach R_n");
  }
  for (const auto& z : zeros) {
    if (zeta(z.nu) < r.radius) ++r.count;
  }
  const Real shift = std::log(std::abs(s.alpha.real() * beta * s.d.real())) / std::log(1 / q);
  r.lower = n - 1 - shift;
  r.upper = n - shift;
  r.within = r.lower < r.count && r.count < r.upper;
  return r;
}

}  // namespace qortho
