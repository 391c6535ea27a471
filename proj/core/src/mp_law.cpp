#include <cmath>
#include <map>
#include <mutex>

#include "lscmf/denoise.hpp"

namespace lscmf {
namespace {

// The Marchenko-Pastur density sqrt((b-x)(x-a)) / (2 pi beta x) has square-root
// singularities at the support endpoints (and a 1/sqrt(x) blow-up at a = 0 when
// beta = 1). Substituting x(t) = a + (b-a) sin^2(t) removes both: the integrand
// becomes (b-a)^2 sin^2(2t) / (4 pi beta x(t)) on t in [0, pi/2], which is
// smooth for every beta in (0,1].
struct SubstitutedDensity {
  double a, b, beta;

  double operator()(double t) const {
    const double s = std::sin(t);
    const double x = a + (b - a) * s * s;
    const double s2 = std::sin(2.0 * t);
    return (b - a) * (b - a) * s2 * s2 / (4.0 * M_PI * beta * x);
  }
};

double adaptive_simpson(const SubstitutedDensity& f, double lo, double hi, double flo,
                        double fmid, double fhi, double whole, double tol, int depth) {
  const double mid = 0.5 * (lo + hi);
  const double lmid = 0.5 * (lo + mid);
  const double rmid = 0.5 * (mid + hi);
  const double flmid = f(lmid);
  const double frmid = f(rmid);
  const double left = (mid - lo) / 6.0 * (flo + 4.0 * flmid + fmid);
  const double right = (hi - mid) / 6.0 * (fmid + 4.0 * frmid + fhi);
  if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol)
    return left + right + (left + right - whole) / 15.0;
  return adaptive_simpson(f, lo, mid, flo, flmid, fmid, left, 0.5 * tol, depth - 1) +
         adaptive_simpson(f, mid, hi, fmid, frmid, fhi, right, 0.5 * tol, depth - 1);
}

double integrate(const SubstitutedDensity& f, double lo, double hi, double tol) {
  if (hi <= lo) return 0.0;
  const double mid = 0.5 * (lo + hi);
  const double flo = f(lo), fmid = f(mid), fhi = f(hi);
  const double whole = (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi);
  return adaptive_simpson(f, lo, hi, flo, fmid, fhi, whole, tol, 48);
}

}  // namespace

double mp_cdf(double q, AspectRatio beta) {
  const double rt = std::sqrt(beta.beta);
  const double a = (1.0 - rt) * (1.0 - rt);
  const double b = (1.0 + rt) * (1.0 + rt);
  if (q <= a) return 0.0;
  if (q >= b) return 1.0;
  // Invert the substitution to find the upper integration limit.
  const double t_hi = std::asin(std::sqrt((q - a) / (b - a)));
  return integrate(SubstitutedDensity{a, b, beta.beta}, 0.0, t_hi, 1e-12);
}

double mp_median(AspectRatio beta) {
  static std::map<double, double> cache;
  static std::mutex mutex;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(beta.beta); it != cache.end()) return it->second;
  }

  const double rt = std::sqrt(beta.beta);
  double lo = (1.0 - rt) * (1.0 - rt);
  double hi = (1.0 + rt) * (1.0 + rt);
  // Bisection on the CDF; the median always lies strictly inside the support.
  for (int iter = 0; iter < 200 && hi - lo > 1e-10; ++iter) {
    const double mid = 0.5 * (lo + hi);
    (mp_cdf(mid, beta) < 0.5 ? lo : hi) = mid;
  }
  const double q = 0.5 * (lo + hi);

  std::lock_guard lock(mutex);
  cache.emplace(beta.beta, q);
  return q;
}

}  // namespace lscmf
