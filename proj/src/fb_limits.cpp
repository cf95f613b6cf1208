#include "urllc/fb_limits.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace urllc {

namespace {

constexpr double kInvLn2 = std::numbers::log2e;

// log2(1 + e^u), stable for any u
inline double log2_1p_exp(double u) {
  if (u > 0) return (u + std::log1p(std::exp(-u))) * kInvLn2;
  return std::log1p(std::exp(u)) * kInvLn2;
}

// ----- Gauss-Hermite rule for weight e^{-x^2} -----
//
// Orthonormal recurrence p_{j+1}(x) = x sqrt(2/(j+1)) p_j - sqrt(j/(j+1)) p_{j-1},
// p_0 = pi^{-1/4}; nodes are roots of p_n, weights are Christoffel numbers
// 1 / sum_{j<n} p_j(x)^2. Roots are found by scanning for sign changes and
// polishing with bisection-guarded Newton (p_n' = sqrt(2n) p_{n-1}).

struct GaussHermite {
  std::vector<double> x, w;
};

double herm_pn(int n, double x, double* pnm1 = nullptr) {
  double p0 = 0.7511255444649425;  // pi^{-1/4}
  double pm = 0, pc = p0;
  for (int j = 0; j < n; ++j) {
    double pn = x * std::sqrt(2.0 / (j + 1)) * pc - std::sqrt(double(j) / (j + 1)) * pm;
    pm = pc;
    pc = pn;
  }
  if (pnm1) *pnm1 = pm;
  return pc;
}

GaussHermite build_gauss_hermite(int n) {
  GaussHermite gh;
  const double limit = std::sqrt(2.0 * n + 1.0) + 1.0;
  const double step = 0.5 * std::numbers::pi / std::sqrt(2.0 * n + 1.0);  // < min root gap

  std::vector<double> pos_roots;
  double a = (n % 2) ? step / 8 : 0.0;  // skip the origin root for odd n
  double fa = herm_pn(n, a);
  for (double b = a + step; a < limit; a = b, b += step, fa = herm_pn(n, a)) {
    double fb = herm_pn(n, b);
    if (fa == 0) pos_roots.push_back(a);
    if (fa * fb >= 0) continue;
    double lo = a, hi = b, flo = fa;
    double x = 0.5 * (lo + hi);
    for (int it = 0; it < 200; ++it) {
      double pm;
      double fx = herm_pn(n, x, &pm);
      double dx = fx / (std::sqrt(2.0 * n) * pm);  // Newton step
      if (fx == 0 || std::abs(dx) < 1e-16 * (1 + std::abs(x))) break;
      if ((fx > 0) == (flo > 0)) lo = x; else hi = x;
      double nx = x - dx;
      if (nx <= lo || nx >= hi) nx = 0.5 * (lo + hi);  // Newton left the bracket
      x = nx;
    }
    pos_roots.push_back(x);
  }
  if ((int)pos_roots.size() != n / 2)
    throw std::logic_error("gauss-hermite: root bracketing failed");

  if (n % 2) gh.x.push_back(0.0);
  for (double r : pos_roots) {
    gh.x.push_back(r);
    gh.x.push_back(-r);
  }
  for (double xi : gh.x) {
    double s = 0, pm = 0, pc = 0.7511255444649425;
    for (int j = 0; j < n; ++j) {
      s += pc * pc;
      double pn = xi * std::sqrt(2.0 / (j + 1)) * pc - std::sqrt(double(j) / (j + 1)) * pm;
      pm = pc;
      pc = pn;
    }
    gh.w.push_back(1.0 / s);
  }
  return gh;
}

// 256 nodes: the integrand's soft hinge at z ~ sqrt(rho) slows convergence
// around rho ~ 8-16, and 256 keeps both moments within ~2e-9 of truth there
// (96 nodes only reaches ~1e-6).
const GaussHermite& gh_rule() {
  static const GaussHermite rule = build_gauss_hermite(256);
  return rule;
}

}  // namespace

CapacityDispersion capacity_dispersion(double rho) {
  if (rho < 0 || !std::isfinite(rho))
    throw std::domain_error("capacity_dispersion: rho must be finite and >= 0");
  const auto& gh = gh_rule();
  const double sr = std::sqrt(rho);
  const std::size_t m = gh.x.size();
  std::vector<double> f(m);
  double c = 0, wsum = 0;
  for (std::size_t i = 0; i < m; ++i) {
    double z = std::numbers::sqrt2 * gh.x[i];  // z ~ N(0,1) after the change of variable
    f[i] = 1.0 - log2_1p_exp(-2.0 * rho + 2.0 * z * sr);
    c += gh.w[i] * f[i];
    wsum += gh.w[i];
  }
  c /= wsum;  // wsum = sqrt(pi) up to roundoff; dividing normalizes exactly
  double v = 0;
  for (std::size_t i = 0; i < m; ++i) {
    double d = f[i] - c;
    v += gh.w[i] * d * d;
  }
  v /= wsum;
  return {c, v};
}

double capacity(double rho) { return capacity_dispersion(rho).c; }
double dispersion(double rho) { return capacity_dispersion(rho).v; }

const CapacityDispersion& FbCache::get(double rho) {
  auto it = cv.find(rho);
  if (it == cv.end()) it = cv.emplace(rho, capacity_dispersion(rho)).first;
  return it->second;
}

double qfunc(double x) { return 0.5 * std::erfc(x / std::numbers::sqrt2); }

double qfunc_inv(double p) {
  if (!(p > 0.0 && p < 1.0)) throw std::domain_error("qfunc_inv: p must be in (0,1)");
  // Acklam's inverse normal approximation for Phi^-1(p), then Newton polish.
  static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                             -2.759285104469687e+02, 1.383577518672690e+02,
                             -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                             -1.556989798598866e+02, 6.680131188771972e+01,
                             -1.328068155288572e+01};
  static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                             -2.400758277161838e+00, -2.549732539343734e+00,
                             4.374664141464968e+00,  2.938163982698783e+00};
  static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                             2.445134137142996e+00, 3.754408661907416e+00};
  const double pl = 0.02425, ph = 1 - pl;
  double pp = 1.0 - p;  // Phi^-1(1-p) = Q^-1(p)
  double x;
  if (pp < pl) {
    double q = std::sqrt(-2 * std::log(pp));
    x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1);
  } else if (pp <= ph) {
    double q = pp - 0.5, r = q * q;
    x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1);
  } else {
    double q = std::sqrt(-2 * std::log1p(-pp));
    x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1);
  }
  // two Newton steps on Q(x) - p with the exact erfc-based Q
  for (int it = 0; it < 3; ++it) {
    double phi = std::exp(-0.5 * x * x) / std::sqrt(2 * std::numbers::pi);
    if (phi == 0) break;
    x += (qfunc(x) - p) / phi;
  }
  return x;
}

double normal_approx_rate(std::size_t n, double rho, double epsilon, FbCache* cache) {
  if (n == 0) throw std::domain_error("normal_approx_rate: n must be positive");
  CapacityDispersion cv = cache ? cache->get(rho) : capacity_dispersion(rho);
  return cv.c - std::sqrt(cv.v / double(n)) * qfunc_inv(epsilon) * kInvLn2;
}

double reference_snr(std::size_t n, double r, double epsilon, FbCache* cache) {
  if (!(r > 0.0 && r < 1.0))
    throw std::domain_error("reference_snr: rate must be in (0,1)");
  double lo = 1e-9, hi = 1.0;
  while (normal_approx_rate(n, hi, epsilon, cache) < r) {
    hi *= 4;
    if (hi > 1e12) throw std::domain_error("reference_snr: rate unreachable");
  }
  double mid = hi;
  for (int it = 0; it < 300; ++it) {
    mid = std::sqrt(lo * hi);  // bisection in log rho
    double rm = normal_approx_rate(n, mid, epsilon, cache);
    if (std::abs(rm - r) <= 1e-9) return mid;
    if (rm < r) lo = mid; else hi = mid;
  }
  throw std::runtime_error("reference_snr: bisection did not converge");
}

}  // namespace urllc
