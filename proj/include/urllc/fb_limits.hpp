#pragma once
// Finite-blocklength limits of the BI-AWGN channel: capacity, dispersion,
// the normal-approximation rate, and its inverse in SNR.
//
// rho is the linear SNR (noise variance 1, signal power rho). All
// information quantities use base-2 logarithms; the normal approximation
// applies the dispersion penalty as sqrt(V/n) Q^-1(eps) log2(e).

#include <cstddef>
#include <unordered_map>

namespace urllc {

double qfunc(double x);       // Gaussian tail Q(x)
double qfunc_inv(double p);   // inverse on (0,1), |Q(Q^-1(p)) - p| <= 1e-12

struct CapacityDispersion {
  double c = 0;  // bits/use
  double v = 0;  // dispersion (same log base as c)
};

// One Gauss-Hermite pass evaluates both integrals:
//   C(rho) = E_z[ 1 - log2(1 + exp(-2 rho + 2 z sqrt(rho))) ],  z ~ N(0,1)
//   V(rho) = E_z[ (1 - log2(1 + exp(-2 rho + 2 z sqrt(rho))) - C)^2 ]
CapacityDispersion capacity_dispersion(double rho);
double capacity(double rho);
double dispersion(double rho);

// Optional memo for the many repeated evaluations inside optimizers.
struct FbCache {
  std::unordered_map<double, CapacityDispersion> cv;
  const CapacityDispersion& get(double rho);
};

// R(n, rho, eps) = C - sqrt(V/n) Q^-1(eps) log2(e)   (the O(log n / n) term
// is dropped). May be negative at low SNR.
double normal_approx_rate(std::size_t n, double rho, double epsilon,
                          FbCache* cache = nullptr);

// Inverse of R in rho at fixed (n, eps): the reference SNR of rate r.
// Bisection until |R(n, rho, eps) - r| <= 1e-9. Throws std::domain_error
// for r outside (0, 1).
double reference_snr(std::size_t n, double r, double epsilon,
                     FbCache* cache = nullptr);

}  // namespace urllc
