#include "doctest.h"

#include <cmath>
#include <functional>

#include "urllc/channel.hpp"
#include "urllc/fb_limits.hpp"

using namespace urllc;
using doctest::Approx;

namespace {

// Independent quadrature: adaptive Simpson over a finite window wide enough
// that the Gaussian weight kills the tails, no Hermite machinery involved.
double simpson(const std::function<double(double)>& f, double a, double b, double fa,
               double fm, double fb, double eps, int depth) {
  double m = 0.5 * (a + b);
  double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  double flm = f(lm), frm = f(rm);
  double whole = (b - a) / 6.0 * (fa + 4 * fm + fb);
  double left = (m - a) / 6.0 * (fa + 4 * flm + fm);
  double right = (b - m) / 6.0 * (fm + 4 * frm + fb);
  if (depth <= 0 || std::abs(left + right - whole) < 15 * eps)
    return left + right + (left + right - whole) / 15.0;
  return simpson(f, a, m, fa, flm, fm, eps / 2, depth - 1) +
         simpson(f, m, b, fm, frm, fb, eps / 2, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b, double eps) {
  double m = 0.5 * (a + b);
  return simpson(f, a, b, f(a), f(m), f(b), eps, 60);
}

// C and V by direct integration of the BI-AWGN information density moments:
// with y ~ N(sqrt(rho), 1),  i(y) = 1 - log2(1 + e^{-2 sqrt(rho) y}).
CapacityDispersion oracle_cd(double rho) {
  double s = std::sqrt(rho);
  auto phi = [](double z) { return std::exp(-0.5 * z * z) / std::sqrt(2 * M_PI); };
  auto info = [&](double y) {
    double e = -2 * s * y;
    // log2(1 + exp(e)) without overflow
    double l = e > 30 ? e / std::log(2.0) : std::log1p(std::exp(e)) / std::log(2.0);
    return 1.0 - l;
  };
  double lo = s - 14, hi = s + 14;  // +-14 sigma around the conditional mean
  double c = integrate([&](double y) { return phi(y - s) * info(y); }, lo, hi, 1e-13);
  double v = integrate(
      [&](double y) {
        double d = info(y) - c;
        return phi(y - s) * d * d;
      },
      lo, hi, 1e-13);
  return {c, v};
}

}  // namespace

TEST_CASE("capacity and dispersion match an independent quadrature to 1e-8") {
  // log-spaced sweep of rho in [0.01, 100]
  for (int i = 0; i <= 40; ++i) {
    double rho = std::pow(10.0, -2.0 + 4.0 * i / 40.0);
    CapacityDispersion got = capacity_dispersion(rho);
    CapacityDispersion want = oracle_cd(rho);
    CAPTURE(rho);
    CHECK(std::abs(got.c - want.c) < 1e-8);
    CHECK(std::abs(got.v - want.v) < 1e-8);
  }
}

TEST_CASE("capacity limits: 0 at rho -> 0, 1 bit at high SNR") {
  CHECK(capacity_dispersion(1e-12).c < 1e-5);
  CHECK(capacity_dispersion(1000.0).c == Approx(1.0).epsilon(1e-9));
  // dispersion vanishes at both extremes, peaks in between
  CHECK(capacity_dispersion(1e-9).v < 1e-6);
  CHECK(capacity_dispersion(1000.0).v < 1e-6);
  CHECK(capacity_dispersion(1.0).v > 0.1);
}

TEST_CASE("qfunc and its inverse") {
  CHECK(qfunc(0) == Approx(0.5));
  CHECK(qfunc(1.959963984540054) == Approx(0.025).epsilon(1e-12));
  for (double p : {1e-9, 1e-6, 1e-5, 1e-3, 0.1, 0.3, 0.5, 0.7, 0.9, 1 - 1e-6}) {
    CAPTURE(p);
    CHECK(qfunc(qfunc_inv(p)) == Approx(p).epsilon(1e-12));
  }
  for (double x : {-5.0, -1.0, 0.0, 0.5, 3.0, 6.0}) {
    CAPTURE(x);
    CHECK(qfunc_inv(qfunc(x)) == Approx(x).epsilon(1e-10));
  }
}

TEST_CASE("normal approximation collapses to capacity at eps = 1/2") {
  FbCache cache;
  for (int i = 0; i < 50; ++i) {
    double rho = std::pow(10.0, -1.0 + 2.5 * i / 49.0);
    CAPTURE(rho);
    CHECK(std::abs(normal_approx_rate(128, rho, 0.5, &cache) - capacity_dispersion(rho).c) <
          1e-9);
  }
}

TEST_CASE("rate decreases with stricter eps and grows with n") {
  FbCache cache;
  double rho = db_to_linear(4.0);
  CHECK(normal_approx_rate(128, rho, 1e-3, &cache) > normal_approx_rate(128, rho, 1e-5, &cache));
  CHECK(normal_approx_rate(256, rho, 1e-5, &cache) > normal_approx_rate(128, rho, 1e-5, &cache));
}

TEST_CASE("reference_snr round trip |R(n, rho_r, eps) - r| <= 1e-9") {
  FbCache cache;
  for (auto [n, r, eps] : {std::tuple<std::size_t, double, double>{128, 0.5, 1e-5},
                           {128, 0.5, 1e-3},
                           {1000, 0.747, 1e-5},
                           {64, 0.5625, 1e-2},
                           {32, 0.9, 1e-4}}) {
    CAPTURE(n);
    CAPTURE(r);
    double rho = reference_snr(n, r, eps, &cache);
    CHECK(std::abs(normal_approx_rate(n, rho, eps, &cache) - r) <= 1e-9);
  }
}

TEST_CASE("reference_snr at the (128, 0.5, 1e-5) operating point") {
  // the classic eBCH(128,64) benchmark sits near 4.58 dB
  double rho = reference_snr(128, 0.5, 1e-5, nullptr);
  CHECK(linear_to_db(rho) == Approx(4.5818).epsilon(1e-3));
}

TEST_CASE("reference_snr rejects degenerate rates") {
  CHECK_THROWS(reference_snr(128, 0.0, 1e-5, nullptr));
  CHECK_THROWS(reference_snr(128, 1.0, 1e-5, nullptr));
  CHECK_THROWS(reference_snr(128, 1.5, 1e-5, nullptr));
}

TEST_CASE("cache returns the same values as the direct path") {
  FbCache cache;
  for (double rho : {0.5, 1.0, 2.88}) {
    double a = normal_approx_rate(128, rho, 1e-5, &cache);
    double b = normal_approx_rate(128, rho, 1e-5, &cache);  // cached second time
    double c = normal_approx_rate(128, rho, 1e-5, nullptr);
    CHECK(a == b);
    CHECK(a == c);
  }
}
