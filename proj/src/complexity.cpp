#include "urllc/complexity.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace urllc {

BigInt tep_count(std::size_t k, const Order& s) {
  if (BigInt(s.num) > BigInt(k) * s.den)
    throw std::domain_error("tep_count: order exceeds k");
  const std::int64_t fl = s.floor();
  BigInt total = 0;
  for (std::int64_t i = 0; i <= fl; ++i) total += binomial(std::int64_t(k), i);
  if (s.frac_num() != 0)
    total += (s.frac_num() * binomial(std::int64_t(k), fl + 1)) / s.frac_den();
  return total;
}

BigRat per_bit_complexity_exact(std::size_t n, std::size_t k, std::size_t q, const Order& s) {
  if (k == 0 || n < k) throw std::domain_error("per_bit_complexity: need n >= k >= 1");
  BigInt l = tep_count(k, s);
  // n k + (|L|/2) (n - q + q n / k)  ==  n k + |L| (k (n - q) + q n) / (2 k)
  BigRat kk = BigRat(BigInt(n) * k) +
              BigRat(l * (BigInt(k) * (n - q) + BigInt(q) * n), BigInt(2) * k);
  return kk;
}

double per_bit_complexity(std::size_t n, std::size_t k, std::size_t q, const Order& s) {
  return per_bit_complexity_exact(n, k, q, s).convert_to<double>();
}

ComplexityOrder complexity_order(std::size_t n, std::size_t k, const Order& s) {
  (void)n;
  ComplexityOrder co;
  co.text = "O(n k^" + s.to_string() + ")";
  double sv = s.value();
  co.stirling_term = std::exp(sv * std::log(double(k)) - std::lgamma(sv + 1.0));
  co.exact_binomial = binomial(std::int64_t(k), s.floor());
  return co;
}

LatencyBreakdown aggregate_latency(std::size_t n, std::size_t k, double K,
                                   double ts, double tb) {
  LatencyBreakdown lb;
  lb.airtime = double(n) * ts;
  lb.decoding = double(k) * K * tb;
  lb.total = lb.airtime + lb.decoding;
  return lb;
}

double complexity_budget(double lm, std::size_t n, std::size_t k, double ts, double tb) {
  double air = double(n) * ts;
  if (lm < air) throw std::domain_error("complexity_budget: deadline below airtime");
  if (tb == 0) return std::numeric_limits<double>::infinity();
  return (lm - air) / (double(k) * tb);
}

OrderBound max_order(std::size_t n, std::size_t k, std::size_t q, double budget) {
  OrderBound ob;

  // exact: largest order on the 1/100 grid whose exact complexity fits
  if (std::isinf(budget)) {
    ob.s_max_exact = Order(std::int64_t(k), 1);
  } else {
    BigRat cap(budget);
    if (per_bit_complexity_exact(n, k, q, Order(0, 1)) > cap)
      throw std::domain_error("max_order: budget below order-0 complexity");
    std::int64_t lo = 0, hi = std::int64_t(k) * 100;  // fits(lo) holds
    while (lo < hi) {
      std::int64_t mid = lo + (hi - lo + 1) / 2;
      if (per_bit_complexity_exact(n, k, q, Order::from_centi(mid)) <= cap)
        lo = mid;
      else
        hi = mid - 1;
    }
    ob.s_max_exact = Order::from_centi(lo);
  }
  ob.k_at_exact = per_bit_complexity(n, k, q, ob.s_max_exact);

  // entropy-bound closed form
  double nk = double(n) * k;
  double denom = double(n) * (k + q) - double(q) * k;
  double tau = double(k) * (budget - nk) / denom;
  if (!(tau > 1.0)) {
    ob.s_max_approx = 0.0;
  } else {
    double u = (1.0 + std::log2(tau)) / double(k);
    double rad = 1.0 - std::pow(u, 4.0 / 3.0);
    if (rad < 0) rad = 0;
    ob.s_max_approx = 0.5 * double(k) * (1.0 - std::sqrt(rad));
  }
  return ob;
}

double amdahl_speedup(double alpha, unsigned procs) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw std::domain_error("amdahl: alpha in [0,1]");
  if (procs == 0) throw std::domain_error("amdahl: procs >= 1");
  return 1.0 / (alpha / double(procs) + (1.0 - alpha));
}

double effective_tb(double tb, double alpha, unsigned procs) {
  return tb / amdahl_speedup(alpha, procs);
}

}  // namespace urllc
