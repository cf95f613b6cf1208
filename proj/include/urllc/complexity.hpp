#pragma once
// Decoding complexity and latency model:
//   |L_TEP|(k, s) = sum_{i<=floor(s)} C(k,i) + floor((s - floor(s)) C(k, floor(s)+1))
//   K(n, k, q, s) = n k + (|L_TEP|/2) (n - q + q n / k)      [binary ops per info bit]
//   L_A = n T_s + k K T_b
// plus the complexity budget of a latency cap, the largest affordable order
// (exact grid search and closed-form entropy approximation), and Amdahl
// scaling of the back-end bit time.

#include <cstddef>
#include <cstdint>
#include <string>

#include "urllc/combinatorics.hpp"

namespace urllc {

// Exact TEP list size, Eq.-style fractional order: 0 <= s <= k.
BigInt tep_count(std::size_t k, const Order& s);

// Exact rational per-information-bit complexity; use to_double for reports.
BigRat per_bit_complexity_exact(std::size_t n, std::size_t k, std::size_t q, const Order& s);
double per_bit_complexity(std::size_t n, std::size_t k, std::size_t q, const Order& s);

// Diagnostic: Stirling-order prefactor k^s / Gamma(s+1) next to the exact
// binomial C(k, floor(s)); the asymptotic class is O(n k^s).
struct ComplexityOrder {
  std::string text;       // "O(n k^s)"
  double stirling_term;   // k^s / Gamma(s+1)
  BigInt exact_binomial;  // C(k, floor(s))
};
ComplexityOrder complexity_order(std::size_t n, std::size_t k, const Order& s);

struct LatencyBreakdown {
  double airtime;   // n T_s
  double decoding;  // k K T_b
  double total;     // L_A
};
LatencyBreakdown aggregate_latency(std::size_t n, std::size_t k, double K,
                                   double ts, double tb);

// Largest per-bit complexity affordable under a hard latency cap:
// (L_M - n T_s) / (k T_b). Returns +inf when tb == 0; throws
// std::domain_error when L_M < n T_s.
double complexity_budget(double lm, std::size_t n, std::size_t k, double ts, double tb);

// Largest order (on the 1/100 grid, capped at k) whose exact complexity
// fits the budget, next to the closed-form entropy-bound approximation
//   tau = k (B - n k) / (n (k + q) - q k)
//   s_m ~ (k/2) (1 - sqrt(1 - ((1 + log2 tau)/k)^(4/3)))
struct OrderBound {
  Order s_max_exact;
  double s_max_approx;
  double k_at_exact;  // complexity of the exact order, for inspection
};
OrderBound max_order(std::size_t n, std::size_t k, std::size_t q, double budget);

// Amdahl: U = 1 / (alpha/P + (1 - alpha)); effective bit time tb / U.
double amdahl_speedup(double alpha, unsigned procs);
double effective_tb(double tb, double alpha, unsigned procs);

}  // namespace urllc
