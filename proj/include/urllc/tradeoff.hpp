#pragma once
// The complexity-vs-power-penalty tradeoff law and its consequences.
//
// F(drho) = 1 / (a sqrt(drho) + b) predicts log2 of the per-bit complexity
// needed to close all but drho dB of the gap to the finite-blocklength
// reference SNR. a, b > 0; F is strictly decreasing with F(0) = 1/b.

#include <cstddef>
#include <string>
#include <vector>

namespace urllc {

struct TradeoffPoint {
  std::size_t n = 0, k = 0;
  double s = 0;             // decoder order that produced the point
  double delta_rho_db = 0;  // measured SNR penalty vs the reference
  double log2_k_ops = 0;    // log2 of per-bit complexity
  std::string source;       // "measured" | "synthetic"
};

struct TradeoffModel {
  double a = 0, b = 0;
  double fit_rmse = 0;
  double operator()(double delta_rho_db) const;  // F(drho), drho >= 0
};

// Least squares in log2-complexity space: reciprocal-transform linear init,
// then damped Gauss-Newton until the gradient norm drops below 1e-10.
// Requires >= 2 points with distinct delta_rho, all delta_rho >= 0 and all
// log2_k_ops > 0; throws std::invalid_argument otherwise or when the fitted
// a, b are not both positive.
TradeoffModel fit_tradeoff_model(const std::vector<TradeoffPoint>& pts);

// Model table keyed by blocklength.
struct ModelEntry {
  std::size_t n = 0;
  TradeoffModel model;
};
struct ModelTable {
  std::vector<ModelEntry> entries;        // kept sorted by n
  std::string interpolation = "nearest";  // "nearest" | "linear"

  void upsert(std::size_t n, const TradeoffModel& m);
  TradeoffModel lookup(std::size_t n) const;  // throws if empty
};

// Smallest power penalty whose complexity fits the latency budget
// B = (L_M - n T_s) / (k T_b)  [Lemma-1 closed form]:
//   drho_m = ((1/a) max{ 1/log2(B) - b, 0 })^2
// Returns 0 when tb == 0 (infinite budget); +inf when B <= 1 (nothing
// decodable); throws std::domain_error when lm < n ts.
double min_power_penalty(const TradeoffModel& m, double lm, std::size_t n,
                         std::size_t k, double ts, double tb);

// Largest achievable rate at blocklength n under SNR cap rho_db and latency
// cap lm: max k/n over integer k with k/n <= R(n, rho_db - drho_m(n,k), eps),
// scanned from k = n down. Returns 0 when no k is feasible.
struct RatePoint {
  double rate = 0;       // k/n of the winner (0 if infeasible)
  std::size_t k = 0;
  double delta_rho_db = 0;
  bool feasible = false;
};
RatePoint constrained_max_rate(const ModelTable& models, std::size_t n,
                               double rho_db, double epsilon, double lm,
                               double ts, double tb);

}  // namespace urllc
