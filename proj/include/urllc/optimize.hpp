#pragma once
// The three link-design problems over the tradeoff model:
//   1. minimize end-to-end latency L_A subject to an SNR cap,
//   2. minimize per-information-bit energy subject to latency + SNR caps,
//   3. maximize the number of information bits subject to the same caps,
// plus a grid-scanning brute-force oracle over the raw constraints.

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "urllc/tradeoff.hpp"

namespace urllc {

struct Constraints {
  double epsilon = 1e-5;    // target codeword error probability
  double rho_max_db = std::numeric_limits<double>::infinity();
  double l_max = std::numeric_limits<double>::infinity();  // seconds
};

struct Hardware {
  double ts = 1e-6;     // symbol time, seconds
  double tb = 1e-9;     // per-operation back-end time, seconds
  double alpha = 1.0;   // parallelizable fraction (Amdahl)
  unsigned procs = 1;   // processors; effective tb = tb / U(alpha, procs)
  std::size_t q_bits = 8;  // quantizer resolution, for the order diagnostics
};

struct DesignPoint {
  bool feasible = false;
  std::string infeasible_reason;
  std::size_t n = 0, k = 0;
  double rho_r_db = 0;       // reference SNR of (n, k/n, eps)
  double delta_rho_db = 0;   // operating penalty
  double rho_total_db = 0;   // rho_r + delta_rho
  double log2_k_ops = 0;     // F at the operating penalty
  double k_ops = 0;          // 2^F
  double s_grid = 0;         // largest grid order affordable at k_ops
  double s_theorem = 0;      // closed-form order estimate
  double latency = 0;        // L_A seconds
  double e_b = 0;            // 10^(rho_total_db/10) / r, per info bit
  double objective = 0;      // the minimized/maximized quantity
};

struct NRange {
  std::size_t lo = 0, hi = 0;  // inclusive; 0,0 = derive from context
};

// Problem 1: argmin_n L_A(n) with full SNR headroom spent on complexity
// (delta_rho = rho_max - rho_r). Ties toward smaller n.
DesignPoint minimize_latency(std::size_t k, const Constraints& c, const Hardware& hw,
                             const ModelTable& models, NRange range = {},
                             std::vector<DesignPoint>* curve = nullptr);

// Problem 2: argmin_n e_b with the minimal penalty delta_rho_m(n, k) that
// fits the latency cap; feasible iff rho_r + delta_rho_m <= rho_max.
DesignPoint minimize_energy(std::size_t k, const Constraints& c, const Hardware& hw,
                            const ModelTable& models, NRange range = {},
                            std::vector<DesignPoint>* curve = nullptr);

// Problem 3: argmax_n k(n) = floor(n M(n, rho_max, eps)) over n <= L_M/T_s.
// Also reports the tb = 0 ideal k_inf = floor(n_inf R(n_inf, rho_max, eps)).
struct InfoBitsResult {
  DesignPoint best;
  std::size_t n_inf = 0;
  std::size_t k_inf = 0;
};
InfoBitsResult maximize_info_bits(const Constraints& c, const Hardware& hw,
                                  const ModelTable& models, NRange range = {},
                                  std::vector<DesignPoint>* curve = nullptr);

// Exhaustive scan over (n [, k], delta_rho grid of 0.01 dB plus the exact
// power-cap endpoint) honoring the raw constraints only; no closed forms.
enum class Problem { latency, energy, info_bits };
DesignPoint brute_force_oracle(Problem p, std::size_t k, const Constraints& c,
                               const Hardware& hw, const ModelTable& models,
                               NRange range);

}  // namespace urllc
