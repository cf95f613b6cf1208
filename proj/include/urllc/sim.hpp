#pragma once
// Monte-Carlo harness: codeword error probability estimation with a
// deterministic stopping rule, SNR search for a target CEP, and tradeoff
// dataset generation.
//
// Trials are pure functions of (seed, trial index); outcomes are scanned in
// trial order, so estimates are identical for every worker count.

#include <cstdint>
#include <vector>

#include "urllc/code.hpp"
#include "urllc/osd.hpp"
#include "urllc/tradeoff.hpp"

namespace urllc {

struct StoppingRule {
  std::uint64_t target_errors = 100;
  std::uint64_t max_trials = 10000000;
};

struct WilsonInterval {
  double lo = 0, hi = 1;
};
WilsonInterval wilson_interval(std::uint64_t errors, std::uint64_t trials,
                               double z = 1.959963984540054);

struct CepEstimate {
  double cep = 0;
  std::uint64_t errors = 0;
  std::uint64_t trials = 0;
  WilsonInterval ci;
};

struct SimOptions {
  unsigned workers = 1;
  bool all_zero_message = false;  // linearity checks
  // optional early stop for SNR-search probes: once the Wilson interval
  // cleanly separates from classify_eps (checked at fixed block boundaries),
  // the verdict cannot change and the estimate returns early
  double classify_eps = 0;
};

CepEstimate estimate_cep(const DecoderContext& ctx, const DecoderConfig& cfg,
                         double rho_db, const StoppingRule& stop,
                         std::uint64_t seed, const SimOptions& opt = {});

// Bisection on SNR (dB) for CEP ~ eps_target, common random numbers across
// probes. Expands [lo, hi] up to [-10, 20] dB before giving up.
struct SnrWindow {
  double lo_db = -2, hi_db = 14;
  double tol_db = 0.05;
};
struct SnrSearchResult {
  double rho_db = 0;
  CepEstimate at_rho;             // estimate at the returned SNR
  std::vector<double> probes_db;  // diagnostic trace
};
SnrSearchResult required_snr_for_cep(const DecoderContext& ctx, const DecoderConfig& cfg,
                                     double eps_target, const SnrWindow& window,
                                     const StoppingRule& stop, std::uint64_t seed,
                                     const SimOptions& opt = {});

// Measures required SNR per order, converts to penalties against the
// finite-blocklength reference of (n, k/n, eps_target), and pairs them with
// the per-bit complexity of each order.
std::vector<TradeoffPoint> build_tradeoff_dataset(const LinearCode& code,
                                                  const std::vector<Order>& orders,
                                                  double eps_target, std::size_t q_bits,
                                                  const StoppingRule& stop,
                                                  std::uint64_t seed,
                                                  const SimOptions& opt = {});

}  // namespace urllc
