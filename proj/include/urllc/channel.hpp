#pragma once
// BI-AWGN channel: BPSK mapping, counter-based Gaussian noise, SNR helpers.
//
// All randomness is counter-based: the value drawn for (seed, stream, trial,
// index) is a pure function of those four integers, so simulations are
// reproducible bit-for-bit no matter how trials are scheduled across workers.

#include <cmath>
#include <cstdint>
#include <vector>

#include "urllc/gf2.hpp"

namespace urllc {

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double lin) { return 10.0 * std::log10(lin); }

// stream ids keep message bits and noise draws on disjoint counters
enum class Stream : std::uint64_t { message = 1, noise = 2, aux = 3 };

// 64-bit mix of (seed, stream, trial, index); splitmix64 finalizer chain.
std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t stream,
                           std::uint64_t trial, std::uint64_t index);

// Standard normal via Box-Muller on two counter words.
double counter_normal(std::uint64_t seed, std::uint64_t stream,
                      std::uint64_t trial, std::uint64_t index);

// Uniformly random message bits for one trial.
BitVec random_message(std::size_t k, std::uint64_t seed, std::uint64_t trial);

// BPSK: bit b -> 2b - 1 in {-1, +1}.
std::vector<double> modulate(const BitVec& c);

// y_i = sqrt(rho) x_i + z_i with z_i ~ N(0,1) drawn from the trial's counter.
std::vector<double> transmit(const std::vector<double>& x, double rho,
                             std::uint64_t seed, std::uint64_t trial);

// Uncoded BPSK bit error probability Q(sqrt(rho)).
double bit_error_prob_uncoded(double rho);

}  // namespace urllc
