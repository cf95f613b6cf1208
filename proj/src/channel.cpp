#include "urllc/channel.hpp"

#include <cmath>
#include <numbers>

namespace urllc {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

inline std::uint64_t mix64(std::uint64_t z) {  // splitmix64 finalizer
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t stream,
                           std::uint64_t trial, std::uint64_t index) {
  std::uint64_t z = seed;
  z = mix64(z + kGolden * (stream + 1));
  z = mix64(z + kGolden * (trial + 1));
  z = mix64(z + kGolden * (index + 1));
  return z;
}

double counter_normal(std::uint64_t seed, std::uint64_t stream,
                      std::uint64_t trial, std::uint64_t index) {
  // two independent words per draw; Box-Muller cosine branch
  std::uint64_t h1 = counter_hash(seed, stream, trial, 2 * index);
  std::uint64_t h2 = counter_hash(seed, stream, trial, 2 * index + 1);
  double u1 = double((h1 >> 11) + 1) * 0x1.0p-53;  // (0, 1], log stays finite
  double u2 = double(h2 >> 11) * 0x1.0p-53;        // [0, 1)
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

BitVec random_message(std::size_t k, std::uint64_t seed, std::uint64_t trial) {
  BitVec v(k);
  for (std::size_t j = 0; j < v.w.size(); ++j)
    v.w[j] = counter_hash(seed, std::uint64_t(Stream::message), trial, j);
  v.clear_tail();
  return v;
}

std::vector<double> modulate(const BitVec& c) {
  std::vector<double> x(c.n);
  for (std::size_t i = 0; i < c.n; ++i) x[i] = c.get(i) ? 1.0 : -1.0;
  return x;
}

std::vector<double> transmit(const std::vector<double>& x, double rho,
                             std::uint64_t seed, std::uint64_t trial) {
  const double a = std::sqrt(rho);
  std::vector<double> y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    y[i] = a * x[i] + counter_normal(seed, std::uint64_t(Stream::noise), trial, i);
  return y;
}

double bit_error_prob_uncoded(double rho) {
  return 0.5 * std::erfc(std::sqrt(rho) / std::numbers::sqrt2);
}

}  // namespace urllc
