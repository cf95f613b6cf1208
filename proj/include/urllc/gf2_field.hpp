#pragma once
// GF(2^m) arithmetic via log/antilog tables over a primitive polynomial,
// plus minimal-polynomial machinery for BCH generator construction.

#include <cstdint>
#include <vector>

namespace urllc {

struct GF2mField {
  int m = 0;
  std::uint32_t poly = 0;              // primitive polynomial, bit i = coeff of x^i
  std::uint32_t q = 0;                 // field size 2^m
  std::vector<std::uint32_t> antilog;  // antilog[i] = alpha^i, i in [0, q-2]
  std::vector<int> log;                // log[x] for x in [1, q-1]

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    return antilog[(log[a] + log[b]) % (q - 1)];
  }
  std::uint32_t pow_alpha(long long e) const {  // alpha^e, any integer e
    long long r = e % (long long)(q - 1);
    if (r < 0) r += q - 1;
    return antilog[r];
  }
};

// Smallest primitive polynomial of degree m when the coefficient bitmask is
// read as an integer (search + full-order verification, m in [2, 16]).
std::uint32_t default_primitive_poly(int m);

// Builds the tables; verifies that alpha = x has multiplicative order 2^m - 1
// under `poly` and throws std::invalid_argument otherwise.
GF2mField build_field(int m, std::uint32_t poly = 0);

// Cyclotomic coset of e modulo 2^m - 1 (sorted, smallest first).
std::vector<int> cyclotomic_coset(const GF2mField& f, int e);

// Minimal polynomial of alpha^e over GF(2), as a coefficient bitmask
// (bit i = coeff of x^i). Product over the coset of (x - alpha^{e 2^j}).
std::vector<std::uint8_t> minimal_poly(const GF2mField& f, int e);

// GF(2)[x] helpers on coefficient vectors (index = power, no trailing zeros).
std::vector<std::uint8_t> poly_mul_gf2(const std::vector<std::uint8_t>& a,
                                       const std::vector<std::uint8_t>& b);
std::vector<std::uint8_t> poly_mod_gf2(std::vector<std::uint8_t> a,
                                       const std::vector<std::uint8_t>& b);
std::vector<std::uint8_t> poly_lcm_gf2(const std::vector<std::uint8_t>& a,
                                       const std::vector<std::uint8_t>& b);

}  // namespace urllc
