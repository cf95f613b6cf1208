#pragma once
// Linear block codes: the LinearCode record, extended-BCH construction,
// systematic info-bit extraction, and minimum-distance checks.

#include <cstddef>
#include <string>

#include "urllc/gf2.hpp"

namespace urllc {

struct LinearCode {
  std::string label;
  std::size_t n = 0, k = 0;
  std::size_t d_min = 0;   // designed minimum distance of the construction
  BitMatrix g;             // k x n generator, full row rank (not systematic in general)

  BitVec encode(const BitVec& u) const { return mat_vec_mod2(g, u); }
};

// Recovers u from a codeword c = u*G for a full-rank G. Precomputes a set of
// k pivot columns J and the k x k inverse of G restricted to J, so that
// u = c|_J * inv(G_J).
struct InfoExtractor {
  std::vector<std::size_t> pivot_cols;
  BitMatrix inv;  // k x k

  explicit InfoExtractor(const BitMatrix& g);
  BitVec extract(const BitVec& codeword) const;
};

// Extended narrow-sense binary BCH code of length n = 2^m with dimension k.
// The base BCH(n-1, k) generator g(x) is the LCM of the minimal polynomials
// of alpha, alpha^2, ..., alpha^{2t}; rows of G are x^i g(x) for
// i = 0..k-1, extended by an overall even-parity column. The returned d_min
// is the designed distance of the base code plus one. Throws
// std::invalid_argument when no designed t yields dimension k.
LinearCode build_ebch(std::size_t n, std::size_t k);

// Exact minimum nonzero codeword weight by exhaustive enumeration (k <= 20).
std::size_t min_distance_exhaustive(const LinearCode& c);

}  // namespace urllc
