#include "urllc/code.hpp"

#include <bit>
#include <stdexcept>

#include "urllc/gf2_field.hpp"

namespace urllc {

InfoExtractor::InfoExtractor(const BitMatrix& g) {
  const std::size_t k = g.rows, n = g.cols;
  // eliminate a working copy while tracking row operations on an augmented
  // identity; the pivot columns J give u = c|_J * inv(G_J)
  BitMatrix a = g;
  BitMatrix t(k, k);
  for (std::size_t i = 0; i < k; ++i) t.set(i, i, true);

  std::size_t p = 0;
  for (std::size_t j = 0; j < n && p < k; ++j) {
    std::size_t r = p;
    while (r < k && !a.get(r, j)) ++r;
    if (r == k) continue;
    a.swap_rows(p, r);
    t.swap_rows(p, r);
    for (std::size_t i = 0; i < k; ++i)
      if (i != p && a.get(i, j)) {
        a.xor_rows(i, p);
        t.xor_rows(i, p);
      }
    pivot_cols.push_back(j);
    ++p;
  }
  if (p < k) throw std::invalid_argument("InfoExtractor: generator is rank deficient");
  // now t * G restricted to J is I_k, i.e. t = inv(G_J) acting on the left;
  // with row vectors u = c|_J * inv(G_J), and (c|_J)_i are coefficients of
  // rows of t: u = sum_i c[J_i] * t_row_i
  inv = t;
}

BitVec InfoExtractor::extract(const BitVec& codeword) const {
  const std::size_t k = inv.rows;
  BitVec sel(k);
  for (std::size_t i = 0; i < k; ++i)
    if (codeword.get(pivot_cols[i])) sel.set(i, true);
  return mat_vec_mod2(inv, sel);
}

LinearCode build_ebch(std::size_t n, std::size_t k) {
  if (n < 8 || (n & (n - 1)) != 0)
    throw std::invalid_argument("build_ebch: n must be a power of two >= 8");
  int m = std::countr_zero(n);
  const std::size_t nb = n - 1;  // base BCH length 2^m - 1
  if (k == 0 || k > nb) throw std::invalid_argument("build_ebch: k out of range");

  GF2mField f = build_field(m);

  // walk designed t upward, g_t(x) = lcm of minimal polys of alpha^1..alpha^2t;
  // remember the largest designed distance that hits dimension k
  std::vector<std::uint8_t> g = {1};
  std::size_t best_t = 0;
  bool found = false;
  std::vector<std::uint8_t> best_g;
  for (std::size_t t = 1; 2 * t + 1 <= nb; ++t) {
    for (int e = int(2 * (t - 1) + 1); e <= int(2 * t); ++e)
      g = poly_lcm_gf2(g, minimal_poly(f, e));
    std::size_t deg = g.size() - 1;
    if (deg >= nb) break;
    std::size_t dim = nb - deg;
    if (dim == k) {
      best_t = t;
      best_g = g;
      found = true;  // keep scanning: consecutive t can share the same g
    }
    if (dim < k) break;  // dimensions only shrink from here
  }
  if (!found)
    throw std::invalid_argument("build_ebch: no designed distance gives dimension k for this n");

  // rows x^i g(x), i = 0..k-1, plus an overall even-parity column
  LinearCode c;
  c.label = "eBCH(" + std::to_string(n) + "," + std::to_string(k) + ")";
  c.n = n;
  c.k = k;
  c.d_min = 2 * best_t + 2;  // designed distance + 1
  c.g = BitMatrix(k, n);
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t w = 0;
    for (std::size_t j = 0; j < best_g.size(); ++j)
      if (best_g[j]) {
        c.g.set(i, i + j, true);
        ++w;
      }
    if (w & 1) c.g.set(i, n - 1, true);  // even overall parity
  }
  if (rank_mod2(c.g) != k) throw std::logic_error("build_ebch: generator lost rank");
  return c;
}

std::size_t min_distance_exhaustive(const LinearCode& c) {
  if (c.k > 20) throw std::invalid_argument("min_distance_exhaustive: k too large");
  std::size_t best = c.n + 1;
  for (std::uint64_t u = 1; u < (std::uint64_t(1) << c.k); ++u) {
    BitVec v(c.k);
    for (std::size_t i = 0; i < c.k; ++i)
      if ((u >> i) & 1) v.set(i, true);
    std::size_t w = c.encode(v).weight();
    if (w < best) best = w;
  }
  return best;
}

}  // namespace urllc
