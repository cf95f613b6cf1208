#include "urllc/gf2.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace urllc {

void BitVec::xor_with(const BitVec& o) {
  if (n != o.n) throw std::invalid_argument("BitVec::xor_with: length mismatch");
  for (std::size_t i = 0; i < w.size(); ++i) w[i] ^= o.w[i];
}

std::size_t BitVec::weight() const {
  std::size_t c = 0;
  for (auto x : w) c += std::popcount(x);
  return c;
}

void BitVec::clear_tail() {
  if (n & 63) w.back() &= (std::uint64_t(1) << (n & 63)) - 1;
}

std::string BitVec::to_string() const {
  std::string s(n, '0');
  for (std::size_t i = 0; i < n; ++i)
    if (get(i)) s[i] = '1';
  return s;
}

void BitMatrix::xor_rows(std::size_t dst, std::size_t src) {
  std::uint64_t* d = row(dst);
  const std::uint64_t* s = row(src);
  for (std::size_t i = 0; i < wpr; ++i) d[i] ^= s[i];
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::uint64_t* ra = row(a);
  std::uint64_t* rb = row(b);
  for (std::size_t i = 0; i < wpr; ++i) std::swap(ra[i], rb[i]);
}

BitVec BitMatrix::row_vec(std::size_t i) const {
  BitVec v(cols);
  std::copy(row(i), row(i) + wpr, v.w.begin());
  return v;
}

Permutation::Permutation(std::size_t n) : map(n) {
  std::iota(map.begin(), map.end(), std::size_t(0));
}

bool Permutation::is_valid() const {
  std::vector<bool> seen(map.size(), false);
  for (auto i : map) {
    if (i >= map.size() || seen[i]) return false;
    seen[i] = true;
  }
  return true;
}

Permutation Permutation::inverse() const {
  Permutation inv;
  inv.map.resize(map.size());
  for (std::size_t i = 0; i < map.size(); ++i) inv.map[map[i]] = i;
  return inv;
}

std::vector<double> apply_forward(const std::vector<double>& v, const Permutation& p) {
  std::vector<double> r(v.size());
  for (std::size_t i = 0; i < p.map.size(); ++i) r[i] = v[p.map[i]];
  return r;
}

std::vector<double> apply_inverse(const std::vector<double>& v, const Permutation& p) {
  std::vector<double> r(v.size());
  for (std::size_t i = 0; i < p.map.size(); ++i) r[p.map[i]] = v[i];
  return r;
}

BitVec apply_forward(const BitVec& v, const Permutation& p) {
  BitVec r(v.n);
  for (std::size_t i = 0; i < p.map.size(); ++i)
    if (v.get(p.map[i])) r.set(i, true);
  return r;
}

BitVec apply_inverse(const BitVec& v, const Permutation& p) {
  BitVec r(v.n);
  for (std::size_t i = 0; i < p.map.size(); ++i)
    if (v.get(i)) r.set(p.map[i], true);
  return r;
}

BitMatrix permute_columns(const BitMatrix& m, const Permutation& p) {
  BitMatrix r(m.rows, m.cols);
  for (std::size_t j = 0; j < m.cols; ++j) {
    std::size_t src = p.map[j];
    for (std::size_t i = 0; i < m.rows; ++i)
      if (m.get(i, src)) r.set(i, j, true);
  }
  return r;
}

BitVec mat_vec_mod2(const BitMatrix& m, const BitVec& v) {
  if (v.n != m.rows) throw std::invalid_argument("mat_vec_mod2: v length != rows");
  BitVec r(m.cols);
  for (std::size_t i = 0; i < m.rows; ++i) {
    if (!v.get(i)) continue;
    const std::uint64_t* src = m.row(i);
    for (std::size_t t = 0; t < m.wpr; ++t) r.w[t] ^= src[t];
  }
  return r;
}

std::size_t rank_mod2(BitMatrix m) {
  std::size_t r = 0;
  for (std::size_t j = 0; j < m.cols && r < m.rows; ++j) {
    std::size_t piv = r;
    while (piv < m.rows && !m.get(piv, j)) ++piv;
    if (piv == m.rows) continue;
    m.swap_rows(r, piv);
    for (std::size_t i = 0; i < m.rows; ++i)
      if (i != r && m.get(i, j)) m.xor_rows(i, r);
    ++r;
  }
  return r;
}

SystematicForm gauss_jordan_systematic(const BitMatrix& g, const Permutation& preference) {
  const std::size_t k = g.rows, n = g.cols;
  if (preference.map.size() != n || !preference.is_valid())
    throw std::invalid_argument("gauss_jordan_systematic: preference is not a permutation of the columns");

  BitMatrix a = g;  // eliminate in the original column order, track pivots by index
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> deferred;
  pivots.reserve(k);

  std::size_t p = 0;  // next pivot row
  for (std::size_t t = 0; t < n && p < k; ++t) {
    std::size_t c = preference.map[t];
    // after full elimination of earlier pivots, column c is independent of
    // them iff some row >= p still has a 1 there
    std::size_t r = p;
    while (r < k && !a.get(r, c)) ++r;
    if (r == k) {
      deferred.push_back(c);
      continue;
    }
    a.swap_rows(p, r);
    for (std::size_t i = 0; i < k; ++i)
      if (i != p && a.get(i, c)) a.xor_rows(i, p);
    pivots.push_back(c);
    ++p;
  }
  if (p < k) throw std::invalid_argument("gauss_jordan_systematic: generator is rank deficient");

  // non-pivot part: deferred columns first (they appear earlier in the
  // preference walk), then the columns never reached; together that is just
  // all non-pivots in preference order
  SystematicForm out;
  out.kappa.map.reserve(n);
  out.kappa.map = pivots;
  std::vector<bool> taken(n, false);
  for (auto c : pivots) taken[c] = true;
  for (auto c : deferred) {
    out.kappa.map.push_back(c);
    taken[c] = true;
  }
  for (std::size_t t = 0; t < n; ++t) {
    std::size_t c = preference.map[t];
    if (!taken[c]) out.kappa.map.push_back(c);
  }
  out.g = permute_columns(a, out.kappa);
  return out;
}

}  // namespace urllc
