#include "urllc/gf2_field.hpp"

#include <algorithm>
#include <stdexcept>

namespace urllc {

namespace {

// antilog table for alpha = x under `poly`; returns empty when x does not
// have full multiplicative order (poly not primitive)
std::vector<std::uint32_t> try_antilog(int m, std::uint32_t poly) {
  const std::uint32_t q = 1u << m;
  std::vector<std::uint32_t> table(q - 1, 0);
  std::uint32_t v = 1;
  for (std::uint32_t i = 0; i < q - 1; ++i) {
    table[i] = v;
    if (v == 1 && i > 0) return {};  // order of alpha divides i < q-1
    v <<= 1;
    if (v & q) v ^= poly;
  }
  // v must be back at 1 now (order exactly q-1)
  if (v != 1) return {};
  return table;
}

}  // namespace

std::uint32_t default_primitive_poly(int m) {
  if (m < 2 || m > 16) throw std::invalid_argument("default_primitive_poly: m must be in [2,16]");
  const std::uint32_t top = 1u << m;
  // constant term must be 1 for x to be invertible
  for (std::uint32_t p = top | 1; p < (top << 1); p += 2)
    if (!try_antilog(m, p).empty()) return p;
  throw std::logic_error("default_primitive_poly: none found");  // unreachable
}

GF2mField build_field(int m, std::uint32_t poly) {
  if (m < 2 || m > 16) throw std::invalid_argument("build_field: m must be in [2,16]");
  if (poly == 0) poly = default_primitive_poly(m);
  GF2mField f;
  f.m = m;
  f.poly = poly;
  f.q = 1u << m;
  f.antilog = try_antilog(m, poly);
  if (f.antilog.empty())
    throw std::invalid_argument("build_field: polynomial is not primitive for this m");
  f.log.assign(f.q, -1);
  for (std::uint32_t i = 0; i < f.q - 1; ++i) f.log[f.antilog[i]] = int(i);
  return f;
}

std::vector<int> cyclotomic_coset(const GF2mField& f, int e) {
  const int mod = int(f.q) - 1;
  std::vector<int> coset;
  int x = ((e % mod) + mod) % mod;
  do {
    coset.push_back(x);
    x = (x * 2) % mod;
  } while (x != coset.front());
  std::sort(coset.begin(), coset.end());
  return coset;
}

std::vector<std::uint8_t> minimal_poly(const GF2mField& f, int e) {
  // product over the coset of (x + alpha^j), coefficients in GF(2^m);
  // the result must collapse to GF(2)
  auto coset = cyclotomic_coset(f, e);
  std::vector<std::uint32_t> p = {1};  // p[i] = coeff of x^i
  for (int j : coset) {
    std::uint32_t root = f.pow_alpha(j);
    std::vector<std::uint32_t> np(p.size() + 1, 0);
    for (std::size_t i = 0; i < p.size(); ++i) {
      np[i + 1] ^= p[i];            // x * p
      np[i] ^= f.mul(root, p[i]);   // root * p
    }
    p = std::move(np);
  }
  std::vector<std::uint8_t> out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] > 1) throw std::logic_error("minimal_poly: product did not land in GF(2)");
    out[i] = std::uint8_t(p[i]);
  }
  return out;
}

std::vector<std::uint8_t> poly_mul_gf2(const std::vector<std::uint8_t>& a,
                                       const std::vector<std::uint8_t>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint8_t> r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] ^= b[j];
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

std::vector<std::uint8_t> poly_mod_gf2(std::vector<std::uint8_t> a,
                                       const std::vector<std::uint8_t>& b) {
  if (b.empty()) throw std::invalid_argument("poly_mod_gf2: division by zero polynomial");
  while (!a.empty() && a.back() == 0) a.pop_back();
  while (a.size() >= b.size()) {
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] ^= b[i];
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  return a;
}

std::vector<std::uint8_t> poly_lcm_gf2(const std::vector<std::uint8_t>& a,
                                       const std::vector<std::uint8_t>& b) {
  // gcd by euclid, then lcm = a*b / gcd
  auto x = a, y = b;
  while (!y.empty()) {
    auto r = poly_mod_gf2(x, y);
    x = y;
    y = r;
  }
  // divide a*b by x (exact)
  auto prod = poly_mul_gf2(a, b);
  std::vector<std::uint8_t> quot(prod.size() - x.size() + 1, 0);
  while (!prod.empty() && prod.size() >= x.size()) {
    std::size_t shift = prod.size() - x.size();
    quot[shift] = 1;
    for (std::size_t i = 0; i < x.size(); ++i) prod[shift + i] ^= x[i];
    while (!prod.empty() && prod.back() == 0) prod.pop_back();
  }
  if (!prod.empty()) throw std::logic_error("poly_lcm_gf2: division was not exact");
  return quot;
}

}  // namespace urllc
