#include "urllc/combinatorics.hpp"

#include <numeric>
#include <stdexcept>

namespace urllc {

BigInt binomial(std::int64_t n, std::int64_t r) {
  if (r < 0 || n < 0 || r > n) return 0;
  if (r > n - r) r = n - r;
  BigInt acc = 1;
  for (std::int64_t i = 1; i <= r; ++i) {
    acc *= (n - r + i);
    acc /= i;  // exact at every step: acc is C(n-r+i, i)
  }
  return acc;
}

Order::Order(std::int64_t n, std::int64_t d) : num(n), den(d) {
  if (d <= 0 || n < 0) throw std::invalid_argument("Order: need num >= 0 and den > 0");
  std::int64_t g = std::gcd(n, d);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

Order Order::parse(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("Order::parse: empty string");
  auto bad = [&] { throw std::invalid_argument("Order::parse: bad order '" + text + "'"); };
  auto digits = [&](const std::string& s) {
    if (s.empty()) bad();
    std::int64_t v = 0;
    for (char c : s) {
      if (c < '0' || c > '9') bad();
      v = v * 10 + (c - '0');
      if (v < 0) bad();  // overflow
    }
    return v;
  };
  auto slash = text.find('/');
  if (slash != std::string::npos)
    return Order(digits(text.substr(0, slash)), digits(text.substr(slash + 1)));
  auto dot = text.find('.');
  if (dot == std::string::npos) return Order(digits(text), 1);
  std::string ip = text.substr(0, dot), fp = text.substr(dot + 1);
  if (ip.empty()) ip = "0";
  if (fp.empty()) return Order(digits(ip), 1);
  if (fp.size() > 12) bad();  // keep int64 exact
  std::int64_t den = 1;
  for (std::size_t i = 0; i < fp.size(); ++i) den *= 10;
  return Order(digits(ip) * den + digits(fp), den);
}

Order Order::from_centi(std::int64_t centi) { return Order(centi, 100); }

std::string Order::to_string() const {
  if (den == 1) return std::to_string(num);
  // decimal when the denominator is a 2^a 5^b divisor of a power of ten
  std::int64_t d = den;
  int twos = 0, fives = 0;
  while (d % 2 == 0) { d /= 2; ++twos; }
  while (d % 5 == 0) { d /= 5; ++fives; }
  if (d != 1) return std::to_string(num) + "/" + std::to_string(den);
  int digits = twos > fives ? twos : fives;
  std::int64_t scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  std::int64_t scaled = num * (scale / den);
  std::string ip = std::to_string(scaled / scale);
  std::string fp = std::to_string(scaled % scale);
  fp.insert(fp.begin(), digits - fp.size(), '0');
  while (!fp.empty() && fp.back() == '0') fp.pop_back();
  return fp.empty() ? ip : ip + "." + fp;
}

}  // namespace urllc
