#pragma once
// Exact big-integer combinatorics and the exact rational decoder order.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace urllc {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// C(n, r) exact; zero outside 0 <= r <= n.
BigInt binomial(std::int64_t n, std::int64_t r);

// Reprocessing order as an exact rational s = num/den >= 0. Decimal strings
// ("2.5", "0.07") and integer strings parse exactly; doubles are only
// accepted for values that are exact on the 1/100 grid used by searches.
struct Order {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Order() = default;
  Order(std::int64_t n, std::int64_t d);           // normalizes, requires d > 0, n >= 0
  static Order parse(const std::string& text);     // "5", "2.5", "7/2"
  static Order from_centi(std::int64_t centi);     // centi/100

  std::int64_t floor() const { return num / den; }
  bool is_integer() const { return den == 1; }
  double value() const { return double(num) / double(den); }
  // fractional part as (p, q): s - floor(s) = p/q with 0 <= p < q
  std::int64_t frac_num() const { return num % den; }
  std::int64_t frac_den() const { return den; }

  bool operator==(const Order& o) const { return num == o.num && den == o.den; }
  bool operator<(const Order& o) const { return BigInt(num) * o.den < BigInt(o.num) * den; }
  std::string to_string() const;                   // minimal decimal or "p/q"
};

}  // namespace urllc
