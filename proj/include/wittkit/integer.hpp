#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace wittkit {

using Integer = boost::multiprecision::cpp_int;

inline Integer abs(const Integer& x) { return x < 0 ? Integer(-x) : x; }

inline Integer gcd(Integer a, Integer b) {
  a = abs(a);
  b = abs(b);
  while (b != 0) {
    Integer r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

inline Integer pow2(unsigned k) { return Integer(1) << k; }

inline Integer ipow(Integer base, unsigned k) {
  Integer r = 1;
  while (k) {
    if (k & 1u) r *= base;
    base *= base;
    k >>= 1;
  }
  return r;
}

// Extended gcd: returns g = gcd(a,b) >= 0 with s*a + t*b = g.
struct Bezout {
  Integer g, s, t;
};

inline Bezout xgcd(const Integer& a, const Integer& b) {
  Integer r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    Integer q = r0 / r1;
    Integer tmp = r0 - q * r1;
    r0 = std::move(r1);
    r1 = std::move(tmp);
    tmp = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(tmp);
    tmp = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(tmp);
  }
  if (r0 < 0) return {-r0, -s0, -t0};
  return {r0, s0, t0};
}

// floor(log2(x)) when x is an exact power of two, -1 otherwise.
inline int exact_log2(const Integer& x) {
  if (x <= 0) return -1;
  unsigned msb = boost::multiprecision::msb(x);
  return (Integer(1) << msb) == x ? static_cast<int>(msb) : -1;
}

// Ceiling division for a possibly negative numerator and positive divisor.
constexpr std::int64_t ceil_div(std::int64_t num, std::int64_t den) {
  std::int64_t q = num / den;
  if (num % den != 0 && num > 0) ++q;
  return q;
}

constexpr std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

inline std::string to_string(const Integer& x) { return x.str(); }

}  // namespace wittkit
