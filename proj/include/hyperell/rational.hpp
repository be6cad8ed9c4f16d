#pragma once

// Exact integer / rational layer. Everything downstream (cyclotomics, character
// tables, idempotents) sits on these; no floating point anywhere.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hyperell {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int intGcd(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline bool isInteger(const Rational& q) { return denominator(q) == 1; }

inline Int asInteger(const Rational& q) {
  if (!isInteger(q)) throw std::runtime_error("rational is not an integer: " + q.str());
  return numerator(q);
}

inline long long toLongLong(const Int& v) {
  if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
    throw std::runtime_error("integer out of long long range: " + v.str());
  return static_cast<long long>(v);
}

inline std::string ratToString(const Rational& q) {
  if (isInteger(q)) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

// Parses "n" or "n/d" with optional leading '-'.
inline Rational ratFromString(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(Int(s));
  Int num(s.substr(0, slash));
  Int den(s.substr(slash + 1));
  if (den == 0) throw std::runtime_error("rational with zero denominator: " + s);
  return Rational(num, den);
}

inline long long gcdLL(long long a, long long b) { return std::gcd(a, b); }

inline long long lcmLL(long long a, long long b) {
  if (a == 0 || b == 0) return 0;
  return a / std::gcd(a, b) * b;
}

// Extended gcd on machine integers: returns g and x,y with a*x + b*y = g.
inline long long extGcd(long long a, long long b, long long& x, long long& y) {
  if (b == 0) {
    x = 1;
    y = 0;
    return a;
  }
  long long x1, y1;
  long long g = extGcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

inline long long invMod(long long a, long long m) {
  long long x, y;
  a %= m;
  if (a < 0) a += m;
  long long g = extGcd(a, m, x, y);
  if (g != 1) throw std::runtime_error("invMod: not invertible");
  x %= m;
  if (x < 0) x += m;
  return x;
}

inline long long powMod(long long base, long long exp, long long mod) {
  long long r = 1 % mod;
  base %= mod;
  if (base < 0) base += mod;
  while (exp > 0) {
    if (exp & 1) r = static_cast<long long>(static_cast<__int128>(r) * base % mod);
    base = static_cast<long long>(static_cast<__int128>(base) * base % mod);
    exp >>= 1;
  }
  return r;
}

}  // namespace hyperell
