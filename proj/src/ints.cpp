#include "supercong/ints.hpp"

#include <algorithm>
#include <cmath>

#include "supercong/errors.hpp"

namespace supercong {

std::string to_string_u128(u128 v) {
  if (v == 0) return "0";
  char buf[48];
  int i = 48;
  while (v > 0) {
    buf[--i] = char('0' + (unsigned)(v % 10));
    v /= 10;
  }
  return std::string(buf + i, buf + 48);
}

std::string to_string_i128(i128 v) {
  if (v < 0) return "-" + to_string_u128((u128)(-v));
  return to_string_u128((u128)v);
}

u128 parse_u128(const std::string& s) {
  u128 v = 0;
  if (s.empty()) throw Error(ErrorKind::BadConfig, "empty integer literal");
  for (char c : s) {
    if (c < '0' || c > '9')
      throw Error(ErrorKind::BadConfig, "bad integer literal: " + s);
    v = v * 10 + (u128)(c - '0');
  }
  return v;
}

u64 isqrt_u128(u128 n) {
  if (n == 0) return 0;
  u64 r = (u64)std::sqrt((double)n);
  // sqrt on a double is only an estimate at this width; settle exactly.
  while (r > 0 && (u128)r * r > n) --r;
  while ((u128)(r + 1) * (r + 1) <= n) ++r;
  return r;
}

u128 gcd_u128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u128 mulmod_any(u128 a, u128 b, u128 m) {
  if (m == 0) throw Error(ErrorKind::BadConfig, "zero modulus");
  a %= m;
  b %= m;
  if (m <= (u128)UINT64_MAX) return (u128)((u128)a * b % m);
  if (a < b) std::swap(a, b);
  u128 r = 0;
  while (b != 0) {
    if (b & 1) {
      r += a;
      if (r >= m) r -= m;
    }
    a <<= 1;
    if (a >= m) a -= m;
    b >>= 1;
  }
  return r;
}

ResMod ResMod::generic(u128 m) {
  ResMod r;
  r.m = m;
  r.big = m > (u128)UINT64_MAX;
  r.q = 0;
  return r;
}

ResMod ResMod::prime_power(u64 p, int j) {
  ResMod r;
  u128 m = 1;
  for (int i = 0; i < j; ++i) m *= p;
  r.m = m;
  r.big = m > (u128)UINT64_MAX;
  if (r.big) {
    u128 q = 1;
    for (int i = 0; i < (j + 1) / 2; ++i) q *= p;
    r.q = (u64)q;  // p < 2^20, j <= 6 => q <= p^3 < 2^60
  }
  return r;
}

u128 ResMod::mul(u128 a, u128 b) const {
  if (!big) return (u128)((u64)a) * (u64)b % (u64)m;
  if (q == 0) return mulmod_any(a, b, m);
  u64 a1 = (u64)(a / q), a0 = (u64)(a % q);
  u64 b1 = (u64)(b / q), b0 = (u64)(b % q);
  // q^2 == 0 mod m, so only the low and single-q terms survive.
  u128 low = (u128)a0 * b0;
  u128 cross = (u128)a0 * b1 + (u128)a1 * b0;
  u64 l0 = (u64)(low % q);
  cross += low / q;
  u64 mq = (u64)(m / q);
  u64 c1 = (u64)(cross % mq);
  return (u128)l0 + (u128)c1 * q;
}

u128 ResMod::pow(u128 a, u128 e) const {
  u128 r = m == 1 ? 0 : 1;
  a %= m;
  while (e != 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

u128 ResMod::inv(u128 a) const {
  a %= m;
  // Extended Euclid tracking only the coefficient of a.
  i128 t0 = 0, t1 = 1;
  u128 r0 = m, r1 = a;
  while (r1 != 0) {
    u128 qt = r0 / r1;
    u128 r2 = r0 - qt * r1;
    i128 t2 = t0 - (i128)qt * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  if (r0 != 1)
    throw Error(ErrorKind::NotInvertible,
                "not invertible: gcd(" + to_string_u128(a) + ", " +
                    to_string_u128(m) + ") != 1");
  if (t0 < 0) t0 += (i128)m;
  return (u128)t0;
}

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::NotPIntegral: return "NotPIntegral";
    case ErrorKind::DividesBase: return "DividesBase";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::DivisionByZeroValue: return "DivisionByZeroValue";
    case ErrorKind::NoReconstruction: return "NoReconstruction";
    case ErrorKind::NonIntegral: return "NonIntegral";
    case ErrorKind::TopOutOfRange: return "TopOutOfRange";
    case ErrorKind::NormalizationImpossible: return "NormalizationImpossible";
    case ErrorKind::UnboundSymbol: return "UnboundSymbol";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::Inconsistent: return "Inconsistent";
    case ErrorKind::BadConfig: return "BadConfig";
  }
  return "Unknown";
}

}  // namespace supercong
