#pragma once

#include <cstdint>
#include <string>
#include <stdexcept>

namespace supercong {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

std::string to_string_u128(u128 v);
std::string to_string_i128(i128 v);
u128 parse_u128(const std::string& s);

// Integer square root, exact floor.
u64 isqrt_u128(u128 n);

u128 gcd_u128(u128 a, u128 b);

// a*b mod m for arbitrary m < 2^127. Fast when m fits a 64-bit word,
// bitwise shift-add otherwise. Hot paths should prefer ResMod below.
u128 mulmod_any(u128 a, u128 b, u128 m);

// Modulus p^j with a fast multiply. When m exceeds 64 bits the operands
// are split in base q = p^ceil(j/2); since q^2 == 0 (mod p^j) the high
// cross term drops out and three word-sized divisions suffice.
struct ResMod {
  u128 m = 0;
  u64 q = 0;  // base for the split, only set when big
  bool big = false;

  ResMod() = default;
  // Generic modulus (no p-power structure known): big path falls back to
  // mulmod_any.
  static ResMod generic(u128 m);
  // p-power modulus p^j.
  static ResMod prime_power(u64 p, int j);

  u128 reduce_i64(i64 v) const {
    i128 r = (i128)v % (i128)m;
    if (r < 0) r += (i128)m;
    return (u128)r;
  }
  u128 add(u128 a, u128 b) const {
    u128 s = a + b;
    if (s >= m) s -= m;
    return s;
  }
  u128 sub(u128 a, u128 b) const { return a >= b ? a - b : a + (m - b); }
  u128 neg(u128 a) const { return a == 0 ? 0 : m - a; }
  u128 mul(u128 a, u128 b) const;
  u128 pow(u128 a, u128 e) const;
  // Throws Error(NotInvertible) when gcd(a, m) > 1.
  u128 inv(u128 a) const;
};

}  // namespace supercong
