#include "supercong/modular.hpp"

#include <numeric>

namespace supercong {

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (u64 d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

PrimeContext::PrimeContext(u64 p_, int e_, int W_) : p(p_), e(e_) {
  if (p < 3 || p >= kMaxPrime || !is_prime_u64(p))
    throw Error(ErrorKind::BadConfig,
                "PrimeContext requires an odd prime below 2^20, got " +
                    std::to_string(p));
  if (e < 1 || e > 3)
    throw Error(ErrorKind::BadConfig, "modulus exponent must be 1..3");
  W = W_ < 0 ? e + 3 : W_;
  if (W < e || W > 6)
    throw Error(ErrorKind::BadConfig, "working exponent must be in [e, 6]");
  ppow[0] = 1;
  for (int j = 1; j <= 6; ++j) ppow[j] = ppow[j - 1] * p;
  for (int j = 0; j <= W; ++j) rm[j] = ResMod::prime_power(p, j);
  pW = ppow[W];
  pe = ppow[e];
}

u128 mod_pow(u128 base, u128 exp, u128 m) {
  if (m < 2) throw Error(ErrorKind::BadConfig, "modulus must be >= 2");
  u128 r = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1) r = mulmod_any(r, base, m);
    base = mulmod_any(base, base, m);
    exp >>= 1;
  }
  return r;
}

u128 mod_inv(u128 a, u128 m) {
  if (m < 2) throw Error(ErrorKind::BadConfig, "modulus must be >= 2");
  return ResMod::generic(m).inv(a);
}

int symbol(i64 a, u64 p) {
  i64 r = a % (i64)p;
  if (r < 0) r += (i64)p;
  if (r == 0) return 0;
  u128 s = mod_pow((u128)r, (p - 1) / 2, p);
  if (s == 1) return 1;
  if (s == p - 1) return -1;
  throw Error(ErrorKind::BadConfig,
              "Euler criterion failed; " + std::to_string(p) + " not prime?");
}

u64 harmonic_sum_mod(u64 n, u64 p) {
  if (n >= p) throw Error(ErrorKind::BadConfig, "harmonic sum needs N < p");
  if (n == 0) return 0;
  // Batch inversion: one Euclid plus O(n) multiplications.
  std::vector<u64> prefix(n + 1);
  prefix[0] = 1;
  for (u64 k = 1; k <= n; ++k)
    prefix[k] = (u64)((u128)prefix[k - 1] * k % p);
  u64 inv_all = (u64)mod_inv(prefix[n], p);
  u64 sum = 0;
  for (u64 k = n; k >= 1; --k) {
    u64 inv_k = (u64)((u128)inv_all * prefix[k - 1] % p);
    sum = (sum + inv_k) % p;
    inv_all = (u64)((u128)inv_all * k % p);
  }
  return sum;
}

u128 fermat_term(i64 b, const PrimeContext& ctx) {
  return fermat_term_at(b, ctx, ctx.e);
}

u128 fermat_term_at(i64 b, const PrimeContext& ctx, int e) {
  if (b % (i64)ctx.p == 0)
    throw Error(ErrorKind::DividesBase,
                "fermat_term: p divides base " + std::to_string(b));
  const ResMod& mm = ctx.at(e);
  u128 v = mm.pow(mm.reduce_i64(b), ctx.p - 1);
  return mm.sub(v, 1 % mm.m);
}

Rational64 rational_reconstruct(u128 r, u128 m, u64 bound) {
  if (m < 2) throw Error(ErrorKind::BadConfig, "modulus must be >= 2");
  r %= m;
  if (r == 0) return {0, 1};
  // Walk the remainder sequence of (m, r); stop at the first remainder
  // within bound. Uniqueness is the caller's business via 2*bound^2 <= m.
  u64 stop = bound;
  u128 r0 = m, r1 = r;
  i128 t0 = 0, t1 = 1;
  while (r1 > stop) {
    u128 qt = r0 / r1;
    u128 r2 = r0 - qt * r1;
    i128 t2 = t0 - (i128)qt * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  if (r1 == 0 || t1 == 0) throw Error(ErrorKind::NoReconstruction,
                                      "no reconstruction within bound");
  i128 num = (i128)r1;
  i128 den = t1;
  if (den < 0) {
    den = -den;
    num = -num;
  }
  u128 a = num < 0 ? (u128)(-num) : (u128)num;
  if (a > bound || (u128)den > bound || gcd_u128(a, (u128)den) != 1)
    throw Error(ErrorKind::NoReconstruction, "no reconstruction within bound");
  // n == r*d (mod m) by construction of the walk, but verify anyway.
  u128 lhs = mulmod_any(r, (u128)den, m);
  u128 rhs = num >= 0 ? (u128)num % m : m - (u128)(-num) % m;
  if (lhs != rhs % m)
    throw Error(ErrorKind::NoReconstruction, "reconstruction check failed");
  return {(i64)num, (i64)den};
}

}  // namespace supercong
