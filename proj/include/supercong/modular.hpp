#pragma once

#include <array>
#include <vector>

#include "supercong/errors.hpp"
#include "supercong/ints.hpp"

namespace supercong {

constexpr u64 kMaxPrime = u64(1) << 20;  // p^6 must fit two machine words

bool is_prime_u64(u64 n);

// One verified odd prime together with the modulus powers used everywhere:
// e is the strongest congruence exponent to check (1..3), W the working
// exponent carried by unit arithmetic (default e+3).
struct PrimeContext {
  u64 p = 0;
  int e = 1;
  int W = 4;
  std::array<u128, 7> ppow{};   // p^0 .. p^6
  std::array<ResMod, 7> rm{};   // rm[j] reduces mod p^j
  u128 pW = 0;
  u128 pe = 0;

  PrimeContext() = default;
  PrimeContext(u64 p_, int e_, int W_ = -1);

  const ResMod& mw() const { return rm[W]; }
  const ResMod& me() const { return rm[e]; }
  const ResMod& at(int j) const { return rm[j]; }
};

// base^exp mod m by square-and-multiply.
u128 mod_pow(u128 base, u128 exp, u128 m);

// Inverse mod m via extended Euclid; throws NotInvertible when gcd > 1.
u128 mod_inv(u128 a, u128 m);

// Legendre symbol of a mod p (multiplicative extension for composite or
// negative a), by Euler's criterion.
int symbol(i64 a, u64 p);

// sum_{k=1}^{N} 1/k mod p, N < p. N = 0 gives 0.
u64 harmonic_sum_mod(u64 n, u64 p);

// b^(p-1) - 1 mod p^e; zero mod p by Fermat. Throws DividesBase if p | b.
u128 fermat_term(i64 b, const PrimeContext& ctx);

// Same quantity at an explicit exponent e <= ctx.W.
u128 fermat_term_at(i64 b, const PrimeContext& ctx, int e);

struct Rational64 {
  i64 num = 0;
  i64 den = 1;
};

// Recover n/d with |n| <= bound, 0 < d <= bound, gcd(n,d) = 1 and
// n == r*d (mod m), by the half-extended Euclidean walk. The answer is
// unique when 2*bound^2 <= m. Throws NoReconstruction if no such fraction
// exists within the bound.
Rational64 rational_reconstruct(u128 r, u128 m, u64 bound);

}  // namespace supercong
