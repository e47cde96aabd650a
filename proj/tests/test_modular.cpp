#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "supercong/modular.hpp"
#include "supercong/runner.hpp"

using namespace supercong;

TEST_CASE("mod_pow basics") {
  CHECK(mod_pow(5, 0, 17) == 1);
  CHECK(mod_pow(2, 6, 7) == 1);
  CHECK(mod_pow(2, 6, 49) == 15);
  CHECK(mod_pow(123456, 1, 2) == 0);
}

TEST_CASE("mod_pow against a 128-bit modulus") {
  // p = 1999, m = p^6 > 2^64: exercise the wide path.
  u128 m = 1;
  for (int i = 0; i < 6; ++i) m *= 1999;
  CHECK(m > (u128)UINT64_MAX);
  u128 got = mod_pow(2, 10, m);
  CHECK(got == 1024);
  // Fermat lift: 2^(p-1) == 1 mod p (reduce the wide result).
  CHECK(mod_pow(2, 1998, m) % 1999 == 1);
}

TEST_CASE("mod_inv") {
  CHECK(mod_inv(1, 97) == 1);
  CHECK(mod_inv(3, 7) == 5);
  CHECK_THROWS_AS((void)mod_inv(5, 25), Error);
  try {
    (void)mod_inv(5, 25);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotInvertible);
  }
}

TEST_CASE("mod_inv round-trip over random pairs") {
  std::mt19937_64 rng(12345);
  for (int i = 0; i < 500; ++i) {
    u64 m = rng() % 100000 + 2;
    u64 a = rng() % m;
    if (a == 0 || gcd_u128(a, m) != 1) continue;
    u128 b = mod_inv(a, m);
    CHECK(mulmod_any(a, b, m) == 1);
  }
}

TEST_CASE("ResMod wide multiply matches shift-add") {
  std::mt19937_64 rng(99);
  for (u64 p : {1999ull, 65521ull, 1048573ull}) {
    ResMod rm = ResMod::prime_power(p, 6);
    REQUIRE(rm.big);
    for (int i = 0; i < 200; ++i) {
      u128 a = ((u128)rng() << 64 | rng()) % rm.m;
      u128 b = ((u128)rng() << 64 | rng()) % rm.m;
      CHECK(rm.mul(a, b) == mulmod_any(a, b, rm.m));
    }
  }
}

TEST_CASE("symbol basics and complete multiplicativity") {
  CHECK(symbol(1, 13) == 1);
  CHECK(symbol(2, 7) == 1);
  CHECK(symbol(0, 7) == 0);
  CHECK(symbol(7 + 2, 7) == symbol(2, 7));
  CHECK(symbol(-1, 3) == -1);
  for (u64 p : sieve_primes(3, 199)) {
    for (i64 a = 1; a < (i64)p; ++a)
      for (i64 b = a; b < (i64)p; b += 7)  // sampled pairs
        CHECK(symbol(a * b, p) == symbol(a, p) * symbol(b, p));
  }
}

TEST_CASE("harmonic sums") {
  CHECK(harmonic_sum_mod(0, 13) == 0);
  CHECK(harmonic_sum_mod(2, 17) == 10);
  CHECK(harmonic_sum_mod(3, 7) == 3);
}

TEST_CASE("fermat_term") {
  PrimeContext c72(7, 2);
  CHECK(fermat_term(1, c72) == 0);
  PrimeContext c71(7, 1);
  CHECK(fermat_term(2, c71) == 0);
  CHECK(fermat_term(2, c72) == 14);
  CHECK_THROWS_AS((void)fermat_term(7, c72), Error);
  // always divisible by p
  for (u64 p = 3; p < 500; ++p) {
    if (!is_prime_u64(p)) continue;
    PrimeContext ctx(p, 2);
    for (i64 b : {2, 3, 5, 10}) {
      if (b % (i64)p == 0) continue;
      CHECK(fermat_term(b, ctx) % p == 0);
    }
  }
}

TEST_CASE("rational reconstruction") {
  CHECK(rational_reconstruct(0, 10007, 100).num == 0);
  CHECK(rational_reconstruct(0, 10007, 100).den == 1);
  CHECK(rational_reconstruct(77, 10007, 100).num == 77);
  CHECK(rational_reconstruct(77, 10007, 100).den == 1);
  u128 r = mulmod_any(25, mod_inv(22, 10007), 10007);
  Rational64 f = rational_reconstruct(r, 10007, 100);
  CHECK(f.num == 25);
  CHECK(f.den == 22);
}

TEST_CASE("rational reconstruction property") {
  std::mt19937_64 rng(7);
  const u64 m = 1000003;  // prime
  const u64 bound = 707;  // 2*bound^2 <= m
  for (int i = 0; i < 300; ++i) {
    i64 n = (i64)(rng() % (2 * bound + 1)) - (i64)bound;
    u64 d = rng() % bound + 1;
    if (gcd_u128((u128)(n < 0 ? -n : n), d) != 1) continue;
    u128 r = mulmod_any((u128)((n % (i64)m + (i64)m) % (i64)m), mod_inv(d, m), m);
    Rational64 f = rational_reconstruct(r, m, bound);
    CHECK(f.num == n);
    CHECK(f.den == (i64)d);
  }
}

TEST_CASE("PrimeContext validation") {
  CHECK_THROWS_AS(PrimeContext(4, 1), Error);
  CHECK_THROWS_AS(PrimeContext(2, 1), Error);
  CHECK_THROWS_AS(PrimeContext(13, 4), Error);
  PrimeContext ok(13, 3);
  CHECK(ok.W == 6);
  CHECK(ok.pW == ok.ppow[6]);
}
