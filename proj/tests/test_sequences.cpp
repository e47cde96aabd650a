#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "supercong/runner.hpp"
#include "supercong/sequences.hpp"

using namespace supercong;

namespace {

u128 big_mod(const bigint& v, u128 m) {
  bigint bm = (bigint((u64)(m >> 64)) << 64) | bigint((u64)m);
  bigint r = v % bm;
  if (r < 0) r += bm;
  u128 out = (u64)(r & 0xffffffffffffffffull).convert_to<u64>();
  out |= (u128)((r >> 64).convert_to<u64>()) << 64;
  return out;
}

}  // namespace

TEST_CASE("first terms pin the (a,b,c) table") {
  CHECK(seq_exact(sequence_spec(Seq::APrime), 1) == 3);
  CHECK(seq_exact(sequence_spec(Seq::Franel), 1) == 2);
  CHECK(seq_exact(sequence_spec(Seq::Franel), 2) == 10);
  CHECK(seq_exact(sequence_spec(Seq::S), 2) == 20);
  CHECK(seq_exact(sequence_spec(Seq::W), 1) == -3);
  CHECK(seq_direct(Seq::G, 1) == 12);
  CHECK(seq_direct(Seq::A, 2) == 15);
  CHECK(seq_direct(Seq::Q, 1) == -6);
}

TEST_CASE("recurrence equals the defining sums up to n = 30") {
  for (const auto& spec : all_sequences()) {
    for (u64 n = 0; n <= 30; ++n)
      CHECK(seq_exact(spec, n) == seq_direct(spec.name, n));
  }
}

TEST_CASE("alternative identities for G and S") {
  for (u64 n = 0; n <= 30; ++n) {
    bigint g_alt = 0;
    for (u64 k = 0; k <= n; ++k) {
      bigint c = binom_exact((i64)(2 * k), (i64)k);
      bigint p16 = 1;
      for (u64 i = 0; i < n - k; ++i) p16 *= 16;
      bigint t = binom_exact((i64)n, (i64)k) * c * c * p16;
      g_alt += (k % 2 == 0) ? t : -t;
    }
    CHECK(g_alt == seq_direct(Seq::G, n));

    bigint s_alt = 0;
    for (u64 k = 0; k <= n; ++k)
      s_alt += binom_exact((i64)n, (i64)k) * binom_exact((i64)(2 * k), (i64)k) *
               binom_exact((i64)(2 * n - 2 * k), (i64)(n - k));
    CHECK(s_alt == seq_direct(Seq::S, n));
  }
}

TEST_CASE("seq_mod agrees with exact values reduced") {
  for (u64 p : sieve_primes(5, 97)) {
    for (int e = 1; e <= 3; ++e) {
      PrimeContext ctx(p, e);
      for (const auto& spec : all_sequences()) {
        auto arr = seq_mod(spec, ctx);
        auto exact = seq_exact_array(spec, std::min<u64>(p, 61));
        for (u64 n = 0; n < exact.size(); ++n)
          CHECK(arr[n] == big_mod(exact[n], ctx.pe));
      }
    }
  }
}

TEST_CASE("seq_mod examples") {
  PrimeContext ctx(13, 2);
  auto f = seq_mod(sequence_spec(Seq::Franel), ctx);
  CHECK(f[0] == 1);
  CHECK(f[1] == 2);
  auto w = seq_mod(sequence_spec(Seq::W), ctx);
  CHECK(w[1] == ctx.pe - 3);
  auto s = seq_mod(sequence_spec(Seq::S), ctx);
  CHECK(s[2] == 20 % ctx.pe);
}
