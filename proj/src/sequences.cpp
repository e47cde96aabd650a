#include "supercong/sequences.hpp"

#include <map>

namespace supercong {

namespace {
const std::vector<SequenceSpec> kSequences = {
    {Seq::APrime, "Aprime", 11, 3, -1}, {Seq::Franel, "f", 7, 2, -8},
    {Seq::S, "S", 12, 4, 32},           {Seq::A, "a", 10, 3, 9},
    {Seq::Q, "Q", -17, -6, 72},         {Seq::W, "W", -9, -3, 27},
    {Seq::G, "G", 32, 12, 256},
};
}  // namespace

const SequenceSpec& sequence_spec(Seq s) {
  for (const auto& sp : kSequences)
    if (sp.name == s) return sp;
  throw Error(ErrorKind::BadConfig, "unknown sequence");
}

const std::vector<SequenceSpec>& all_sequences() { return kSequences; }

Seq sequence_by_id(const std::string& id) {
  for (const auto& sp : kSequences)
    if (id == sp.id) return sp.name;
  throw Error(ErrorKind::BadConfig, "unknown sequence id: " + id);
}

std::vector<u128> seq_mod(const SequenceSpec& spec, const PrimeContext& ctx,
                          int exponent) {
  int j = exponent < 0 ? ctx.e : exponent;
  if (j > ctx.W) throw Error(ErrorKind::BadConfig, "sequence exponent above W");
  const ResMod& mm = ctx.at(j);
  u64 p = ctx.p;
  std::vector<u128> u(p);
  u[0] = 1 % mm.m;
  if (p == 1) return u;
  u[1] = mm.reduce_i64(spec.b);
  if (p == 2) return u;

  // Batch-invert 2..p-1 once: prefix products, one Euclid, backward sweep.
  std::vector<u128> prefix(p);
  prefix[1] = 1 % mm.m;
  for (u64 n = 2; n < p; ++n) prefix[n] = mm.mul(prefix[n - 1], n);
  u128 inv_all = mm.inv(prefix[p - 1]);
  std::vector<u128> inv(p);
  for (u64 n = p - 1; n >= 2; --n) {
    inv[n] = mm.mul(inv_all, prefix[n - 1]);
    inv_all = mm.mul(inv_all, n);
  }

  u128 ra = mm.reduce_i64(spec.a);
  u128 rb = mm.reduce_i64(spec.b);
  u128 rc = mm.reduce_i64(spec.c);
  for (u64 n = 1; n + 1 < p; ++n) {
    u128 lin = mm.add(mm.mul(ra, mm.mul(n, n + 1)), rb);
    u128 t = mm.sub(mm.mul(lin, u[n]), mm.mul(rc, mm.mul(mm.mul(n, n), u[n - 1])));
    u128 inv_sq = mm.mul(inv[n + 1], inv[n + 1]);
    u[n + 1] = mm.mul(t, inv_sq);
  }
  return u;
}

bigint seq_exact(const SequenceSpec& spec, u64 n) {
  return seq_exact_array(spec, n + 1).back();
}

std::vector<bigint> seq_exact_array(const SequenceSpec& spec, u64 count) {
  std::vector<bigint> u;
  u.reserve(count);
  u.push_back(1);
  if (count == 1) return u;
  u.push_back(spec.b);
  for (u64 m = 1; m + 1 < count; ++m) {
    bigint num = (bigint(spec.a) * m * (m + 1) + spec.b) * u[m] -
                 bigint(spec.c) * m * m * u[m - 1];
    bigint den = bigint(m + 1) * (m + 1);
    if (num % den != 0)
      throw Error(ErrorKind::NonIntegral,
                  std::string("recurrence left Z at n = ") + std::to_string(m + 1));
    u.push_back(num / den);
  }
  return u;
}

bigint binom_exact(i64 n, i64 k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  bigint r = 1;
  for (i64 i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;
  }
  return r;
}

namespace {

bigint pow_exact(i64 base, u64 e) {
  bigint r = 1, b = base;
  for (u64 i = 0; i < e; ++i) r *= b;
  return r;
}

bigint franel(u64 n) {
  bigint s = 0;
  for (u64 k = 0; k <= n; ++k) {
    bigint b = binom_exact((i64)n, (i64)k);
    s += b * b * b;
  }
  return s;
}

}  // namespace

bigint seq_direct(Seq name, u64 n) {
  bigint s = 0;
  switch (name) {
    case Seq::APrime:
      for (u64 k = 0; k <= n; ++k) {
        bigint b = binom_exact((i64)n, (i64)k);
        s += b * b * binom_exact((i64)(n + k), (i64)k);
      }
      return s;
    case Seq::Franel:
      return franel(n);
    case Seq::S:
      for (u64 k = 0; 2 * k <= n; ++k) {
        bigint c = binom_exact((i64)(2 * k), (i64)k);
        s += c * c * binom_exact((i64)n, (i64)(2 * k)) *
             pow_exact(4, n - 2 * k);
      }
      return s;
    case Seq::A:
      for (u64 k = 0; k <= n; ++k) {
        bigint b = binom_exact((i64)n, (i64)k);
        s += b * b * binom_exact((i64)(2 * k), (i64)k);
      }
      return s;
    case Seq::Q: {
      // Cache f_0..f_n once; the naive form would be quadratic.
      static std::map<u64, bigint> fcache;
      for (u64 k = 0; k <= n; ++k) {
        auto it = fcache.find(k);
        if (it == fcache.end()) it = fcache.emplace(k, franel(k)).first;
        s += binom_exact((i64)n, (i64)k) * pow_exact(-8, n - k) * it->second;
      }
      return s;
    }
    case Seq::W:
      for (u64 k = 0; 3 * k <= n; ++k)
        s += binom_exact((i64)(2 * k), (i64)k) *
             binom_exact((i64)(3 * k), (i64)k) *
             binom_exact((i64)n, (i64)(3 * k)) * pow_exact(-3, n - 3 * k);
      return s;
    case Seq::G:
      for (u64 k = 0; k <= n; ++k) {
        bigint c = binom_exact((i64)(2 * k), (i64)k);
        s += c * c * binom_exact((i64)(2 * n - 2 * k), (i64)(n - k)) *
             pow_exact(4, n - k);
      }
      return s;
  }
  throw Error(ErrorKind::BadConfig, "unknown sequence");
}

}  // namespace supercong
