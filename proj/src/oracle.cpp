#include "supercong/oracle.hpp"

#include <map>

namespace supercong {

namespace {

bigint bigint_pow(bigint b, u64 e) {
  bigint r = 1;
  while (e != 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

bigint to_bigint(u128 v) {
  bigint hi = (u64)(v >> 64);
  return (hi << 64) | bigint((u64)v);
}

u128 to_u128(const bigint& v) {
  u128 out = (u64)(v & 0xffffffffffffffffull).convert_to<u64>();
  out |= (u128)((v >> 64) & 0xffffffffffffffffull).convert_to<u64>() << 64;
  return out;
}

}  // namespace

bool sum_valid_at(const SumSpec& spec, u64 p) {
  for (const auto& f : spec.factors) {
    if (f.kind != TermFactor::Kind::Rpow) continue;
    if (f.rpow.num % (i64)p == 0 || f.rpow.den % (i64)p == 0) return false;
  }
  return true;
}

bigrat oracle_sum_exact(const SumSpec& spec, u64 p) {
  std::map<Seq, std::vector<bigint>> seq_cache;
  for (const auto& f : spec.factors) {
    if (f.kind != TermFactor::Kind::SeqRef) continue;
    auto& vals = seq_cache[f.seq];
    if (!vals.empty()) continue;
    vals = seq_exact_array(sequence_spec(f.seq), p);
  }

  bigrat acc = 0;
  bigrat geom = 1;  // running product of the rpow ratios
  bigrat step = 1;
  for (const auto& f : spec.factors)
    if (f.kind == TermFactor::Kind::Rpow) step *= bigrat(f.rpow.num, f.rpow.den);

  for (u64 k = 0; k < p; ++k) {
    bigrat term = geom;
    for (const auto& f : spec.factors) {
      switch (f.kind) {
        case TermFactor::Kind::Binom: {
          i64 top = f.binom.a1 * (i64)k + f.binom.b1;
          i64 bot = f.binom.a0 * (i64)k + f.binom.b0;
          bigint b = binom_exact(top, bot);
          int e = f.binom.exp;
          if (e >= 0) {
            term *= bigint_pow(b, (u64)e);
          } else {
            if (b == 0)
              throw Error(ErrorKind::NotInvertible, "zero binomial inverted");
            term /= bigint_pow(b, (u64)(-e));
          }
          break;
        }
        case TermFactor::Kind::SeqRef:
          term *= seq_cache[f.seq][k];
          break;
        case TermFactor::Kind::Rpow:
          break;  // in geom
        case TermFactor::Kind::PolyInv: {
          i64 n = f.polyinv.two_k_minus_1 ? 2 * (i64)k - 1 : (i64)k + 1;
          term /= bigint_pow(bigint(n), (u64)f.polyinv.power);
          break;
        }
      }
    }
    acc += term;
    geom *= step;
  }

  switch (spec.prefix.kind) {
    case SumPrefix::Kind::None: break;
    case SumPrefix::Kind::Leg: acc *= symbol(spec.prefix.leg, p); break;
    case SumPrefix::Kind::SgnHalf:
      if ((p - 1) / 2 % 2 == 1) acc = -acc;
      break;
    case SumPrefix::Kind::SgnFloorP4:
      if ((p / 4) % 2 == 1) acc = -acc;
      break;
  }
  return acc;
}

u128 reduce_rational_mod(const bigrat& v, u64 p, int e) {
  bigint num = boost::multiprecision::numerator(v);
  bigint den = boost::multiprecision::denominator(v);
  if (num == 0) return 0;
  bigint bp = p;
  int vn = 0, vd = 0;
  while (num % bp == 0) {
    num /= bp;
    ++vn;
  }
  while (den % bp == 0) {
    den /= bp;
    ++vd;
  }
  int val = vn - vd;
  if (val < 0)
    throw Error(ErrorKind::NotPIntegral, "rational has negative p-valuation");
  if (val >= e) return 0;
  u128 m = 1;
  for (int i = 0; i < e; ++i) m *= p;
  bigint bm = to_bigint(m);
  bigint nr = num % bm;
  if (nr < 0) nr += bm;
  bigint dr = den % bm;
  if (dr < 0) dr += bm;
  u128 inv = mod_inv(to_u128(dr), m);
  bigint r = nr * to_bigint(inv) % bm;
  for (int i = 0; i < val; ++i) r = r * bp % bm;
  return to_u128(r);
}

u128 oracle_sum_residue(const SumSpec& spec, u64 p, int e) {
  return reduce_rational_mod(oracle_sum_exact(spec, p), p, e);
}

}  // namespace supercong
