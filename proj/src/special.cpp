#include "supercong/special.hpp"

namespace supercong {

i64 FloorExpr::eval(u64 p) const {
  if (exact) {
    i64 n = (i64)p + off;
    if (n % m != 0)
      throw Error(ErrorKind::BadConfig,
                  "exact floor expression (p" + std::string(off >= 0 ? "+" : "") +
                      std::to_string(off) + ")/" + std::to_string(m) +
                      " not integral at p = " + std::to_string(p));
    return n / m;
  }
  return coeff * ((i64)(a * (i64)p) / m) + off;
}

u128 small_binom_mod(u64 n, i64 k, const PrimeContext& ctx, int e) {
  if (n >= ctx.p)
    throw Error(ErrorKind::TopOutOfRange,
                "binomial top " + std::to_string(n) + " >= p");
  const ResMod& mm = ctx.at(e);
  if (k < 0 || (u64)k > n) return 0;
  u128 num = 1 % mm.m, den = 1 % mm.m;
  for (i64 i = 1; i <= k; ++i) {
    num = mm.mul(num, (u128)(n - (u64)k + (u64)i) % mm.m);
    den = mm.mul(den, (u128)i % mm.m);
  }
  return mm.mul(num, mm.inv(den));
}

u128 floor_binom(const FloorBinomSpec& spec, const PrimeContext& ctx, int e) {
  i64 top = spec.top.eval(ctx.p);
  i64 bot = spec.bot.eval(ctx.p);
  if (top < 0 || (u64)top >= ctx.p)
    throw Error(ErrorKind::TopOutOfRange,
                "floor binomial top " + std::to_string(top) +
                    " outside [0, p) at p = " + std::to_string(ctx.p));
  return small_binom_mod((u64)top, bot, ctx, e);
}

u128 R_value(RWhich which, const PrimeContext& ctx, int e) {
  if (e > 2)
    throw Error(ErrorKind::BadConfig, "R constants are defined mod p^2 only");
  const ResMod& mm = ctx.at(e);
  u64 p = ctx.p;
  switch (which) {
    case RWhich::R1: {
      if (p % 4 != 3)
        throw Error(ErrorKind::BadConfig, "R1 needs p == 3 (mod 4)");
      u128 pre = mm.sub(mm.reduce_i64(2 * (i64)p + 2), mm.pow(2 % mm.m, p - 1));
      u128 b = small_binom_mod((p - 1) / 2, (i64)((p - 3) / 4), ctx, e);
      return mm.mul(pre, mm.mul(b, b));
    }
    case RWhich::R3: {
      u128 q2 = fermat_term_at(2, ctx, e);
      u128 q3 = fermat_term_at(3, ctx, e);
      u128 pre = mm.add(mm.reduce_i64(1 + 2 * (i64)p),
                        mm.sub(mm.mul(mm.mul(4 % mm.m, mm.inv(3 % mm.m)), q2),
                               mm.mul(mm.mul(3 % mm.m, mm.inv(2 % mm.m)), q3)));
      u128 b = small_binom_mod((p - 1) / 2, (i64)(p / 6), ctx, e);
      return mm.mul(pre, mm.mul(b, b));
    }
    case RWhich::R2: {
      u128 q2 = fermat_term_at(2, ctx, e);
      i64 sgn = (p % 4 == 1) ? 1 : -1;
      u64 h = harmonic_sum_mod(p / 8, p);
      u128 pre = mm.reduce_i64(1 + (4 + 2 * sgn) * (i64)p);
      pre = mm.sub(pre, mm.mul(4 % mm.m, q2));
      // (p/2) * H: H is known mod p, and the p factor makes that exact
      // mod p^2.
      u128 ph = mm.mul((u128)p % mm.m, (u128)h % mm.m);
      pre = mm.sub(pre, mm.mul(ph, mm.inv(2 % mm.m)));
      u128 b = small_binom_mod((p - 1) / 2, (i64)(p / 8), ctx, e);
      return mm.mul(pre, mm.mul(b, b));
    }
  }
  throw Error(ErrorKind::BadConfig, "unknown R constant");
}

u64 ratio_binom(RatioWhich which, u64 p) {
  PrimeContext c1(p, 1, 1);
  auto fb = [&](i64 top, i64 bot) -> u128 {
    if (top < 0 || (u64)top >= p)
      throw Error(ErrorKind::TopOutOfRange, "ratio binomial top outside [0,p)");
    return small_binom_mod((u64)top, bot, c1, 1);
  };
  const ResMod& mm = c1.at(1);
  i64 ip = (i64)p;
  switch (which) {
    case RatioWhich::TP: {
      u128 n = mm.mul(fb((ip - 1) / 2, 7 * ip / 40),
                      mm.mul(fb((ip - 1) / 2, 9 * ip / 40),
                             fb(3 * ip / 40, ip / 40)));
      return (u64)mm.mul(n, mm.inv(fb(19 * ip / 40, ip / 20)));
    }
    case RatioWhich::RP: {
      u128 n = mm.mul(fb(3 * ip / 11, ip / 11), fb(6 * ip / 11, 3 * ip / 11));
      return (u64)mm.mul(n, mm.inv(fb(4 * ip / 11, 2 * ip / 11)));
    }
    case RatioWhich::SP: {
      u128 n = mm.mul(fb(8 * ip / 19, ip / 19), fb(10 * ip / 19, 4 * ip / 19));
      return (u64)mm.mul(n, mm.inv(fb(5 * ip / 19, 2 * ip / 19)));
    }
  }
  throw Error(ErrorKind::BadConfig, "unknown ratio binomial");
}

u128 sign_atom(SignAtom which, const PrimeContext& ctx, int e) {
  const ResMod& mm = ctx.at(e);
  switch (which) {
    case SignAtom::Neg1Half:
      return (ctx.p - 1) / 2 % 2 == 0 ? 1 % mm.m : mm.neg(1 % mm.m);
    case SignAtom::Neg1FloorP4:
      return (ctx.p / 4) % 2 == 0 ? 1 % mm.m : mm.neg(1 % mm.m);
    case SignAtom::Pow5NegFloorP3: {
      if (ctx.p == 5)
        throw Error(ErrorKind::NotInvertible, "5^{-[p/3]} undefined at p = 5");
      u128 inv5 = mm.inv(5 % mm.m);
      return mm.pow(inv5, ctx.p / 3);
    }
  }
  throw Error(ErrorKind::BadConfig, "unknown sign atom");
}

}  // namespace supercong
