#include "supercong/padic.hpp"

namespace supercong {

FactorialTable::FactorialTable(const PrimeContext& ctx, u64 n) : ctx_(ctx) {
  if (n < 1) throw Error(ErrorKind::BadConfig, "table length must be >= 1");
  const ResMod& mw = ctx_.mw();
  units_.resize(n + 1);
  inv_units_.resize(n + 1);
  vals_.resize(n + 1);
  units_[0] = 1;
  vals_[0] = 0;
  for (u64 i = 1; i <= n; ++i) {
    u64 s = i;
    u64 v = vals_[i - 1];
    while (s % ctx_.p == 0) {
      s /= ctx_.p;
      ++v;
    }
    units_[i] = mw.mul(units_[i - 1], (u128)s % mw.m);
    vals_[i] = v;
  }
  inv_units_[n] = mw.inv(units_[n]);
  for (u64 i = n; i >= 1; --i) {
    u64 s = i;
    while (s % ctx_.p == 0) s /= ctx_.p;
    inv_units_[i - 1] = mw.mul(inv_units_[i], (u128)s % mw.m);
  }
}

PadicValue FactorialTable::binom(u64 n, u64 k) const {
  if (n > size() || k > n)
    throw Error(ErrorKind::OutOfRange,
                "binom(" + std::to_string(n) + ", " + std::to_string(k) +
                    ") outside table of size " + std::to_string(size()));
  const ResMod& mw = ctx_.mw();
  PadicValue r;
  r.val = (int)(vals_[n] - vals_[k] - vals_[n - k]);
  r.unit = mw.mul(units_[n], mw.mul(inv_units_[k], inv_units_[n - k]));
  return r;
}

PadicValue FactorialTable::stripped_int(u64 n) const {
  if (n < 1 || n > size())
    throw Error(ErrorKind::OutOfRange, "stripped_int outside table");
  PadicValue r;
  r.val = (int)(vals_[n] - vals_[n - 1]);
  r.unit = ctx_.mw().mul(units_[n], inv_units_[n - 1]);
  return r;
}

PadicValue FactorialTable::stripped_int_inv(u64 n) const {
  if (n < 1 || n > size())
    throw Error(ErrorKind::OutOfRange, "stripped_int_inv outside table");
  PadicValue r;
  r.val = -(int)(vals_[n] - vals_[n - 1]);
  r.unit = ctx_.mw().mul(inv_units_[n], units_[n - 1]);
  return r;
}

PadicValue pv_mul(const PadicValue& x, const PadicValue& y,
                  const PrimeContext& ctx) {
  if (x.zero || y.zero) return PadicValue::zero_value();
  return {x.val + y.val, ctx.mw().mul(x.unit, y.unit), false};
}

PadicValue pv_div(const PadicValue& x, const PadicValue& y,
                  const PrimeContext& ctx) {
  if (y.zero)
    throw Error(ErrorKind::DivisionByZeroValue, "division by Zero value");
  if (x.zero) return PadicValue::zero_value();
  return {x.val - y.val, ctx.mw().mul(x.unit, ctx.mw().inv(y.unit)), false};
}

PadicValue pv_neg(const PadicValue& x, const PrimeContext& ctx) {
  if (x.zero) return x;
  return {x.val, ctx.mw().neg(x.unit), false};
}

PadicValue pv_pow(const PadicValue& x, int exp, const PrimeContext& ctx) {
  if (x.zero) {
    if (exp <= 0)
      throw Error(ErrorKind::DivisionByZeroValue, "Zero to nonpositive power");
    return x;
  }
  u128 u = ctx.mw().pow(x.unit, (u128)(exp < 0 ? -exp : exp));
  if (exp < 0) u = ctx.mw().inv(u);
  return {x.val * exp, u, false};
}

PadicValue pv_from_int(i64 z, const PrimeContext& ctx) {
  if (z == 0) return PadicValue::zero_value();
  bool neg = z < 0;
  u64 a = neg ? (u64)(-z) : (u64)z;
  int v = 0;
  while (a % ctx.p == 0) {
    a /= ctx.p;
    ++v;
  }
  u128 u = (u128)a % ctx.pW;
  if (neg) u = ctx.mw().neg(u);
  return {v, u, false};
}

u128 pv_to_residue(const PadicValue& x, int e, const PrimeContext& ctx) {
  if (x.zero) return 0;
  if (x.val < 0)
    throw Error(ErrorKind::NotPIntegral,
                "term has negative valuation " + std::to_string(x.val));
  if (e > ctx.W) throw Error(ErrorKind::BadConfig, "residue exponent above W");
  const ResMod& mm = ctx.at(e);
  if (x.val >= e) return 0;
  return mm.mul(x.unit % mm.m, ctx.ppow[x.val]);
}

}  // namespace supercong
