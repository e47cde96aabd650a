#pragma once

#include <vector>

#include "supercong/modular.hpp"

namespace supercong {

// A nonzero value u * p^t with the unit u kept mod p^W, or the
// distinguished Zero. Valuations may go negative inside a product; only
// pv_to_residue insists on p-integrality.
struct PadicValue {
  int val = 0;
  u128 unit = 1;
  bool zero = false;

  static PadicValue one() { return {0, 1, false}; }
  static PadicValue zero_value() { return {0, 1, true}; }
};

// Wilson-stripped factorials: units[n] * p^vals[n] == n! mod p^W, with
// units[n] coprime to p. inv_units[n] is the unit inverse, filled by one
// Euclid plus a backward sweep.
class FactorialTable {
 public:
  FactorialTable(const PrimeContext& ctx, u64 n);

  const PrimeContext& ctx() const { return ctx_; }
  u64 size() const { return (u64)units_.size() - 1; }

  u128 unit(u64 n) const { return units_[n]; }
  u128 inv_unit(u64 n) const { return inv_units_[n]; }
  u64 val(u64 n) const { return vals_[n]; }

  // binom(n, k) as a PadicValue; throws OutOfRange outside the table.
  PadicValue binom(u64 n, u64 k) const;

  // The p-stripped part of n (an integer 1..size) and its inverse, both
  // mod p^W, derived from adjacent factorial entries.
  PadicValue stripped_int(u64 n) const;
  PadicValue stripped_int_inv(u64 n) const;

 private:
  PrimeContext ctx_;
  std::vector<u128> units_;
  std::vector<u128> inv_units_;
  std::vector<u64> vals_;
};

inline FactorialTable build_table(const PrimeContext& ctx, u64 n) {
  return FactorialTable(ctx, n);
}

PadicValue pv_mul(const PadicValue& x, const PadicValue& y,
                  const PrimeContext& ctx);
PadicValue pv_div(const PadicValue& x, const PadicValue& y,
                  const PrimeContext& ctx);
PadicValue pv_neg(const PadicValue& x, const PrimeContext& ctx);
PadicValue pv_pow(const PadicValue& x, int exp, const PrimeContext& ctx);

// Strip the exact power of p from z; z = 0 gives Zero.
PadicValue pv_from_int(i64 z, const PrimeContext& ctx);

// unit * p^val mod p^e (0 once val >= e). Throws NotPIntegral when the
// valuation is negative.
u128 pv_to_residue(const PadicValue& x, int e, const PrimeContext& ctx);

}  // namespace supercong
