#pragma once

#include <string>

#include "supercong/modular.hpp"

namespace supercong {

// A floor expression in p: either coeff*[a*p/m] + off, or the exact
// quotient (p + b)/m (used for (p-1)/2, (p-3)/4, (p+1)/4). [3p/7] and
// 3*[p/7] differ and stay distinct; nothing is simplified symbolically.
struct FloorExpr {
  bool exact = false;
  i64 coeff = 1;  // floor form only
  i64 a = 1;      // floor form: [a*p/m]
  i64 m = 1;
  i64 off = 0;    // floor form additive offset; exact form: (p + off)/m

  i64 eval(u64 p) const;
  bool operator==(const FloorExpr& o) const {
    return exact == o.exact && coeff == o.coeff && a == o.a && m == o.m &&
           off == o.off;
  }
};

struct FloorBinomSpec {
  FloorExpr top;
  FloorExpr bot;
  bool operator==(const FloorBinomSpec& o) const {
    return top == o.top && bot == o.bot;
  }
};

// binom(top, bot) mod p^e by the falling-product form; the evaluated top
// must stay below p so the value is a unit. A bottom outside [0, top]
// gives 0.
u128 floor_binom(const FloorBinomSpec& spec, const PrimeContext& ctx, int e);

// binom(n, k) mod p^e for 0 <= n < p.
u128 small_binom_mod(u64 n, i64 k, const PrimeContext& ctx, int e);

enum class RWhich { R1, R2, R3 };

// The displayed R-constants, exact mod p^e for e <= 2. R1 needs
// p == 3 (mod 4).
u128 R_value(RWhich which, const PrimeContext& ctx, int e);

enum class RatioWhich { TP, RP, SP };

// t_p, r_p, s_p: quotients of floor binomials, defined mod p.
u64 ratio_binom(RatioWhich which, u64 p);

enum class SignAtom { Neg1Half, Neg1FloorP4, Pow5NegFloorP3 };

u128 sign_atom(SignAtom which, const PrimeContext& ctx, int e);

}  // namespace supercong
