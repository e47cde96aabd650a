#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "supercong/quadform.hpp"
#include "supercong/sequences.hpp"
#include "supercong/special.hpp"

namespace supercong {

// ---- sum term factors ----

struct BinomFactor {
  i64 a1 = 0, b1 = 0;  // top: a1*k + b1
  i64 a0 = 0, b0 = 0;  // bottom
  int exp = 1;
};

struct RpowFactor {
  i64 num = 1;
  i64 den = 1;  // (num/den)^k, den > 0
};

struct PolyInvFactor {
  bool two_k_minus_1 = false;  // else k+1
  int power = 1;               // 1..3
};

struct TermFactor {
  enum class Kind { Binom, SeqRef, Rpow, PolyInv } kind = Kind::Binom;
  BinomFactor binom{};
  Seq seq = Seq::Franel;
  RpowFactor rpow{};
  PolyInvFactor polyinv{};
};

struct SumPrefix {
  enum class Kind { None, Leg, SgnHalf, SgnFloorP4 } kind = Kind::None;
  i64 leg = 0;
};

struct SumSpec {
  std::string id;
  SumPrefix prefix;
  std::vector<TermFactor> factors;
};

// ---- case conditions ----

struct CondAtom {
  enum class Kind { Residue, Symbol, Rep, PNotEq } kind = Kind::Residue;
  // Residue: p % mod in set
  i64 mod = 0;
  std::vector<i64> set;
  // Symbol: leg(a) == want
  i64 leg_a = 0;
  int want = 1;
  // Rep: binds x, y
  FormSpec form{};
  bool xmod4 = false;
  // PNotEq
  u64 pneq = 0;
};

struct Condition {
  std::vector<CondAtom> atoms;  // conjunction; empty = always
};

// ---- expressions ----

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

struct Expr {
  enum class Kind {
    Num, P, X, Y, SumRef,
    R1, R2, R3, R7, TP, RP, SP,
    FB, Leg, SgnHalf, SgnFloorP4, Pw5m,
    H,    // H(p/N): harmonic sum to [p/N], mod p
    Q,    // q(b) = b^(p-1) - 1
    Inv, Neg, Add, Sub, Mul, Div,
    Pow,  // integer exponent in num (may be negative)
  } kind = Kind::Num;
  i64 num = 0;          // Num value; Leg a; H divisor; Q base; Pow exponent
  std::string sum_id;   // SumRef
  FloorBinomSpec fb{};  // FB
  ExprPtr lhs, rhs;
};

struct CaseRule {
  Condition cond;
  ExprPtr lhs, rhs;
  int mod_power = 1;
  ExprPtr alt_rhs;  // set on entries flagged suspect: the other reading
};

struct ConjectureSpec {
  std::string id;
  bool proved = false;
  std::vector<u64> excluded;
  std::vector<std::string> sum_ids;  // sums defined in this block
  std::vector<CaseRule> cases;

  bool excludes(u64 p) const {
    for (u64 q : excluded)
      if (q == p) return true;
    return false;
  }
  int max_mod_power() const {
    int e = 1;
    for (const auto& c : cases) e = std::max(e, c.mod_power);
    return e;
  }
};

struct Registry {
  std::vector<ConjectureSpec> conjectures;
  std::map<std::string, SumSpec> sums;
  std::map<std::string, std::string> sum_parent;  // sum id -> conjecture id
  std::string source_hash;

  const ConjectureSpec* find(const std::string& id) const {
    for (const auto& c : conjectures)
      if (c.id == id) return &c;
    return nullptr;
  }
};

// Parse registry text; diagnostics carry line/column. Unknown atoms are
// errors, never ignored.
Registry parse_registry(const std::string& text);
Registry load_registry_file(const std::string& path);

// Canonical re-emission; parse(print(parse(t))) == parse(t).
std::string print_registry(const Registry& reg);
std::string print_sum(const SumSpec& sum);
std::string print_expr(const Expr& e);
std::string print_condition(const Condition& c);

u64 fnv1a64(const std::string& data);

}  // namespace supercong
