#include "supercong/eval.hpp"

#include <algorithm>

namespace supercong {

const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::NoCase: return "nocase";
    case Status::Ambiguous: return "ambiguous";
    case Status::Skipped: return "skipped";
    case Status::EngineError: return "engine_error";
  }
  return "?";
}

Env::Env(const Registry& reg, PrimeContext ctx)
    : reg_(&reg), ctx_(ctx), table_(ctx_, 6 * (ctx_.p - 1) + 1) {}

const std::vector<PadicValue>* Env::shared_binom(const BinomFactor& bf) {
  static const i64 kShapes[4][4] = {
      {2, 0, 1, 0}, {3, 0, 1, 0}, {4, 0, 2, 0}, {6, 0, 3, 0}};
  int idx = -1;
  for (int i = 0; i < 4; ++i)
    if (bf.a1 == kShapes[i][0] && bf.b1 == kShapes[i][1] &&
        bf.a0 == kShapes[i][2] && bf.b0 == kShapes[i][3]) {
      idx = i;
      break;
    }
  if (idx < 0) return nullptr;
  if (!shared_[idx]) {
    std::vector<PadicValue> arr(ctx_.p);
    for (u64 k = 0; k < ctx_.p; ++k)
      arr[k] = table_.binom((u64)(kShapes[idx][0] * (i64)k),
                            (u64)(kShapes[idx][2] * (i64)k));
    shared_[idx] = std::move(arr);
  }
  return &*shared_[idx];
}

u128 eval_sum(const SumSpec& spec, Env& env) {
  const PrimeContext& ctx = env.ctx_;
  const ResMod& mw = ctx.mw();
  const u64 p = ctx.p;
  const FactorialTable& table = env.table_;

  // Fold all geometric factors into one per-step ratio.
  u128 rstep = 1 % mw.m;
  bool have_rpow = false;
  for (const auto& f : spec.factors) {
    if (f.kind != TermFactor::Kind::Rpow) continue;
    if (f.rpow.num % (i64)p == 0 || f.rpow.den % (i64)p == 0)
      throw Error(ErrorKind::NotInvertible,
                  "geometric ratio not a p-unit at p = " + std::to_string(p));
    u128 r = mw.mul(mw.reduce_i64(f.rpow.num), mw.inv(mw.reduce_i64(f.rpow.den)));
    rstep = mw.mul(rstep, r);
    have_rpow = true;
  }

  std::vector<const std::vector<PadicValue>*> shared(spec.factors.size(), nullptr);
  std::vector<const std::vector<u128>*> seqs(spec.factors.size(), nullptr);
  for (size_t i = 0; i < spec.factors.size(); ++i) {
    const auto& f = spec.factors[i];
    if (f.kind == TermFactor::Kind::Binom) shared[i] = env.shared_binom(f.binom);
    if (f.kind == TermFactor::Kind::SeqRef) seqs[i] = &env.seq_values(f.seq);
  }

  u128 acc = 0;
  u128 rcur = 1 % mw.m;
  for (u64 k = 0; k < p; ++k) {
    PadicValue t = PadicValue::one();
    u128 seq_part = 1 % mw.m;
    bool has_seq = false;
    for (size_t i = 0; i < spec.factors.size(); ++i) {
      const auto& f = spec.factors[i];
      switch (f.kind) {
        case TermFactor::Kind::Binom: {
          PadicValue b;
          if (shared[i]) {
            b = (*shared[i])[k];
          } else {
            i64 top = f.binom.a1 * (i64)k + f.binom.b1;
            i64 bot = f.binom.a0 * (i64)k + f.binom.b0;
            if (top < 0 || bot < 0 || bot > top)
              throw Error(ErrorKind::OutOfRange, "binomial arguments in sum");
            b = table.binom((u64)top, (u64)bot);
          }
          t = pv_mul(t, f.binom.exp == 1 ? b : pv_pow(b, f.binom.exp, ctx), ctx);
          break;
        }
        case TermFactor::Kind::PolyInv: {
          i64 n = f.polyinv.two_k_minus_1 ? 2 * (i64)k - 1 : (i64)k + 1;
          PadicValue v;
          if (n < 0) {
            v = pv_from_int(n, ctx);  // only k = 0, n = -1
            v = pv_div(PadicValue::one(), v, ctx);
          } else {
            v = table.stripped_int_inv((u64)n);
          }
          t = pv_mul(t, f.polyinv.power == 1 ? v : pv_pow(v, f.polyinv.power, ctx),
                     ctx);
          break;
        }
        case TermFactor::Kind::SeqRef:
          seq_part = mw.mul(seq_part, (*seqs[i])[k]);
          has_seq = true;
          break;
        case TermFactor::Kind::Rpow:
          break;  // folded into rcur
      }
    }
    if (have_rpow) t = pv_mul(t, {0, rcur, false}, ctx);
    u128 r = pv_to_residue(t, ctx.W, ctx);
    if (has_seq) r = mw.mul(r, seq_part);
    acc = mw.add(acc, r);
    if (have_rpow) rcur = mw.mul(rcur, rstep);
  }

  switch (spec.prefix.kind) {
    case SumPrefix::Kind::None:
      break;
    case SumPrefix::Kind::Leg: {
      int s = symbol(spec.prefix.leg, p);
      if (s == 0) return 0;
      if (s < 0) acc = mw.neg(acc);
      break;
    }
    case SumPrefix::Kind::SgnHalf:
      if ((p - 1) / 2 % 2 == 1) acc = mw.neg(acc);
      break;
    case SumPrefix::Kind::SgnFloorP4:
      if ((p / 4) % 2 == 1) acc = mw.neg(acc);
      break;
  }
  return acc;
}

u128 Env::sum(const std::string& id) {
  auto it = sums_.find(id);
  if (it != sums_.end()) return it->second;
  auto sit = reg_->sums.find(id);
  if (sit == reg_->sums.end())
    throw Error(ErrorKind::UnboundSymbol, "unknown sum '" + id + "'");
  u128 v = eval_sum(sit->second, *this);
  sums_.emplace(id, v);
  return v;
}

std::vector<std::string> Env::evaluated_sums() const {
  std::vector<std::string> ids;
  for (const auto& [id, _] : sums_)
    if (id != "__r7") ids.push_back(id);
  return ids;
}

const std::vector<u128>& Env::seq_values(Seq s) {
  auto it = seqs_.find(s);
  if (it != seqs_.end()) return it->second;
  return seqs_.emplace(s, seq_mod(sequence_spec(s), ctx_, ctx_.W)).first->second;
}

const std::vector<Representation>& Env::reps(const FormSpec& f) {
  auto it = reps_.find(f);
  if (it != reps_.end()) return it->second;
  return reps_.emplace(f, represent(f, ctx_.p)).first->second;
}

u128 Env::special_r(RWhich which, int e) {
  auto key = std::make_pair((int)which, e);
  auto it = specials_.find(key);
  if (it != specials_.end()) return it->second;
  u128 v = R_value(which, ctx_, e);
  specials_.emplace(key, v);
  return v;
}

u128 Env::r7(int e) {
  if (!r7_) {
    if (reg_->sums.count("r7")) {
      r7_ = sum("r7");
    } else {
      SumSpec s;
      s.id = "__r7";
      TermFactor b;
      b.kind = TermFactor::Kind::Binom;
      b.binom = {2, 0, 1, 0, 3};
      TermFactor d;
      d.kind = TermFactor::Kind::PolyInv;
      d.polyinv = {false, 1};
      s.factors = {b, d};
      r7_ = eval_sum(s, *this);
    }
  }
  return *r7_ % ctx_.ppow[e];
}

u64 Env::ratio(RatioWhich which) {
  auto key = std::make_pair(100 + (int)which, 1);
  auto it = specials_.find(key);
  if (it != specials_.end()) return (u64)it->second;
  u128 v = ratio_binom(which, ctx_.p);
  specials_.emplace(key, v);
  return (u64)v;
}

u128 eval_expr(const Expr& ex, Env& env, const Bindings& b, int e) {
  const PrimeContext& ctx = env.ctx();
  const ResMod& mm = ctx.at(e);
  switch (ex.kind) {
    case Expr::Kind::Num: return mm.reduce_i64(ex.num);
    case Expr::Kind::P: return (u128)ctx.p % mm.m;
    case Expr::Kind::X:
      if (!b.has_xy) throw Error(ErrorKind::UnboundSymbol, "x is unbound here");
      return mm.reduce_i64(b.x);
    case Expr::Kind::Y:
      if (!b.has_xy) throw Error(ErrorKind::UnboundSymbol, "y is unbound here");
      return mm.reduce_i64(b.y);
    case Expr::Kind::SumRef: return env.sum(ex.sum_id) % mm.m;
    case Expr::Kind::R1: return env.special_r(RWhich::R1, e) % mm.m;
    case Expr::Kind::R2: return env.special_r(RWhich::R2, e) % mm.m;
    case Expr::Kind::R3: return env.special_r(RWhich::R3, e) % mm.m;
    case Expr::Kind::R7: return env.r7(e);
    case Expr::Kind::TP:
    case Expr::Kind::RP:
    case Expr::Kind::SP: {
      if (e != 1)
        throw Error(ErrorKind::BadConfig,
                    "t_p/r_p/s_p are defined mod p only");
      RatioWhich w = ex.kind == Expr::Kind::TP   ? RatioWhich::TP
                     : ex.kind == Expr::Kind::RP ? RatioWhich::RP
                                                 : RatioWhich::SP;
      return env.ratio(w);
    }
    case Expr::Kind::FB: return floor_binom(ex.fb, ctx, e);
    case Expr::Kind::Leg: return mm.reduce_i64(symbol(ex.num, ctx.p));
    case Expr::Kind::SgnHalf: return sign_atom(SignAtom::Neg1Half, ctx, e);
    case Expr::Kind::SgnFloorP4: return sign_atom(SignAtom::Neg1FloorP4, ctx, e);
    case Expr::Kind::Pw5m: return sign_atom(SignAtom::Pow5NegFloorP3, ctx, e);
    case Expr::Kind::H: {
      if (e != 1)
        throw Error(ErrorKind::BadConfig, "H(p/N) is defined mod p only");
      return harmonic_sum_mod(ctx.p / (u64)ex.num, ctx.p);
    }
    case Expr::Kind::Q: return fermat_term_at(ex.num, ctx, e);
    case Expr::Kind::Inv: return mm.inv(eval_expr(*ex.lhs, env, b, e));
    case Expr::Kind::Neg: return mm.neg(eval_expr(*ex.lhs, env, b, e));
    case Expr::Kind::Add:
      return mm.add(eval_expr(*ex.lhs, env, b, e), eval_expr(*ex.rhs, env, b, e));
    case Expr::Kind::Sub:
      return mm.sub(eval_expr(*ex.lhs, env, b, e), eval_expr(*ex.rhs, env, b, e));
    case Expr::Kind::Mul:
      return mm.mul(eval_expr(*ex.lhs, env, b, e), eval_expr(*ex.rhs, env, b, e));
    case Expr::Kind::Div: {
      u128 num = eval_expr(*ex.lhs, env, b, e);
      u128 den = eval_expr(*ex.rhs, env, b, e);
      return mm.mul(num, mm.inv(den));
    }
    case Expr::Kind::Pow: {
      u128 base = eval_expr(*ex.lhs, env, b, e);
      i64 n = ex.num;
      if (n < 0) {
        base = mm.inv(base);
        n = -n;
      }
      return mm.pow(base, (u128)n);
    }
  }
  throw Error(ErrorKind::BadConfig, "unknown expression node");
}

namespace {

// Condition evaluation outcome: met/unmet, plus bindings or ambiguity.
struct CondOutcome {
  bool met = false;
  bool ambiguous = false;
  Bindings bindings;
};

CondOutcome eval_condition(const Condition& cond, Env& env) {
  CondOutcome out;
  u64 p = env.ctx().p;
  Bindings b;
  for (const auto& atom : cond.atoms) {
    switch (atom.kind) {
      case CondAtom::Kind::Residue: {
        i64 r = (i64)(p % (u64)atom.mod);
        if (std::find(atom.set.begin(), atom.set.end(), r) == atom.set.end())
          return out;
        break;
      }
      case CondAtom::Kind::Symbol:
        if (symbol(atom.leg_a, p) != atom.want) return out;
        break;
      case CondAtom::Kind::PNotEq:
        if (p == atom.pneq) return out;
        break;
      case CondAtom::Kind::Rep: {
        const auto& reps = env.reps(atom.form);
        if (reps.empty()) return out;  // ConditionUnmet
        if (ambiguous(reps)) {
          out.ambiguous = true;
          return out;
        }
        Representation r = reps.front();
        if (atom.xmod4)
          r = normalize(r, SignConstraint::XMod4Eq1);
        b.has_xy = true;
        b.x = r.x;
        b.y = r.y;
        break;
      }
    }
  }
  out.met = true;
  out.bindings = b;
  return out;
}

}  // namespace

std::vector<CaseResult> verify(const ConjectureSpec& conj, Env& env,
                               int mod_power_override) {
  std::vector<CaseResult> results;
  u64 p = env.ctx().p;
  if (conj.excludes(p)) {
    results.push_back({conj.id, p, -1, Status::Skipped, 0, 0, 0, "", false});
    return results;
  }
  bool fired = false;
  for (size_t i = 0; i < conj.cases.size(); ++i) {
    const CaseRule& rule = conj.cases[i];
    CondOutcome cond;
    try {
      cond = eval_condition(rule.cond, env);
    } catch (const Error& err) {
      results.push_back({conj.id, p, (int)i, Status::EngineError, 0, 0, 0,
                         std::string("condition: ") + err.what(), false});
      fired = true;
      continue;
    }
    if (cond.ambiguous) {
      results.push_back({conj.id, p, (int)i, Status::Ambiguous, 0, 0, 0,
                         "representation not unique in (x^2, y^2)", false});
      fired = true;
      continue;
    }
    if (!cond.met) continue;
    fired = true;
    int e = mod_power_override > 0 ? mod_power_override : rule.mod_power;
    CaseResult res{conj.id, p, (int)i, Status::Fail, 0, 0,
                   env.ctx().ppow[e], "", false};
    try {
      res.lhs = eval_expr(*rule.lhs, env, cond.bindings, e);
      res.rhs = eval_expr(*rule.rhs, env, cond.bindings, e);
      if (res.lhs == res.rhs) {
        res.status = Status::Pass;
      } else if (rule.alt_rhs) {
        u128 alt = eval_expr(*rule.alt_rhs, env, cond.bindings, e);
        res.status = Status::Fail;
        res.note = alt == res.lhs
                       ? "suspect entry: alternate reading passes (" +
                             to_string_u128(alt) + ")"
                       : "suspect entry: alternate reading also fails (" +
                             to_string_u128(alt) + ")";
      }
    } catch (const Error& err) {
      res.status = Status::EngineError;
      res.note = err.what();
    }
    results.push_back(std::move(res));
  }
  if (!fired)
    results.push_back({conj.id, p, -1, Status::NoCase, 0, 0, 0, "", false});
  return results;
}

std::vector<CaseResult> verify_stronger(const ConjectureSpec& conj, Env& env) {
  std::vector<CaseResult> results;
  u64 p = env.ctx().p;
  if (conj.excludes(p)) return results;
  for (size_t i = 0; i < conj.cases.size(); ++i) {
    const CaseRule& rule = conj.cases[i];
    if (rule.mod_power != 1) continue;
    CondOutcome cond;
    try {
      cond = eval_condition(rule.cond, env);
    } catch (const Error&) {
      continue;
    }
    if (!cond.met || cond.ambiguous) continue;
    CaseResult res{conj.id, p, (int)i, Status::Fail, 0, 0,
                   env.ctx().ppow[2], "retest at p^2", true};
    try {
      res.lhs = eval_expr(*rule.lhs, env, cond.bindings, 2);
      res.rhs = eval_expr(*rule.rhs, env, cond.bindings, 2);
      if (res.lhs == res.rhs) res.status = Status::Pass;
    } catch (const Error& err) {
      res.status = Status::EngineError;
      res.note = err.what();
    }
    results.push_back(std::move(res));
  }
  return results;
}

namespace {
const std::vector<FitFamily> kFamilies = {
    {"2.32prod", "cc4_20736_k1", "cc4_20736", -10, {2, 3, 5}},
    {"2.33prod", "cc3_64_k1", "cc3_64", -11, {2, 11}},
    {"2.34prod", "c36_n96c_d1", "c36_n96c", -19, {2, 3}},
    {"2.35prod", "c36_n960c_d1", "c36_n960c", -43, {2, 3, 5}},
    {"2.36prod", "c36_n5280c_d1", "c36_n5280c", -67, {2, 3, 5, 11}},
};
}  // namespace

const std::vector<FitFamily>& fit_families() { return kFamilies; }

const FitFamily& fit_family(const std::string& id) {
  for (const auto& f : kFamilies)
    if (f.id == id) return f;
  throw Error(ErrorKind::BadConfig, "unknown fit family '" + id + "'");
}

FitResult fit_constant(const Registry& reg, const FitFamily& family,
                       const std::vector<u64>& primes, u64 bound) {
  FitResult out;
  u128 crt_m = 1;
  u128 crt_r = 0;
  int used = 0;
  for (u64 p : primes) {
    bool excluded = std::find(family.excluded.begin(), family.excluded.end(),
                              p) != family.excluded.end();
    if (excluded || !is_prime_u64(p) || p < 3 ||
        symbol(family.symbol_d, p) != -1) {
      out.skipped.push_back(p);
      continue;
    }
    PrimeContext ctx(p, 3);
    Env env(reg, ctx);
    u128 a = env.sum(family.sum_a) % ctx.ppow[3];
    u128 b = env.sum(family.sum_b) % ctx.ppow[3];
    u128 prod = ctx.at(3).mul(a, b);
    u128 p2 = ctx.ppow[2];
    if (prod % p2 != 0)
      throw Error(ErrorKind::Inconsistent,
                  "product not divisible by p^2 at p = " + std::to_string(p));
    u64 r = (u64)(prod / p2 % p);
    out.residues.emplace_back(p, r);
    // CRT fold
    if (crt_m > (u128(1) << 100))
      throw Error(ErrorKind::BadConfig,
                  "too many primes: CRT modulus exceeds 2^120");
    u128 m_new = crt_m * p;
    // solve z == crt_r (mod crt_m), z == r (mod p)
    u128 diff = ((u128)r + p - (u128)(crt_r % p)) % p;
    u128 inv = mod_inv(crt_m % p, p);
    u128 t = mulmod_any(diff, inv, p);
    crt_r = crt_r + crt_m * t;
    crt_m = m_new;
    ++used;
  }
  if (used < 2)
    throw Error(ErrorKind::BadConfig,
                "need at least 2 qualifying primes, got " + std::to_string(used));
  // The walk needs 2*stop^2 <= M for a forced answer; a caller bound wider
  // than that is clamped.
  u64 eff = std::min<u64>(bound, isqrt_u128(crt_m / 2));
  Rational64 c = rational_reconstruct(crt_r, crt_m, eff);
  // Cross-prime agreement: the reconstructed constant must reproduce every
  // per-prime residue.
  for (const auto& [p, r] : out.residues) {
    u128 den = (u128)((c.den % (i64)p + (i64)p) % (i64)p);
    if (den == 0)
      throw Error(ErrorKind::Inconsistent,
                  "denominator not invertible at p = " + std::to_string(p));
    u128 num = (u128)((c.num % (i64)p + (i64)p) % (i64)p);
    u128 rhs = mulmod_any(num, mod_inv(den, p), p);
    if ((u128)r != rhs)
      throw Error(ErrorKind::Inconsistent,
                  "per-prime residues disagree with reconstruction at p = " +
                      std::to_string(p));
  }
  out.constant = c;
  return out;
}

}  // namespace supercong
