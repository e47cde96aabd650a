#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "supercong/padic.hpp"
#include "supercong/registry.hpp"

namespace supercong {

enum class Status { Pass, Fail, NoCase, Ambiguous, Skipped, EngineError };

const char* status_name(Status s);

struct CaseResult {
  std::string conj;
  u64 p = 0;
  int case_index = -1;  // -1 for whole-conjecture records
  Status status = Status::Skipped;
  u128 lhs = 0, rhs = 0, modulus = 0;
  std::string note;
  bool stronger = false;  // produced by the exploratory mod-p^(e+1) re-test
};

// Bindings produced by a rep() condition.
struct Bindings {
  bool has_xy = false;
  i64 x = 0, y = 0;
};

// Per-prime evaluation state: one factorial table, shared binomial factor
// arrays, and caches for sums, sequences, representations and special
// atoms. Confined to one worker.
class Env {
 public:
  Env(const Registry& reg, PrimeContext ctx);

  const PrimeContext& ctx() const { return ctx_; }
  const Registry& registry() const { return *reg_; }
  const FactorialTable& table() const { return table_; }

  // Cached named-sum residue mod p^W. Throws on invalid primes.
  u128 sum(const std::string& id);
  // Sums already evaluated at this prime (for oracle crosschecks).
  std::vector<std::string> evaluated_sums() const;

  const std::vector<u128>& seq_values(Seq s);
  const std::vector<Representation>& reps(const FormSpec& f);

  u128 special_r(RWhich which, int e);
  u128 r7(int e);
  u64 ratio(RatioWhich which);

 private:
  friend u128 eval_sum(const SumSpec& spec, Env& env);
  const Registry* reg_;
  PrimeContext ctx_;
  FactorialTable table_;
  std::array<std::optional<std::vector<PadicValue>>, 4> shared_;
  std::map<std::string, u128> sums_;
  std::map<Seq, std::vector<u128>> seqs_;
  std::map<FormSpec, std::vector<Representation>> reps_;
  std::map<std::pair<int, int>, u128> specials_;
  std::optional<u128> r7_;

  const std::vector<PadicValue>* shared_binom(const BinomFactor& bf);
};

// Single pass over k = 0..p-1 assembling each term as a PadicValue;
// result is exact mod p^W.
u128 eval_sum(const SumSpec& spec, Env& env);

// Bottom-up evaluation mod p^e.
u128 eval_expr(const Expr& ex, Env& env, const Bindings& b, int e);

// Evaluate every applicable case of one conjecture at one prime.
std::vector<CaseResult> verify(const ConjectureSpec& conj, Env& env,
                               int mod_power_override = 0);

// The exploratory re-test of stated mod-p cases at mod p^2.
std::vector<CaseResult> verify_stronger(const ConjectureSpec& conj, Env& env);

// A product-congruence family (S_a * S_b == c * p^2 mod p^3) whose
// constant is recovered by CRT over qualifying primes plus one rational
// reconstruction.
struct FitFamily {
  std::string id;
  std::string sum_a, sum_b;
  i64 symbol_d = 0;  // qualifying primes have leg(symbol_d) == -1
  std::vector<u64> excluded;
};

const std::vector<FitFamily>& fit_families();
const FitFamily& fit_family(const std::string& id);

struct FitResult {
  Rational64 constant{};
  std::vector<std::pair<u64, u64>> residues;  // (p, c mod p)
  std::vector<u64> skipped;                   // primes not qualifying
};

FitResult fit_constant(const Registry& reg, const FitFamily& family,
                       const std::vector<u64>& primes, u64 bound);

}  // namespace supercong
