#pragma once

#include <map>
#include <string>
#include <vector>

#include "supercong/eval.hpp"
#include "supercong/oracle.hpp"

namespace supercong {

struct RunConfig {
  u64 lo = 5, hi = 1000;
  std::vector<u64> primes;     // explicit list; overrides [lo, hi] when set
  std::string filter = "*";    // comma-separated globs over conjecture ids
  int mod_power_override = 0;  // 0 = stated powers
  u64 oracle_below = 100;      // exact crosscheck threshold
  int jobs = 1;
  bool check_stronger = false;

  enum class Format { Jsonl, Csv, Table } format = Format::Table;
};

struct ConjSummary {
  u64 pass = 0, fail = 0, nocase = 0, ambiguous = 0, skipped = 0,
      engine_error = 0;
};

struct VerificationReport {
  std::string registry_hash;
  std::string range;
  std::string filter;
  std::vector<CaseResult> records;   // (conjecture, prime, case) ascending
  std::vector<CaseResult> stronger;  // exploratory re-tests, kept apart
  std::map<std::string, ConjSummary> summary;

  // 0: all pass/skip; 1: any fail or ambiguous; 2: any engine error.
  int exit_code() const;
};

std::vector<u64> sieve_primes(u64 lo, u64 hi);

// Simple glob: '*' and '?', alternatives separated by commas.
bool glob_match(const std::string& pattern, const std::string& s);

VerificationReport run(const Registry& reg, const RunConfig& config);

std::string emit(const VerificationReport& report, RunConfig::Format format);

}  // namespace supercong
