// Acceptance suite: one line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cstdio>
#include <sstream>

#include "supercong/oracle.hpp"
#include "supercong/runner.hpp"

using namespace supercong;

namespace {

int g_failures = 0;

void report(int idx, bool ok, const std::string& detail) {
  std::printf("criterion %d: %s - %s\n", idx, ok ? "PASS" : "FAIL",
              detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

std::string clean_or_detail(const VerificationReport& rep) {
  u64 pass = 0, bad = 0;
  std::string first;
  for (const auto& [id, s] : rep.summary) {
    pass += s.pass;
    u64 b = s.fail + s.ambiguous + s.engine_error;
    bad += b;
    if (b && first.empty()) first = id;
  }
  std::ostringstream os;
  os << pass << " pass, " << bad << " bad";
  if (!first.empty()) os << " (first: " << first << ")";
  return os.str();
}

bool clean(const VerificationReport& rep) { return rep.exit_code() == 0; }

// 1. The proved section-1 entries pass for every valid prime 5 <= p < 2000.
void criterion1(const Registry& reg) {
  auto t0 = std::chrono::steady_clock::now();
  RunConfig cfg;
  cfg.lo = 5;
  cfg.hi = 1999;
  cfg.filter = "beukers,rv.*,su2.*";
  cfg.oracle_below = 0;
  cfg.jobs = 1;
  VerificationReport rep = run(reg, cfg);
  double dt = seconds_since(t0);
  u64 proved = 0;
  for (const auto& c : reg.conjectures)
    if (c.proved) ++proved;
  std::ostringstream os;
  os << proved << " proved entries, " << clean_or_detail(rep) << ", "
     << (int)(dt * 10) / 10.0 << "s single-threaded";
  report(1, clean(rep) && proved == 9 && dt < 60.0, os.str());
}

// 2. Engine residues equal the exact big-rational oracle for every registry
// sum at every valid prime 5 <= p <= 97, at full precision e = 3.
void criterion2(const Registry& reg) {
  u64 checked = 0, mismatched = 0;
  std::string first;
  for (u64 p : sieve_primes(5, 97)) {
    PrimeContext ctx(p, 3);
    Env env(reg, ctx);
    for (const auto& [id, spec] : reg.sums) {
      if (!sum_valid_at(spec, p)) continue;
      if (reg.find(reg.sum_parent.at(id))->excludes(p)) continue;
      u128 engine = env.sum(id) % ctx.ppow[3];
      u128 exact = oracle_sum_residue(spec, p, 3);
      ++checked;
      if (engine != exact) {
        ++mismatched;
        if (first.empty())
          first = id + " at p=" + std::to_string(p);
      }
    }
  }
  std::ostringstream os;
  os << checked << " (sum, prime) pairs, " << mismatched << " mismatches";
  if (!first.empty()) os << " (first: " << first << ")";
  report(2, mismatched == 0 && checked > 2000, os.str());
}

// 3. Sequence coherence: recurrence == defining sums (n <= 30) and modular
// arrays match exact values for p <= 97, e <= 3.
void criterion3() {
  u64 bad = 0;
  for (const auto& spec : all_sequences())
    for (u64 n = 0; n <= 30; ++n)
      if (seq_exact(spec, n) != seq_direct(spec.name, n)) ++bad;
  u64 badmod = 0;
  for (u64 p : sieve_primes(3, 97)) {
    for (int e = 1; e <= 3; ++e) {
      PrimeContext ctx(p, e);
      for (const auto& spec : all_sequences()) {
        auto arr = seq_mod(spec, ctx);
        auto exact = seq_exact_array(spec, p);
        for (u64 n = 0; n < p; ++n) {
          bigint m = ctx.pe;
          bigint r = exact[n] % m;
          if (r < 0) r += m;
          if (arr[n] != (u128)r.convert_to<u64>()) ++badmod;
        }
      }
    }
  }
  std::ostringstream os;
  os << "7 sequences; direct-sum mismatches: " << bad
     << ", modular mismatches: " << badmod;
  report(3, bad == 0 && badmod == 0, os.str());
}

// 4. Full-registry verification at the stated powers for p < 1000.
void criterion4(const Registry& reg) {
  auto t0 = std::chrono::steady_clock::now();
  RunConfig cfg;
  cfg.lo = 3;
  cfg.hi = 999;
  cfg.oracle_below = 100;
  cfg.jobs = 4;
  VerificationReport rep = run(reg, cfg);
  double dt = seconds_since(t0);
  std::ostringstream os;
  os << reg.conjectures.size() << " conjectures, " << clean_or_detail(rep)
     << ", " << (int)(dt * 10) / 10.0 << "s with 4 workers";
  report(4, clean(rep) && dt < 600.0, os.str());
}

// 5. Constant recovery for the four product families.
void criterion5(const Registry& reg) {
  struct Expect {
    const char* family;
    i64 num;
    i64 den;
  };
  const Expect expects[] = {
      {"2.33prod", 25, 22},
      {"2.34prod", -985, 87552},
      {"2.35prod", -933889, 198144000},
      {"2.36prod", -155357161, 51365952000},
  };
  bool all_ok = true;
  std::ostringstream os;
  for (const auto& ex : expects) {
    const FitFamily& fam = fit_family(ex.family);
    // enough qualifying primes that sqrt(M/2) clears the constant's height
    u128 need = (u128)8 * (u128)ex.den * (u128)ex.den;
    std::vector<u64> primes;
    u128 prod = 1;
    for (u64 p : sieve_primes(7, 5000)) {
      bool excl = std::find(fam.excluded.begin(), fam.excluded.end(), p) !=
                  fam.excluded.end();
      if (excl || symbol(fam.symbol_d, p) != -1) continue;
      primes.push_back(p);
      prod *= p;
      if (prod > need) break;
    }
    bool ok = false;
    std::string note;
    try {
      FitResult res =
          fit_constant(reg, fam, primes, (u64)std::min<u128>(
                                             (u128)10 * ex.den, UINT64_MAX));
      ok = res.constant.num == ex.num && res.constant.den == ex.den &&
           res.residues.size() >= 3;
      note = std::to_string(res.constant.num) + "/" +
             std::to_string(res.constant.den) + " from " +
             std::to_string(res.residues.size()) + " primes";
    } catch (const Error& err) {
      note = err.what();
    }
    os << ex.family << "=" << note << " ";
    all_ok = all_ok && ok;
  }
  report(5, all_ok, os.str());
}

// 6. Representation solver over every form and stated class, p < 10^4.
void criterion6() {
  struct FormClass {
    FormSpec form;
    i64 mod;
    std::vector<i64> classes;
    i64 sym;  // when mod == 0: class is symbol(sym) == 1
  };
  const std::vector<FormClass> table = {
      {{1, 4, 1}, 4, {1}, 0},
      {{1, 2, 1}, 8, {1, 3}, 0},
      {{1, 3, 1}, 3, {1}, 0},
      {{1, 5, 1}, 20, {1, 9}, 0},
      {{1, 5, 2}, 20, {3, 7}, 0},
      {{1, 6, 1}, 24, {1, 7}, 0},
      {{2, 3, 1}, 24, {5, 11}, 0},
      {{1, 7, 1}, 7, {1, 2, 4}, 0},
      {{1, 9, 1}, 12, {1}, 0},
      {{1, 9, 2}, 12, {5}, 0},
      {{1, 10, 1}, 40, {1, 9, 11, 19}, 0},
      {{2, 5, 1}, 40, {7, 13, 23, 37}, 0},
      {{1, 15, 1}, 30, {1, 19}, 0},
      {{3, 5, 1}, 30, {17, 23}, 0},
      {{1, 11, 4}, 11, {1, 3, 4, 5, 9}, 0},
      {{1, 27, 4}, 3, {1}, 0},
      {{1, 19, 4}, 0, {}, -19},
      {{1, 43, 4}, 0, {}, -43},
      {{1, 67, 4}, 0, {}, -67},
      {{1, 163, 4}, 0, {}, -163},
  };
  u64 checked = 0, missing = 0, ambig = 0, wrong = 0;
  for (u64 p : sieve_primes(3, 9999)) {
    for (const auto& fc : table) {
      if ((u64)fc.form.a % p == 0 || (u64)fc.form.b % p == 0 || p == 2)
        continue;
      bool in_class;
      if (fc.mod == 0) {
        in_class = symbol(fc.sym, p) == 1;
      } else {
        i64 r = (i64)(p % (u64)fc.mod);
        in_class = std::find(fc.classes.begin(), fc.classes.end(), r) !=
                   fc.classes.end();
      }
      if (!in_class) continue;
      ++checked;
      auto reps = represent(fc.form, p);
      if (reps.empty()) {
        ++missing;
        continue;
      }
      if (ambiguous(reps)) ++ambig;
      for (const auto& r : reps)
        if (fc.form.a * r.x * r.x + fc.form.b * r.y * r.y !=
            fc.form.m * (i64)p)
          ++wrong;
    }
  }
  std::ostringstream os;
  os << checked << " (form, prime) pairs; " << missing << " unrepresented, "
     << ambig << " ambiguous, " << wrong << " identity violations";
  report(6, missing == 0 && ambig == 0 && wrong == 0 && checked > 5000,
         os.str());
}

// 7. Determinism: jobs=1 and jobs=8 give byte-identical reports.
void criterion7(const Registry& reg) {
  RunConfig cfg;
  cfg.lo = 5;
  cfg.hi = 1999;
  cfg.oracle_below = 0;
  cfg.jobs = 1;
  VerificationReport serial = run(reg, cfg);
  cfg.jobs = 8;
  VerificationReport parallel = run(reg, cfg);
  std::string a = emit(serial, RunConfig::Format::Jsonl);
  std::string b = emit(parallel, RunConfig::Format::Jsonl);
  std::string ac = emit(serial, RunConfig::Format::Csv);
  std::string bc = emit(parallel, RunConfig::Format::Csv);
  std::ostringstream os;
  os << a.size() << " bytes jsonl, " << (a == b ? "identical" : "DIFFER")
     << "; csv " << (ac == bc ? "identical" : "DIFFER");
  report(7, a == b && ac == bc && !serial.records.empty(), os.str());
}

}  // namespace

int main() {
  Registry reg = load_registry_file(SUPERCONG_REGISTRY_PATH);
  std::printf("registry: %zu conjectures, %zu sums, hash %s\n",
              reg.conjectures.size(), reg.sums.size(),
              reg.source_hash.c_str());
  criterion1(reg);
  criterion2(reg);
  criterion3();
  criterion4(reg);
  criterion5(reg);
  criterion6();
  criterion7(reg);
  std::printf("acceptance: %s\n", g_failures == 0 ? "ALL PASS" : "FAILURES");
  return g_failures == 0 ? 0 : 1;
}
