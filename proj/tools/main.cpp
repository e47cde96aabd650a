#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "supercong/oracle.hpp"
#include "supercong/runner.hpp"

using namespace supercong;

namespace {

#ifndef SUPERCONG_DEFAULT_REGISTRY
#define SUPERCONG_DEFAULT_REGISTRY "data/paper.conj"
#endif

// "5..10000" or "13,29,41"
void parse_primes_arg(const std::string& arg, RunConfig& cfg) {
  auto dots = arg.find("..");
  if (dots != std::string::npos) {
    cfg.lo = (u64)parse_u128(arg.substr(0, dots));
    cfg.hi = (u64)parse_u128(arg.substr(dots + 2));
    return;
  }
  size_t start = 0;
  while (start <= arg.size()) {
    size_t comma = arg.find(',', start);
    std::string one = arg.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    if (!one.empty()) cfg.primes.push_back((u64)parse_u128(one));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (cfg.primes.empty())
    throw Error(ErrorKind::BadConfig, "empty prime list: " + arg);
}

// Accepts "1000000" and "10^6".
u64 parse_bound_arg(const std::string& s) {
  auto caret = s.find('^');
  if (caret == std::string::npos) return (u64)parse_u128(s);
  u64 base = (u64)parse_u128(s.substr(0, caret));
  u64 exp = (u64)parse_u128(s.substr(caret + 1));
  u64 v = 1;
  for (u64 i = 0; i < exp; ++i) v *= base;
  return v;
}

int cmd_verify(const std::string& registry_path, const std::string& primes,
               const std::string& filter, int jobs, const std::string& format,
               const std::string& out_path, u64 oracle_below,
               bool check_stronger, int mod_power) {
  Registry reg = load_registry_file(registry_path);
  RunConfig cfg;
  parse_primes_arg(primes, cfg);
  cfg.filter = filter;
  cfg.jobs = jobs;
  cfg.oracle_below = oracle_below;
  cfg.check_stronger = check_stronger;
  cfg.mod_power_override = mod_power;
  if (format == "jsonl")
    cfg.format = RunConfig::Format::Jsonl;
  else if (format == "csv")
    cfg.format = RunConfig::Format::Csv;
  else if (format == "table")
    cfg.format = RunConfig::Format::Table;
  else
    throw Error(ErrorKind::BadConfig, "unknown format: " + format);

  VerificationReport rep = run(reg, cfg);
  std::string body = emit(rep, cfg.format);
  if (out_path.empty() || out_path == "-") {
    std::cout << body;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw Error(ErrorKind::BadConfig, "cannot open " + out_path);
    out << body;
  }
  return rep.exit_code();
}

int cmd_fit(const std::string& registry_path, const std::string& family_id,
            const std::string& primes, const std::string& bound) {
  Registry reg = load_registry_file(registry_path);
  const FitFamily& fam = fit_family(family_id);
  RunConfig tmp;
  parse_primes_arg(primes, tmp);
  std::vector<u64> plist = tmp.primes;
  if (plist.empty()) plist = sieve_primes(tmp.lo, tmp.hi);
  FitResult res = fit_constant(reg, fam, plist, parse_bound_arg(bound));
  std::cout << "family " << fam.id << ": c = " << res.constant.num << "/"
            << res.constant.den << "\n";
  for (const auto& [p, r] : res.residues)
    std::cout << "  p=" << p << "  c mod p = " << r << "\n";
  for (u64 p : res.skipped) std::cout << "  skipped " << p << "\n";
  return 0;
}

int cmd_selftest(const std::string& registry_path);

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"supercong: numerical verification of binomial-sum and "
               "Apery-like congruences at desk scale"};
  app.require_subcommand(1);

  std::string registry_path = SUPERCONG_DEFAULT_REGISTRY;

  auto* verify_cmd = app.add_subcommand("verify", "verify registry entries");
  std::string primes = "5..1000", filter = "*", format = "table", out;
  int jobs = 1, mod_power = 0;
  u64 oracle_below = 100;
  bool check_stronger = false;
  verify_cmd->add_option("--registry", registry_path, "registry file");
  verify_cmd->add_option("--primes", primes, "range lo..hi or list p1,p2,...");
  verify_cmd->add_option("--filter", filter, "comma-separated id globs");
  verify_cmd->add_option("--jobs", jobs, "worker count");
  verify_cmd->add_option("--format", format, "jsonl | csv | table");
  verify_cmd->add_option("--out", out, "output path (default stdout)");
  verify_cmd->add_option("--oracle-below", oracle_below,
                         "exact big-integer crosscheck for p below this");
  verify_cmd->add_flag("--check-stronger", check_stronger,
                       "re-test stated mod-p cases at mod p^2 (reported "
                       "separately, never affects the exit code)");
  verify_cmd->add_option("--mod-power", mod_power,
                         "override the stated modulus power (exploratory)");

  auto* fit_cmd = app.add_subcommand("fit", "fit a product-congruence constant");
  std::string family = "2.33prod", fit_primes = "13,29,41", bound = "10^6";
  fit_cmd->add_option("--registry", registry_path, "registry file");
  fit_cmd->add_option("--family", family, "family id (e.g. 2.33prod)");
  fit_cmd->add_option("--primes", fit_primes, "qualifying primes");
  fit_cmd->add_option("--bound", bound, "numerator/denominator bound (10^6 ok)");

  auto* self_cmd = app.add_subcommand("selftest", "run the invariant suites");
  self_cmd->add_option("--registry", registry_path, "registry file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify_cmd->parsed())
      return cmd_verify(registry_path, primes, filter, jobs, format, out,
                        oracle_below, check_stronger, mod_power);
    if (fit_cmd->parsed()) return cmd_fit(registry_path, family, fit_primes, bound);
    if (self_cmd->parsed()) return cmd_selftest(registry_path);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error (" << error_kind_name(e.kind()) << "): " << e.what()
              << "\n";
    return 2;
  }
  return 0;
}

namespace {

struct Check {
  const char* name;
  bool ok;
};

int cmd_selftest(const std::string& registry_path) {
  std::vector<Check> checks;
  auto add = [&](const char* name, bool ok) {
    checks.push_back({name, ok});
    std::cout << (ok ? "[pass] " : "[FAIL] ") << name << "\n";
  };

  // modular invariants
  {
    bool ok = true;
    for (u64 m : {97ull, 10007ull, 720720ull})
      for (u64 a = 1; a < 50; ++a) {
        if (gcd_u128(a, m) != 1) continue;
        ok = ok && mulmod_any(a, mod_inv(a, m), m) == 1;
      }
    add("mod_inv round-trip", ok);
  }
  {
    bool ok = true;
    for (u64 p : sieve_primes(3, 199))
      for (i64 a = 1; a < (i64)p && ok; ++a)
        for (i64 b = 1; b < (i64)p; b += 11)
          ok = ok && symbol(a * b, p) == symbol(a, p) * symbol(b, p);
    add("Legendre symbol multiplicative", ok);
  }
  {
    bool ok = true;
    for (u64 p : sieve_primes(3, 499)) {
      PrimeContext ctx(p, 2);
      for (i64 b : {2, 3, 5})
        if (b % (i64)p != 0) ok = ok && fermat_term(b, ctx) % p == 0;
    }
    add("fermat_term divisible by p", ok);
  }
  {
    bool ok = true;
    for (i64 n = -20; n <= 20; ++n)
      for (i64 d = 1; d <= 20; ++d) {
        if (gcd_u128((u128)(n < 0 ? -n : n), (u128)d) != 1) continue;
        u64 m = 1000003;
        u128 r = mulmod_any((u128)((n % (i64)m + (i64)m) % (i64)m),
                            mod_inv((u128)d, m), m);
        Rational64 f = rational_reconstruct(r, m, 700);
        ok = ok && f.num == n && f.den == d;
      }
    add("rational reconstruction", ok);
  }
  // sequence identities
  {
    bool ok = true;
    for (const auto& spec : all_sequences())
      for (u64 n = 0; n <= 30; ++n)
        ok = ok && seq_exact(spec, n) == seq_direct(spec.name, n);
    add("sequence recurrence == defining sums (n <= 30)", ok);
  }
  // quadform
  {
    bool ok = true;
    for (u64 p : sieve_primes(5, 997)) {
      if (p % 4 == 1) {
        auto reps = represent({1, 4, 1}, p);
        ok = ok && !reps.empty() && !ambiguous(reps);
        for (const auto& r : reps)
          ok = ok && r.x * r.x + 4 * r.y * r.y == (i64)p;
      }
    }
    add("x^2+4y^2 representations", ok);
  }
  // registry round trip + proved entries at small primes
  bool loaded = false;
  try {
    Registry reg = load_registry_file(registry_path);
    loaded = true;
    std::string printed = print_registry(reg);
    Registry reread = parse_registry(printed);
    add("registry parse-print-parse idempotent",
        print_registry(reread) == printed);

    RunConfig cfg;
    cfg.lo = 5;
    cfg.hi = 97;
    cfg.oracle_below = 98;
    VerificationReport rep = run(reg, cfg);
    add("full registry with oracle crosscheck, p <= 97", rep.exit_code() == 0);
  } catch (const Error& e) {
    std::cout << "registry: " << e.what() << "\n";
    add("registry loads", loaded);
  }

  int failed = 0;
  for (const auto& c : checks)
    if (!c.ok) ++failed;
  std::cout << (failed == 0 ? "selftest: all checks passed\n"
                            : "selftest: FAILURES\n");
  return failed == 0 ? 0 : 2;
}

}  // namespace
