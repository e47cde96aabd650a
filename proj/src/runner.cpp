#include "supercong/runner.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

namespace supercong {

std::vector<u64> sieve_primes(u64 lo, u64 hi) {
  if (hi >= kMaxPrime)
    throw Error(ErrorKind::BadConfig, "prime bound must stay below 2^20");
  std::vector<u64> out;
  if (hi < 2 || hi < lo) return out;
  std::vector<bool> composite(hi + 1, false);
  for (u64 i = 2; i * i <= hi; ++i)
    if (!composite[i])
      for (u64 j = i * i; j <= hi; j += i) composite[j] = true;
  for (u64 i = std::max<u64>(lo, 2); i <= hi; ++i)
    if (!composite[i]) out.push_back(i);
  return out;
}

namespace {

bool glob_match_one(const char* pat, const char* s) {
  if (*pat == '\0') return *s == '\0';
  if (*pat == '*')
    return glob_match_one(pat + 1, s) || (*s != '\0' && glob_match_one(pat, s + 1));
  if (*s != '\0' && (*pat == '?' || *pat == *s))
    return glob_match_one(pat + 1, s + 1);
  return false;
}

}  // namespace

bool glob_match(const std::string& pattern, const std::string& s) {
  size_t start = 0;
  while (start <= pattern.size()) {
    size_t comma = pattern.find(',', start);
    std::string one = pattern.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    if (!one.empty() && glob_match_one(one.c_str(), s.c_str())) return true;
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return false;
}

int VerificationReport::exit_code() const {
  bool any_fail = false;
  for (const auto& [_, s] : summary) {
    if (s.engine_error) return 2;
    if (s.fail || s.ambiguous) any_fail = true;
  }
  return any_fail ? 1 : 0;
}

namespace {

struct PrimeOutcome {
  std::vector<CaseResult> records;
  std::vector<CaseResult> stronger;
};

PrimeOutcome run_prime(const Registry& reg,
                       const std::vector<const ConjectureSpec*>& selected,
                       u64 p, const RunConfig& config, int e_max) {
  PrimeOutcome out;
  if (p == 2) {
    // Everything here concerns odd primes.
    for (const auto* c : selected)
      out.records.push_back({c->id, p, -1, Status::Skipped, 0, 0, 0, "", false});
    return out;
  }
  PrimeContext ctx(p, e_max);
  Env env(reg, ctx);
  for (const auto* c : selected) {
    auto rs = verify(*c, env, config.mod_power_override);
    out.records.insert(out.records.end(), std::make_move_iterator(rs.begin()),
                       std::make_move_iterator(rs.end()));
    if (config.check_stronger) {
      auto ss = verify_stronger(*c, env);
      out.stronger.insert(out.stronger.end(), std::make_move_iterator(ss.begin()),
                          std::make_move_iterator(ss.end()));
    }
  }
  if (p < config.oracle_below) {
    // Exact big-rational recheck of every sum this prime touched.
    for (const auto& id : env.evaluated_sums()) {
      const SumSpec& spec = reg.sums.at(id);
      const std::string& parent = reg.sum_parent.at(id);
      if (!sum_valid_at(spec, p)) continue;
      try {
        u128 engine = env.sum(id) % ctx.ppow[e_max];
        u128 exact = oracle_sum_residue(spec, p, e_max);
        if (engine != exact)
          out.records.push_back(
              {parent, p, -2, Status::EngineError, engine, exact,
               ctx.ppow[e_max],
               "oracle mismatch for sum " + id + ": engine=" +
                   to_string_u128(engine) + " exact=" + to_string_u128(exact),
               false});
      } catch (const Error& err) {
        out.records.push_back({parent, p, -2, Status::EngineError, 0, 0, 0,
                               std::string("oracle error for sum ") + id + ": " +
                                   err.what(),
                               false});
      }
    }
  }
  return out;
}

void sort_records(std::vector<CaseResult>& rs,
                  const std::map<std::string, int>& conj_order) {
  std::stable_sort(rs.begin(), rs.end(),
                   [&](const CaseResult& a, const CaseResult& b) {
                     int oa = conj_order.at(a.conj), ob = conj_order.at(b.conj);
                     if (oa != ob) return oa < ob;
                     if (a.p != b.p) return a.p < b.p;
                     return a.case_index < b.case_index;
                   });
}

}  // namespace

VerificationReport run(const Registry& reg, const RunConfig& config) {
  VerificationReport report;
  report.registry_hash = reg.source_hash;
  report.filter = config.filter;

  std::vector<u64> primes = config.primes;
  if (primes.empty()) {
    primes = sieve_primes(config.lo, config.hi);
    report.range = std::to_string(config.lo) + ".." + std::to_string(config.hi);
  } else {
    std::ostringstream os;
    for (size_t i = 0; i < primes.size(); ++i) {
      if (i) os << ",";
      os << primes[i];
    }
    report.range = os.str();
    for (u64 p : primes)
      if (!is_prime_u64(p))
        throw Error(ErrorKind::BadConfig,
                    std::to_string(p) + " is not prime");
  }

  std::vector<const ConjectureSpec*> selected;
  std::map<std::string, int> conj_order;
  for (const auto& c : reg.conjectures) {
    conj_order.emplace(c.id, (int)conj_order.size());
    if (glob_match(config.filter, c.id)) selected.push_back(&c);
  }

  int e_max = 1;
  for (const auto* c : selected) e_max = std::max(e_max, c->max_mod_power());
  if (config.mod_power_override > 0)
    e_max = std::max(e_max, config.mod_power_override);
  if (config.check_stronger) e_max = std::max(e_max, 2);

  std::vector<PrimeOutcome> outcomes(primes.size());
  int jobs = std::max(1, config.jobs);
  if (jobs == 1) {
    for (size_t i = 0; i < primes.size(); ++i)
      outcomes[i] = run_prime(reg, selected, primes[i], config, e_max);
  } else {
    std::atomic<size_t> next{0};
    auto worker = [&]() {
      for (;;) {
        size_t i = next.fetch_add(1);
        if (i >= primes.size()) return;
        outcomes[i] = run_prime(reg, selected, primes[i], config, e_max);
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  for (auto& o : outcomes) {
    report.records.insert(report.records.end(),
                          std::make_move_iterator(o.records.begin()),
                          std::make_move_iterator(o.records.end()));
    report.stronger.insert(report.stronger.end(),
                           std::make_move_iterator(o.stronger.begin()),
                           std::make_move_iterator(o.stronger.end()));
  }
  sort_records(report.records, conj_order);
  sort_records(report.stronger, conj_order);

  for (const auto* c : selected) report.summary.emplace(c->id, ConjSummary{});
  for (const auto& r : report.records) {
    ConjSummary& s = report.summary[r.conj];
    switch (r.status) {
      case Status::Pass: ++s.pass; break;
      case Status::Fail: ++s.fail; break;
      case Status::NoCase: ++s.nocase; break;
      case Status::Ambiguous: ++s.ambiguous; break;
      case Status::Skipped: ++s.skipped; break;
      case Status::EngineError: ++s.engine_error; break;
    }
  }
  return report;
}

namespace {

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

void emit_record_jsonl(std::ostringstream& os, const CaseResult& r) {
  os << "{\"conj\":\"" << json_escape(r.conj) << "\",\"p\":" << r.p
     << ",\"case\":" << r.case_index << ",\"status\":\""
     << status_name(r.status) << "\"";
  if (r.status == Status::Pass || r.status == Status::Fail)
    os << ",\"lhs\":\"" << to_string_u128(r.lhs) << "\",\"rhs\":\""
       << to_string_u128(r.rhs) << "\",\"mod\":\"" << to_string_u128(r.modulus)
       << "\"";
  if (r.stronger) os << ",\"stronger\":true";
  if (!r.note.empty()) os << ",\"note\":\"" << json_escape(r.note) << "\"";
  os << "}\n";
}

}  // namespace

std::string emit(const VerificationReport& report, RunConfig::Format format) {
  std::ostringstream os;
  switch (format) {
    case RunConfig::Format::Jsonl: {
      os << "{\"meta\":{\"registry\":\"" << report.registry_hash
         << "\",\"primes\":\"" << report.range << "\",\"filter\":\""
         << json_escape(report.filter) << "\"}}\n";
      for (const auto& r : report.records) emit_record_jsonl(os, r);
      for (const auto& r : report.stronger) emit_record_jsonl(os, r);
      break;
    }
    case RunConfig::Format::Csv: {
      os << "# registry=" << report.registry_hash << " primes=" << report.range
         << " filter=" << report.filter << "\n";
      os << "conj,p,case,status,lhs,rhs,mod,stronger,note\n";
      auto row = [&](const CaseResult& r) {
        os << r.conj << "," << r.p << "," << r.case_index << ","
           << status_name(r.status) << ",";
        if (r.status == Status::Pass || r.status == Status::Fail)
          os << to_string_u128(r.lhs) << "," << to_string_u128(r.rhs) << ","
             << to_string_u128(r.modulus);
        else
          os << ",,";
        os << "," << (r.stronger ? 1 : 0) << ",";
        std::string note = r.note;
        for (char& c : note)
          if (c == ',') c = ';';
        os << note << "\n";
      };
      for (const auto& r : report.records) row(r);
      for (const auto& r : report.stronger) row(r);
      break;
    }
    case RunConfig::Format::Table: {
      os << "registry " << report.registry_hash << "  primes " << report.range
         << "  filter " << report.filter << "\n";
      os << "conjecture        pass    fail  nocase  ambig   skip  engerr\n";
      ConjSummary tot;
      for (const auto& [id, s] : report.summary) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "%-15s %7llu %7llu %7llu %6llu %6llu %7llu\n",
                      id.c_str(), (unsigned long long)s.pass,
                      (unsigned long long)s.fail, (unsigned long long)s.nocase,
                      (unsigned long long)s.ambiguous,
                      (unsigned long long)s.skipped,
                      (unsigned long long)s.engine_error);
        os << buf;
        tot.pass += s.pass;
        tot.fail += s.fail;
        tot.nocase += s.nocase;
        tot.ambiguous += s.ambiguous;
        tot.skipped += s.skipped;
        tot.engine_error += s.engine_error;
      }
      char buf[160];
      std::snprintf(buf, sizeof buf, "%-15s %7llu %7llu %7llu %6llu %6llu %7llu\n",
                    "TOTAL", (unsigned long long)tot.pass,
                    (unsigned long long)tot.fail, (unsigned long long)tot.nocase,
                    (unsigned long long)tot.ambiguous,
                    (unsigned long long)tot.skipped,
                    (unsigned long long)tot.engine_error);
      os << buf;
      for (const auto& r : report.records) {
        if (r.status == Status::Fail || r.status == Status::Ambiguous ||
            r.status == Status::EngineError) {
          os << status_name(r.status) << ": " << r.conj << " p=" << r.p
             << " case=" << r.case_index;
          if (r.status == Status::Fail)
            os << " lhs=" << to_string_u128(r.lhs)
               << " rhs=" << to_string_u128(r.rhs)
               << " mod=" << to_string_u128(r.modulus);
          if (!r.note.empty()) os << " (" << r.note << ")";
          os << "\n";
        }
      }
      if (!report.stronger.empty()) {
        u64 sp = 0, sf = 0;
        for (const auto& r : report.stronger)
          (r.status == Status::Pass ? sp : sf) += 1;
        os << "stronger retest (mod p^2): " << sp << " pass, " << sf
           << " other\n";
      }
      break;
    }
  }
  return os.str();
}

}  // namespace supercong
