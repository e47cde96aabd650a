#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "supercong/runner.hpp"

using namespace supercong;

namespace {

const char* kTwo = R"(
conjecture "beukers" proved {
  exclude 3
  sum c3_64 = SUM(k) [C(2k,k)^3 * rpow(1/64)]
  case p % 4 in {3} : S(c3_64) === 0 mod p^2
  case p % 4 in {1} && rep(1,4,1) : S(c3_64) === 4*x^2 - 2*p mod p^2
}
conjecture "su2.n8" proved {
  sum c3_n8_k1 = SUM(k) [C(2k,k)^3 * rpow(-1/8) * inv(k+1)]
  case p % 4 in {1} && rep(1,4,1) : S(c3_n8_k1) === 6*x^2 - 4*p mod p^2
}
)";

}  // namespace

TEST_CASE("sieve examples") {
  CHECK(sieve_primes(1, 10) == std::vector<u64>({2, 3, 5, 7}));
  CHECK(sieve_primes(3, 3) == std::vector<u64>{3});
  CHECK(sieve_primes(14, 16).empty());
  CHECK_THROWS_AS((void)sieve_primes(1, u64(1) << 21), Error);
}

TEST_CASE("glob matching") {
  CHECK(glob_match("*", "anything"));
  CHECK(glob_match("2.*", "2.13"));
  CHECK(!glob_match("2.*", "3.13"));
  CHECK(glob_match("beukers,rv.*", "rv.108"));
  CHECK(glob_match("?.1", "2.1"));
  CHECK(!glob_match("?.1", "2.11"));
}

TEST_CASE("run produces ordered records and a clean summary") {
  Registry reg = parse_registry(kTwo);
  RunConfig cfg;
  cfg.lo = 3;
  cfg.hi = 60;
  cfg.oracle_below = 60;
  VerificationReport rep = run(reg, cfg);
  CHECK(rep.exit_code() == 0);
  CHECK(rep.summary.at("beukers").fail == 0);
  CHECK(rep.summary.at("beukers").skipped == 1);  // p = 3 excluded
  CHECK(rep.summary.at("su2.n8").nocase > 0);     // p == 3 mod 4 vacuous
  // ordering: conjecture declaration order, then prime, then case
  for (size_t i = 1; i < rep.records.size(); ++i) {
    const auto& a = rep.records[i - 1];
    const auto& b = rep.records[i];
    bool ordered = a.conj != b.conj || a.p < b.p ||
                   (a.p == b.p && a.case_index <= b.case_index);
    CHECK(ordered);
  }
}

TEST_CASE("empty filter match gives an empty report") {
  Registry reg = parse_registry(kTwo);
  RunConfig cfg;
  cfg.lo = 5;
  cfg.hi = 40;
  cfg.filter = "nothing.*";
  VerificationReport rep = run(reg, cfg);
  CHECK(rep.records.empty());
  CHECK(rep.exit_code() == 0);
  std::string body = emit(rep, RunConfig::Format::Jsonl);
  CHECK(body.rfind("{\"meta\"", 0) == 0);
  CHECK(std::count(body.begin(), body.end(), '\n') == 1);
}

TEST_CASE("parallel runs are byte-identical to serial") {
  Registry reg = parse_registry(kTwo);
  RunConfig cfg;
  cfg.lo = 3;
  cfg.hi = 300;
  cfg.oracle_below = 0;
  cfg.jobs = 1;
  VerificationReport serial = run(reg, cfg);
  cfg.jobs = 8;
  VerificationReport parallel = run(reg, cfg);
  CHECK(emit(serial, RunConfig::Format::Jsonl) ==
        emit(parallel, RunConfig::Format::Jsonl));
  CHECK(emit(serial, RunConfig::Format::Csv) ==
        emit(parallel, RunConfig::Format::Csv));
}

TEST_CASE("emit formats are stable and distinguish counts") {
  Registry reg = parse_registry(kTwo);
  RunConfig cfg;
  cfg.lo = 5;
  cfg.hi = 60;
  cfg.oracle_below = 0;
  VerificationReport rep = run(reg, cfg);
  std::string a = emit(rep, RunConfig::Format::Jsonl);
  std::string b = emit(rep, RunConfig::Format::Jsonl);
  CHECK(a == b);
  std::string one_pass = emit(rep, RunConfig::Format::Table);
  CHECK(one_pass.find("TOTAL") != std::string::npos);

  cfg.hi = 100;
  VerificationReport rep2 = run(reg, cfg);
  CHECK(emit(rep2, RunConfig::Format::Jsonl) != a);
}

TEST_CASE("exit codes") {
  // A failing entry: wrong RHS constant.
  Registry reg = parse_registry(R"(
conjecture "wrong" conjectured {
  sum one = SUM(k) [C(k,0)]
  case always : S(one) === p + 1 mod p^2
}
)");
  RunConfig cfg;
  cfg.lo = 5;
  cfg.hi = 20;
  cfg.oracle_below = 0;
  VerificationReport rep = run(reg, cfg);
  CHECK(rep.exit_code() == 1);

  // An engine error: dividing by a non-unit.
  Registry reg2 = parse_registry(R"(
conjecture "err" conjectured {
  sum one = SUM(k) [C(k,0)]
  case always : S(one) === 1/p mod p^2
}
)");
  VerificationReport rep2 = run(reg2, cfg);
  CHECK(rep2.exit_code() == 2);
}

TEST_CASE("check-stronger records are separate and do not affect exit") {
  Registry reg = parse_registry(R"(
conjecture "c" conjectured {
  sum one = SUM(k) [C(k,0)]
  case always : S(one) === p mod p
}
)");
  RunConfig cfg;
  cfg.lo = 5;
  cfg.hi = 30;
  cfg.oracle_below = 0;
  cfg.check_stronger = true;
  VerificationReport rep = run(reg, cfg);
  CHECK(!rep.stronger.empty());
  CHECK(rep.exit_code() == 0);
  for (const auto& r : rep.stronger) {
    CHECK(r.stronger);
    // p == p holds mod p^2 as well
    CHECK(r.status == Status::Pass);
  }
}
