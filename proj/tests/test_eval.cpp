#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "supercong/eval.hpp"
#include "supercong/oracle.hpp"
#include "supercong/runner.hpp"

using namespace supercong;

namespace {

const char* kBeukers = R"(
conjecture "beukers" proved {
  exclude 3
  sum c3_64 = SUM(k) [C(2k,k)^3 * rpow(1/64)]
  case p % 4 in {3} : S(c3_64) === 0 mod p^2
  case p % 4 in {1} && rep(1,4,1) : S(c3_64) === 4*x^2 - 2*p mod p^2
}
)";

Registry beukers() { return parse_registry(kBeukers); }

}  // namespace

TEST_CASE("constant term sums to p") {
  Registry reg = parse_registry(R"(
conjecture "unit" conjectured {
  sum one = SUM(k) [C(k,0)]
  case always : S(one) === p mod p^2
}
)");
  for (u64 p : {5ull, 13ull, 97ull}) {
    PrimeContext ctx(p, 2);
    Env env(reg, ctx);
    CHECK(env.sum("one") == p);
    auto rs = verify(reg.conjectures[0], env);
    REQUIRE(rs.size() == 1);
    CHECK(rs[0].status == Status::Pass);
  }
}

TEST_CASE("Beukers instances") {
  Registry reg = beukers();
  {
    PrimeContext ctx(5, 2);
    Env env(reg, ctx);
    // 5 = 1 + 4: expect 4 - 10 = -6 = 19 mod 25
    CHECK(env.sum("c3_64") % ctx.ppow[2] == 19);
    auto rs = verify(reg.conjectures[0], env);
    REQUIRE(rs.size() == 1);
    CHECK(rs[0].status == Status::Pass);
    CHECK(rs[0].lhs == 19);
  }
  {
    PrimeContext ctx(7, 2);
    Env env(reg, ctx);
    auto rs = verify(reg.conjectures[0], env);
    REQUIRE(rs.size() == 1);
    CHECK(rs[0].status == Status::Pass);
    CHECK(rs[0].lhs == 0);
  }
  {
    PrimeContext ctx(13, 2);
    Env env(reg, ctx);
    auto rs = verify(reg.conjectures[0], env);
    REQUIRE(rs.size() == 1);
    CHECK(rs[0].status == Status::Pass);
    CHECK(rs[0].lhs == 10);  // 4*9 - 26
  }
  {
    // excluded prime
    PrimeContext ctx(3, 2);
    Env env(reg, ctx);
    auto rs = verify(reg.conjectures[0], env);
    REQUIRE(rs.size() == 1);
    CHECK(rs[0].status == Status::Skipped);
  }
}

TEST_CASE("engine equals the exact oracle across e") {
  Registry reg = beukers();
  const SumSpec& s = reg.sums.at("c3_64");
  for (u64 p : sieve_primes(5, 97)) {
    PrimeContext ctx(p, 3);
    Env env(reg, ctx);
    u128 w = env.sum("c3_64");
    for (int e = 1; e <= 3; ++e)
      CHECK(w % ctx.ppow[e] == oracle_sum_residue(s, p, e));
  }
}

TEST_CASE("projection coherence across context exponents") {
  Registry reg = beukers();
  for (u64 p : {5ull, 13ull, 29ull}) {
    PrimeContext c3(p, 3);
    PrimeContext c2(p, 2);
    PrimeContext c1(p, 1);
    Env e3(reg, c3), e2(reg, c2), e1(reg, c1);
    CHECK(e3.sum("c3_64") % c2.ppow[2] == e2.sum("c3_64") % c2.ppow[2]);
    CHECK(e2.sum("c3_64") % c1.ppow[1] == e1.sum("c3_64") % c1.ppow[1]);
  }
}

TEST_CASE("expression evaluation") {
  Registry reg = beukers();
  PrimeContext ctx(13, 3);
  Env env(reg, ctx);
  Bindings b;
  b.has_xy = true;
  b.x = 3;
  b.y = 1;
  auto parse_line = [&](const std::string& expr_text) {
    std::string src = "conjecture \"t\" conjectured { case always : " +
                      expr_text + " === 0 mod p^3 }";
    return parse_registry(src);
  };
  {
    Registry r = parse_line("4*x^2 - 2*p");
    u128 v = eval_expr(*r.conjectures[0].cases[0].lhs, env, b, 2);
    CHECK(v == 10);
  }
  {
    Registry r = parse_line("0");
    CHECK(eval_expr(*r.conjectures[0].cases[0].lhs, env, b, 3) == 0);
  }
  {
    Registry r = parse_line("25/22 * p^2");
    u128 expect = ctx.at(3).mul(ctx.at(3).mul(169, 25), ctx.at(3).inv(22));
    CHECK(eval_expr(*r.conjectures[0].cases[0].lhs, env, b, 3) == expect);
  }
  {
    // p^2 / (4 x^2) with x = 3 mod 13^3
    Registry r = parse_line("p^2/(4*x^2)");
    u128 expect = ctx.at(3).mul(169, ctx.at(3).inv(36));
    CHECK(eval_expr(*r.conjectures[0].cases[0].lhs, env, b, 3) == expect);
  }
  {
    Registry r = parse_line("x");
    Bindings none;
    CHECK_THROWS_AS((void)eval_expr(*r.conjectures[0].cases[0].lhs, env, none, 1),
                    Error);
  }
}

TEST_CASE("verify is deterministic") {
  Registry reg = beukers();
  for (u64 p : {5ull, 13ull, 29ull, 37ull}) {
    PrimeContext ctx(p, 2);
    Env e1(reg, ctx), e2(reg, ctx);
    auto r1 = verify(reg.conjectures[0], e1);
    auto r2 = verify(reg.conjectures[0], e2);
    REQUIRE(r1.size() == r2.size());
    for (size_t i = 0; i < r1.size(); ++i) {
      CHECK(r1[i].status == r2[i].status);
      CHECK(r1[i].lhs == r2[i].lhs);
      CHECK(r1[i].rhs == r2[i].rhs);
    }
  }
}

TEST_CASE("R7 atom delegates to the registry sum") {
  Registry reg = load_registry_file(SUPERCONG_REGISTRY_PATH);
  {
    PrimeContext ctx(3, 2);
    Env env(reg, ctx);
    // 1 + 8/2 + binom(4,2)^3/3 = 77
    CHECK(env.r7(2) == 77 % 9);
    CHECK(env.r7(2) % 3 == env.r7(1));
  }
  {
    PrimeContext ctx(5, 2);
    Env env(reg, ctx);
    // 1 + 4 + 72 + 8000/4 + 343000/5 = 70677
    CHECK(env.r7(1) == 70677 % 5);
    CHECK(env.r7(2) == 70677 % 25);
    CHECK(env.r7(2) % 5 == env.r7(1));
  }
}

TEST_CASE("shipped registry: proved entries pass, fit recovers 25/22") {
  Registry reg = load_registry_file(SUPERCONG_REGISTRY_PATH);
  for (u64 p : sieve_primes(5, 97)) {
    PrimeContext ctx(p, 2);
    Env env(reg, ctx);
    for (const auto& c : reg.conjectures) {
      if (!c.proved) continue;
      for (const auto& r : verify(c, env)) {
        CHECK(r.status != Status::Fail);
        CHECK(r.status != Status::EngineError);
        CHECK(r.status != Status::Ambiguous);
      }
    }
  }
  FitResult res =
      fit_constant(reg, fit_family("2.33prod"), {13, 29, 41}, 1000000);
  CHECK(res.constant.num == 25);
  CHECK(res.constant.den == 22);
  CHECK_THROWS_AS((void)fit_constant(reg, fit_family("2.33prod"), {13}, 100),
                  Error);
}

TEST_CASE("suspect case reports the alternate reading") {
  Registry reg = parse_registry(R"(
conjecture "sus" conjectured {
  sum one = SUM(k) [C(k,0)]
  case always : S(one) === p + 1 mod p altrhs p
}
)");
  PrimeContext ctx(11, 1);
  Env env(reg, ctx);
  auto rs = verify(reg.conjectures[0], env);
  REQUIRE(rs.size() == 1);
  CHECK(rs[0].status == Status::Fail);
  CHECK(rs[0].note.find("alternate reading passes") != std::string::npos);
}
