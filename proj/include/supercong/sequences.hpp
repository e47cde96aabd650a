#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "supercong/modular.hpp"

namespace supercong {

using bigint = boost::multiprecision::cpp_int;

// The seven Apery-like sequences: u_0 = 1, u_1 = b,
// (n+1)^2 u_{n+1} = (a n (n+1) + b) u_n - c n^2 u_{n-1}.
enum class Seq { APrime, Franel, S, A, Q, W, G };

struct SequenceSpec {
  Seq name;
  const char* id;  // Aprime | f | S | a | Q | W | G
  i64 a, b, c;
};

const SequenceSpec& sequence_spec(Seq s);
const std::vector<SequenceSpec>& all_sequences();
Seq sequence_by_id(const std::string& id);

// u_0..u_{p-1} mod p^e by the recurrence; (n+1)^2 stays a unit since
// n+1 <= p-1. An explicit exponent (<= ctx.W) may override ctx.e.
std::vector<u128> seq_mod(const SequenceSpec& spec, const PrimeContext& ctx,
                          int exponent = -1);

// Exact u_n by the recurrence over big integers; asserts each division by
// (n+1)^2 is exact (NonIntegral otherwise, which would be a bug).
bigint seq_exact(const SequenceSpec& spec, u64 n);

// u_0..u_{count-1} in one pass.
std::vector<bigint> seq_exact_array(const SequenceSpec& spec, u64 count);

// Exact u_n straight from the defining sum; the independent oracle for the
// recurrence parameters.
bigint seq_direct(Seq name, u64 n);

// Exact binomial coefficient (0 when k < 0 or k > n).
bigint binom_exact(i64 n, i64 k);

}  // namespace supercong
