#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "supercong/registry.hpp"

namespace supercong {

using bigrat = boost::multiprecision::cpp_rational;

// Exact big-rational evaluation of registry sums. This path shares nothing
// with the p-adic engine: plain binomials, plain fractions, reduction at
// the very end. It is the ground truth the engine is checked against.

// True when every geometric ratio in the sum is a p-unit.
bool sum_valid_at(const SumSpec& spec, u64 p);

// The exact rational value of the sum (prefix applied).
bigrat oracle_sum_exact(const SumSpec& spec, u64 p);

// Reduce an exact rational mod p^e; requires nonnegative p-valuation.
u128 reduce_rational_mod(const bigrat& v, u64 p, int e);

u128 oracle_sum_residue(const SumSpec& spec, u64 p, int e);

}  // namespace supercong
