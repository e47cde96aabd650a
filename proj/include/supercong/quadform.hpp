#pragma once

#include <vector>

#include "supercong/modular.hpp"

namespace supercong {

// M*p = A*x^2 + B*y^2, A, B coprime, M in {1, 2, 4}.
struct FormSpec {
  i64 a = 1;
  i64 b = 1;
  i64 m = 1;

  bool operator<(const FormSpec& o) const {
    if (a != o.a) return a < o.a;
    if (b != o.b) return b < o.b;
    return m < o.m;
  }
  bool operator==(const FormSpec& o) const {
    return a == o.a && b == o.b && m == o.m;
  }
};

struct Representation {
  i64 x = 0;
  i64 y = 0;
};

// All (x, y) with x, y >= 0 and A x^2 + B y^2 = M p, by exhaustive scan
// over y. Empty when p is not represented.
std::vector<Representation> represent(const FormSpec& form, u64 p);

enum class SignConstraint { None, XMod4Eq1 };

// Flip the sign of x when needed so x == 1 (mod 4); x must be odd for
// that constraint.
Representation normalize(const Representation& rep, SignConstraint c);

// True when two representations differ in (x^2, y^2); such a prime is
// reported Ambiguous rather than picking one.
bool ambiguous(const std::vector<Representation>& reps);

}  // namespace supercong
