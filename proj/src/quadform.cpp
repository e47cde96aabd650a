#include "supercong/quadform.hpp"

namespace supercong {

std::vector<Representation> represent(const FormSpec& form, u64 p) {
  std::vector<Representation> out;
  i64 target = form.m * (i64)p;
  for (i64 y = 0; form.b * y * y <= target; ++y) {
    i64 rem = target - form.b * y * y;
    if (rem % form.a != 0) continue;
    i64 xx = rem / form.a;
    i64 x = (i64)isqrt_u128((u128)xx);
    if (x * x == xx) out.push_back({x, y});
  }
  return out;
}

Representation normalize(const Representation& rep, SignConstraint c) {
  if (c == SignConstraint::None) return rep;
  if (rep.x % 2 == 0)
    throw Error(ErrorKind::NormalizationImpossible,
                "x must be odd to normalize x mod 4");
  i64 r = rep.x % 4;
  if (r < 0) r += 4;
  if (r == 1) return rep;
  return {-rep.x, rep.y};
}

bool ambiguous(const std::vector<Representation>& reps) {
  for (size_t i = 1; i < reps.size(); ++i)
    if (reps[i].x * reps[i].x != reps[0].x * reps[0].x ||
        reps[i].y * reps[i].y != reps[0].y * reps[0].y)
      return true;
  return false;
}

}  // namespace supercong
