// Chord-tangent group law with a flex as origin.

#include "onepoint/cubiccurve.hpp"

namespace onepoint {

namespace {

Point2 third_point(const Cubic& c, const Point2& p, const Point2& q) {
  Line l = p == q ? tangent_line(c, p) : Line::through(p, q);
  return third_intersection(c, l, {p, q});
}

void require_on(const Cubic& c, const Point2& p) {
  if (!on_curve(c, p)) throw Error(Errc::NotOnCurve, p.to_string());
}

}  // namespace

Point2 group_add(const Cubic& c, const Point2& o, const Point2& p, const Point2& q) {
  require_on(c, o);
  require_on(c, p);
  require_on(c, q);
  Point2 r = third_point(c, p, q);
  return third_point(c, o, r);
}

Point2 group_neg(const Cubic& c, const Point2& o, const Point2& p) {
  require_on(c, o);
  require_on(c, p);
  return third_point(c, o, p);
}

Point2 scalar_mul(const Cubic& c, const Point2& o, long n, const Point2& p) {
  if (n < 0) return scalar_mul(c, o, -n, group_neg(c, o, p));
  Point2 result = o, base = p;
  while (n > 0) {
    if (n & 1) result = group_add(c, o, result, base);
    n >>= 1;
    if (n) base = group_add(c, o, base, base);
  }
  return result;
}

}  // namespace onepoint
