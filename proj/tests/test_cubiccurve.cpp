#include "doctest.h"
#include "onepoint/cubiccurve.hpp"
#include "onepoint/elimination.hpp"

using namespace onepoint;

namespace {
FieldPtr Q() { return NumberField::rationals(); }
AlgNum q(long v) { return AlgNum(Q(), v); }
Form3 F(const char* s) { return parse_form(s, Q()); }
Point2 P(const char* s) { return parse_point(s, Q()); }

const char* kZ9 = "y^2*z - 3*x*y*z - 12*y*z^2 - x^3 + 12*x^2*z";
}  // namespace

TEST_CASE("intersection multiplicities") {
  CHECK(intersection_multiplicity(F("x*y^2 + y*z^2 + z*x^2"), F("x^3 + x*y*z - y^3"), P("(0:0:1)")).value == 9);
  CHECK(intersection_multiplicity(F("x*y^2 + y*z^2 + z*x^2"), F("z"), P("(1:0:0)")).value == 2);
  CHECK(intersection_multiplicity(F("y*z"), F("y*z - x^2"), P("(0:0:1)")).value == 2);
  CHECK(intersection_multiplicity(F("y^2*z - x^3"), F("y"), P("(0:0:1)")).value == 3);
  CHECK(intersection_multiplicity(F("x"), F("y"), P("(1:1:1)")).value == 0);
  CHECK(intersection_multiplicity(F("x*y"), F("x*z"), P("(0:0:1)")).infinite);
  // Node against one of its branches' tangents.
  CHECK(intersection_multiplicity(F("y^2*z - x^2*z - x^3"), F("y - x"), P("(0:0:1)")).value == 3);
}

TEST_CASE("smoothness and singular points") {
  Cubic nodal(F("y^2*z - x^3 - x^2*z"));
  Cubic cusp(F("y^2*z - x^3"));
  CHECK_FALSE(is_smooth(nodal));
  CHECK_FALSE(is_smooth(cusp));
  CHECK(is_smooth(Cubic(F("x^3 + y^3 + z^3"))));
  auto sp = singular_points(nodal);
  REQUIRE(sp.points.size() == 1);
  CHECK(sp.points[0] == P("(0:0:1)"));
  CHECK(sing_type(nodal, P("(0:0:1)")).kind == SingKind::Node);
  CHECK(sing_type(nodal, P("(0:0:1)")).tangents.size() == 2);
  CHECK(sing_type(cusp, P("(0:0:1)")).kind == SingKind::Cusp);
  CHECK(mult_at(nodal.form(), P("(0:0:1)")) == 2);
  CHECK(mult_at(nodal.form(), P("(1:1:1)")) == 0);
  CHECK(mult_at(F("x^3 - y^3 - x*y*z"), P("(0:0:1)")) == 2);
  CHECK(sing_type(Cubic(F("x^3 - y^3 - x*y*z")), P("(0:0:1)")).kind == SingKind::Node);
  CHECK(sing_type(Cubic(F("x*y*z")), P("(0:0:1)")).kind == SingKind::Node);
  CHECK(sing_type(Cubic(F("x^3")), P("(0:0:1)")).kind == SingKind::Other);
  CHECK(is_smooth(Cubic(F("x*y*z"))) == false);
  CHECK(singular_points(Cubic(F("x*y*z"))).points.size() == 3);
  CHECK(singular_points(Cubic(F("x^3"))).positive_dimensional);
}

TEST_CASE("tangents, flexes and the chord construction") {
  Cubic z9(F(kZ9));
  Point2 o = P("(0:1:0)"), p = P("(0:0:1)");
  CHECK(tangent_line(z9, o) == Line{F("z")});
  CHECK(tangent_line(z9, p) == Line{F("y")});
  CHECK(is_flex(z9, o));
  CHECK_FALSE(is_flex(z9, p));
  CHECK(third_intersection(z9, Line{F("x")}, {o, p}) == P("(0:12:1)"));
  CHECK(group_neg(z9, o, p) == P("(0:12:1)"));
  CHECK(scalar_mul(z9, o, 2, p) == P("(12:48:1)"));
  CHECK(scalar_mul(z9, o, 9, p) == o);
  CHECK_FALSE(scalar_mul(z9, o, 3, p) == o);
  CHECK(scalar_mul(z9, o, -1, p) == group_neg(z9, o, p));
  CHECK(group_add(z9, o, p, group_neg(z9, o, p)) == o);

  Cubic fermat(F("x^3 + y^3 + z^3"));
  auto flexes = rational_flexes(fermat);
  CHECK(flexes.size() == 3);
  for (const auto& f : flexes) CHECK(is_flex(fermat, f));
  CHECK(rational_flexes(Cubic(F("x*y^2 + y*z^2 + z*x^2"))).empty());
  CHECK_THROWS_AS(tangent_line(Cubic(F("y^2*z - x^3")), P("(0:0:1)")), Error);
}

TEST_CASE("contact type of a point") {
  Cubic klein(F("x*y^2 + y*z^2 + z*x^2"));
  CHECK(type9_test(klein, P("(0:0:1)")) == PointType::Type9);
  CHECK(contact_kernel(klein, P("(0:0:1)")).size() == 2);
  CHECK(type9_test(Cubic(F("x^3 + y^3 + z^3")), P("(1:-1:0)")) == PointType::Flex);
  CHECK(type9_test(Cubic(F(kZ9)), P("(0:0:1)")) == PointType::Type9);
  CHECK(type9_test(Cubic(F("y^2*z + y*z^2 - x^3 + x*z^2")), P("(0:0:1)")) == PointType::Neither);
  try {
    type9_test(Cubic(F("y^2*z - x^3")), P("(1:1:1)"));
    FAIL("expected NotSmoothCurve");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotSmoothCurve);
  }
}

TEST_CASE("linear factors") {
  auto r = linear_factor(F("z^3"));
  REQUIRE(r.factor);
  CHECK(r.factor->line == Line{F("z")});
  auto none = linear_factor(F("x^3 + x*y*z - y^3"));
  CHECK_FALSE(none.factor);
  CHECK(none.certified);
  auto split = linear_factor(F("(x + y)*(x*y - z^2)"));
  REQUIRE(split.factor);
  CHECK(split.factor->line == Line{F("x + y")});
  CHECK(split.factor->line.form * split.factor->cofactor == F("(x + y)*(x*y - z^2)"));
}

TEST_CASE("Aronhold invariants") {
  // x^3+y^3+z^3+6m*xyz: S = m - m^4, T = 1 - 20m^3 - 8m^6.
  for (long m : {0L, 1L, 2L, 3L, -1L}) {
    Form3 f = F("x^3 + y^3 + z^3") + Form3::monomial(Q(), {1, 1, 1}, q(6 * m));
    auto st = aronhold_ST(f);
    CHECK(st.S == q(m - m * m * m * m));
    CHECK(st.T == q(1 - 20 * m * m * m - 8 * m * m * m * m * m * m));
  }
  // T^2 + 64 S^3 is proportional to the discriminant with a fixed constant.
  std::vector<Form3> samples{F("x^3 + y^3 + z^3 + x*y*z"), F(kZ9), F("x*y^2 + y*z^2 + z*x^2"),
                             F("y^2*z - x^3 - x*z^2 + 2*z^3")};
  std::optional<AlgNum> ratio;
  for (const auto& f : samples) {
    auto st = aronhold_ST(f);
    AlgNum r = (st.T * st.T + q(64) * st.S * st.S * st.S) / cubic_discriminant(f);
    if (ratio) CHECK(r == *ratio);
    ratio = r;
  }
}

TEST_CASE("j-invariant") {
  CHECK(j_invariant(Cubic(F("x^3 + y^3 + z^3"))) == q(0));
  CHECK(j_invariant(Cubic(F("x*y^2 + y*z^2 + z*x^2"))) == q(0));
  CHECK(j_invariant(Cubic(F("y^2*z - x^3 - x*z^2"))) == q(1728));
  // Legendre form with lambda = 3: 256*7^3/(9*4)
  CHECK(j_invariant(Cubic(F("y^2*z - x*(x - z)*(x - 3*z)"))) == AlgNum(Q(), Rat(21952, 9)));
  for (const char* s : {"y^2*z - x*(x - z)*(x - 3*z)", kZ9, "y^2*z + y*z^2 - x^3 + x*z^2", "x^3 + y^3 + z^3 + 5*x*y*z"}) {
    Cubic c(F(s));
    CHECK(j_invariant_flex(c) == j_invariant_invariants(c));
  }
  CHECK_THROWS_AS(j_invariant(Cubic(F("y^2*z - x^3"))), Error);
  CHECK_THROWS_AS(j_invariant_flex(Cubic(F("x*y^2 + y*z^2 + z*x^2"))), Error);
}

TEST_CASE("common zeros") {
  auto cz = common_zeros(F("x^3 + y^3 + z^3"), hessian_det(F("x^3 + y^3 + z^3")));
  CHECK(cz.points.size() == 3);
  CHECK_FALSE(cz.complete);
  auto one = single_common_point(F("x*y^2 + y*z^2 + z*x^2"), F("x^3 + x*y*z - y^3"));
  REQUIRE(one);
  CHECK(*one == P("(0:0:1)"));
  CHECK_FALSE(single_common_point(F("x^3 + y^3 + z^3"), F("x*y*z")));
  CHECK_THROWS_AS(common_zeros(F("x*y*z"), F("x*(y^2 - z^2)")), Error);
}
