#include <functional>

#include "doctest.h"
#include "onepoint/construct.hpp"

using namespace onepoint;

namespace {
FieldPtr Q() { return NumberField::rationals(); }
AlgNum q(long v) { return AlgNum(Q(), v); }
AlgNum q(long n, long d) { return AlgNum(Q(), Rat(n, d)); }
Form3 F(const char* s) { return parse_form(s, Q()); }
Point2 P(const char* s) { return parse_point(s, Q()); }
const char* kKlein = "x*y^2 + y*z^2 + z*x^2";

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::Internal;
}
}  // namespace

TEST_CASE("contact pencil") {
  Cubic klein(F(kKlein));
  Pencil at_e3 = pencil_from_contact(klein, P("(0:0:1)"));
  CHECK(at_e3.gen0() == F(kKlein));
  CHECK(at_e3.gen1() == F("x^3 + x*y*z - y^3"));
  CHECK(intersection_multiplicity(at_e3.gen0(), at_e3.gen1(), P("(0:0:1)")).value == 9);

  Pencil at_e1 = pencil_from_contact(klein, P("(1:0:0)"));
  CHECK(at_e1.same_span(Pencil(F(kKlein), F("y^3 + x*y*z - z^3"))));
  CHECK_FALSE(at_e1.same_span(named_pencil("canonical")));

  Pencil flex = pencil_from_contact(Cubic(F("x^3 + y^3 + z^3")), P("(1:-1:0)"));
  CHECK(flex.same_span(Pencil(F("x^3 + y^3 + z^3"), F("(x + y)^3"))));

  auto cbrt2 = NumberField::with_modulus({Rat(-2), 0, 0, 1}, "cbrt2");
  AlgNum th = AlgNum::generator(cbrt2);
  Point2 nontorsion(AlgNum(cbrt2, 1L), AlgNum(cbrt2, 1L), -th);
  CHECK(code_of([&] { pencil_from_contact(Cubic(parse_form("x^3 + y^3 + z^3", cbrt2)), nontorsion); }) ==
        Errc::NotNineTorsion);
  CHECK(code_of([&] { pencil_from_contact(klein, P("(1:1:1)")); }) == Errc::NotOnCurve);
}

TEST_CASE("tangential triangles") {
  Cubic klein(F(kKlein));
  Triangle t = tangential_triangle(klein, P("(1:0:0)"));
  CHECK(t.vertices[0] == P("(1:0:0)"));
  CHECK(t.vertices[1] == P("(0:1:0)"));
  CHECK(t.vertices[2] == P("(0:0:1)"));
  CHECK(t.tangents[0] == Line{F("z")});
  CHECK(t.tangents[1] == Line{F("x")});
  CHECK(t.tangents[2] == Line{F("y")});
  Cubic gb(F("x*y^2 + y*z^2 + z*x^2 + 3*x*y*z"));
  Triangle tb = tangential_triangle(gb, P("(1:0:0)"));
  CHECK(tb.vertices[1] == P("(0:1:0)"));
  CHECK(tb.vertices[2] == P("(0:0:1)"));
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(intersection_multiplicity(t.tangents[i].form, klein.form(), t.vertices[i]).value == 2);
    CHECK(intersection_multiplicity(t.tangents[i].form, klein.form(), t.vertices[(i + 1) % 3]).value == 1);
  }
  CHECK(code_of([] { tangential_triangle(Cubic(F("x^3 + y^3 + z^3")), P("(1:-1:0)")); }) == Errc::NotType9);
}

TEST_CASE("Gattazzo pencils") {
  Cubic klein(F(kKlein));
  Pencil g0 = gattazzo_pencil(klein, tangential_triangle(klein, P("(0:0:1)")));
  CHECK(g0.contains(F("x^3 + x*y*z - y^3")));
  CHECK(g0.same_span(pencil_from_contact(klein, P("(0:0:1)"))));

  Cubic c1(F("x*y^2 + y*z^2 + z*x^2 + 3*x*y*z"));
  Pencil g1 = gattazzo_pencil(c1, tangential_triangle(c1, P("(0:0:1)")));
  CHECK(g1.contains(F("-y^3 + (y*z + x^2 + 3*x*y)*(x + 3*y)")));
  CHECK(g1.same_span(pencil_from_contact(c1, P("(0:0:1)"))));
  CHECK(named_pencil("gattazzo:1").same_span(g1));
  CHECK(named_pencil("gattazzo:0").same_span(named_pencil("canonical")));

  // A triangle of the wrong curve.
  Cubic other(F("x*y^2 + y*z^2 + z*x^2 + 6*x*y*z"));
  Triangle wrong = tangential_triangle(klein, P("(0:0:1)"));
  wrong.tangents[1] = Line{F("x + z")};
  CHECK(code_of([&] { gattazzo_pencil(other, wrong); }) == Errc::NotTangentialTriangle);
}

TEST_CASE("triangle normalization and scaling") {
  Cubic klein(F(kKlein));
  auto tn = triangle_normalize(klein.form(), tangential_triangle(klein, P("(1:0:0)")));
  CHECK(tn.map.det() == q(1));
  CHECK(tn.a == q(1));
  CHECK(tn.b == q(1));
  CHECK(tn.c == q(1));
  CHECK(tn.d == q(0));
  Cubic gb(F("x*y^2 + y*z^2 + z*x^2 - 3/2*x*y*z"));
  auto tb = triangle_normalize(gb.form(), tangential_triangle(gb, P("(1:0:0)")));
  CHECK(tb.d == q(-3, 2));

  auto s0 = scale_to_canonical(q(1), q(1), q(1), q(0));
  CHECK(s0.zeta == q(0));
  CHECK(s0.gamma == q(1));
  auto s3 = scale_to_canonical(q(1), q(1), q(1), q(3));
  CHECK(s3.zeta == q(3));
  CHECK(code_of([] { scale_to_canonical(q(8), q(1), q(1), q(0)); }) == Errc::RootNotInField);

  // gamma = 2: a^2/(c b^4) = 512.
  AlgNum a = q(3), b = q(5), c = a * a / (b.pow(4) * q(512)), d = q(7);
  auto s = scale_to_canonical(a, b, c, d);
  CHECK(s.gamma == q(2));
  CHECK(s.alpha == b * b * q(16) / a);
  CHECK(s.beta == (b * q(4)).inverse());
  Form3 f = Form3::monomial(Q(), {1, 2, 0}, a) + Form3::monomial(Q(), {0, 1, 2}, b) +
            Form3::monomial(Q(), {2, 0, 1}, c) + Form3::monomial(Q(), {1, 1, 1}, d);
  CHECK(substitute_linear(f, s.map) == F(kKlein) + Form3::monomial(Q(), {1, 1, 1}, s.zeta));
}

TEST_CASE("lambda modulo cubes") {
  CHECK(lambda_class(Rat(8)) == 1);
  CHECK(lambda_class(Rat(12)) == 12);
  CHECK(lambda_class(Rat(1, 2)) == 4);
  CHECK(lambda_class(Rat(-54)) == 2);
  CHECK(lambda_equiv(Rat(2), Rat(16)));
  CHECK_FALSE(lambda_equiv(Rat(2), Rat(4)));
  CHECK(lambda_equiv(Rat(3, 4), Rat(-6)));
  CHECK(code_of([] { lambda_class(Rat(0)); }) == Errc::BadLambda);
}

TEST_CASE("named pencils") {
  Pencil c = named_pencil("canonical");
  CHECK(c.gen0() == F(kKlein));
  CHECK(c.gen1() == F("x^3 + x*y*z - y^3"));
  CHECK(code_of([] { named_pencil("gattazzo:-1"); }) == Errc::DegenerateFamilyMember);
  CHECK(code_of([] { named_pencil("nope"); }) == Errc::UnknownName);
  Pencil ric = named_pencil("ric");
  auto f9 = ric.field();
  AlgNum w = AlgNum::generator(f9);
  // (w^3 - 1)/w = 2w^2 + w^5 in Q(zeta_9)
  CHECK(*base_locus(ric).single_nine_point == Point2(w, AlgNum(f9, 1L), AlgNum(f9, 2L) * w * w + w.pow(5)));
  CHECK(ric.gen1() == parse_form("x^3 - y^3 - x*y*z", f9));
}

TEST_CASE("canonicalization of a projective translate") {
  ProjMap M(ProjMap::Rows{{{q(2), q(1), q(-1)}, {q(0), q(3), q(1)}, {q(1), q(-2), q(1)}}});
  Pencil moved = transform(named_pencil("canonical"), M);
  Pencil mixed(moved.gen0() + moved.gen1() * q(2), moved.gen1());
  auto cz = canonicalize(mixed);
  CHECK(transform(mixed, cz.map).same_span(named_pencil("canonical")));
  CHECK(cz.scale.zeta == q(0));
  CHECK(code_of([] { canonicalize(named_pencil("fermat-flex")); }) == Errc::PreconditionFailed);
}
