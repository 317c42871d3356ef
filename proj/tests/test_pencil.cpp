#include "doctest.h"
#include "onepoint/pencil.hpp"

using namespace onepoint;

namespace {
FieldPtr Q() { return NumberField::rationals(); }
AlgNum q(long v) { return AlgNum(Q(), v); }
AlgNum q(long n, long d) { return AlgNum(Q(), Rat(n, d)); }
Form3 F(const char* s) { return parse_form(s, Q()); }
Point2 P(const char* s) { return parse_point(s, Q()); }

Pencil canonical() { return Pencil(F("x*y^2 + y*z^2 + z*x^2"), F("x^3 + x*y*z - y^3")); }
Pencil fermat_flex() { return Pencil(F("x^3 + y^3 + z^3"), F("(x + y)^3")); }
Pencil nodal_flex() { return Pencil(F("x^3 - y^3 - x*y*z"), F("(3*x - 3*y - z)^3")); }
Pencil hesse() { return Pencil(F("x^3 + y^3 + z^3"), F("x*y*z")); }
}  // namespace

TEST_CASE("pencil members") {
  Pencil c = canonical();
  CHECK(c.member_form(Param::of(q(1), q(0))) == c.gen0());
  CHECK(c.member_form(Param::of(q(0), q(1))) == c.gen1());
  Cubic m = member(c, Param::of(q(1), q(1)));
  CHECK(m.form() == F("x*y^2 + y*z^2 + z*x^2 + x^3 + x*y*z - y^3"));
  CHECK(is_smooth(m));
  CHECK_THROWS_AS(Param::of(q(0), q(0)), Error);
  CHECK(Param::of(q(2), q(4)) == Param::affine(q(2)));
  CHECK(c.contains(F("2*x*y^2 + 2*y*z^2 + 2*z*x^2 - 3*x^3 - 3*x*y*z + 3*y^3")));
  CHECK_FALSE(c.contains(F("x^3")));
  CHECK(*c.param_of(F("x^3 + x*y*z - y^3")) == Param::infinity(Q()));
  CHECK_THROWS_AS(Pencil(F("x^3"), F("2*x^3")), Error);
  CHECK_THROWS_AS(Pencil(F("x^2*y"), F("x")), Error);
}

TEST_CASE("base locus") {
  auto bl = base_locus(canonical());
  REQUIRE(bl.single_nine_point);
  CHECK(*bl.single_nine_point == P("(0:0:1)"));
  CHECK(bl.complete);
  // The literal point (1:0:0) is not on the second generator.
  CHECK_FALSE(canonical().gen1().eval(P("(1:0:0)").coords()).is_zero());

  auto ff = base_locus(fermat_flex());
  REQUIRE(ff.single_nine_point);
  CHECK(*ff.single_nine_point == P("(1:-1:0)"));

  auto nf = base_locus(nodal_flex());
  REQUIRE(nf.single_nine_point);
  CHECK(*nf.single_nine_point == P("(1:1:0)"));

  auto h = base_locus(hesse());
  CHECK_FALSE(h.single_nine_point);
  CHECK(h.points.size() == 3);  // the rational flexes; six more over Q(w3)
  for (const auto& [pt, m] : h.points) CHECK(m.value == 1);
  CHECK_FALSE(h.complete);

  auto h3 = NumberField::cyclotomic(3);
  auto hb = base_locus(Pencil(parse_form("x^3 + y^3 + z^3", h3), parse_form("x*y*z", h3)));
  // Sheared coordinates of some flexes are not of the shape r*w^k, so the
  // root policy finds only part of the nine; none is a multiple point.
  CHECK(hb.points.size() >= 3);
  CHECK_FALSE(hb.single_nine_point);
  for (const auto& [pt, m] : hb.points) CHECK(m.value == 1);
}

TEST_CASE("discriminant profiles") {
  auto dc = discriminant_profile(canonical());
  CHECK(dc.disc.affine == UPoly::from_rats(Q(), {Rat(13824 * 27), 0, 0, Rat(13824)}));
  CHECK(dc.disc.mult_at_infinity() == 9);
  CHECK(dc.multiplicities() == std::vector<int>{9, 1, 1, 1});
  CHECK(dc.distinct_roots() == 4);
  CHECK_FALSE(dc.complete);  // t^2 - 3t + 9 has no rational root

  CHECK(discriminant_profile(fermat_flex()).multiplicities() == std::vector<int>{10, 2});
  CHECK(discriminant_profile(nodal_flex()).multiplicities() == std::vector<int>{10, 1, 1});
  CHECK(discriminant_profile(hesse()).multiplicities() == std::vector<int>{3, 3, 3, 3});
  CHECK_THROWS_AS(discriminant_profile(Pencil(F("x^3"), F("y^3"))), Error);
}

TEST_CASE("singular members") {
  Pencil c = canonical();
  auto sp = member_singular_at(c, P("(0:0:1)"));
  REQUIRE(sp);
  CHECK(*sp == Param::infinity(Q()));
  CHECK(sing_type(member(c, *sp), P("(0:0:1)")).kind == SingKind::Node);

  auto sm = singular_members(c);
  CHECK(sm.members.size() == 2);
  CHECK(sm.unresolved == Profile{{1, 2}});
  int at_p = 0;
  for (const auto& m : sm.members) {
    CHECK(m.irreducible);
    REQUIRE(m.singularities.size() == 1);
    CHECK(m.singularities[0].kind == SingKind::Node);
    if (m.singularities[0].point == P("(0:0:1)")) ++at_p;
  }
  CHECK(at_p == 1);

  auto ff = singular_members(fermat_flex());
  REQUIRE(ff.members.size() == 2);
  int cusps = 0, triples = 0;
  for (const auto& m : ff.members) {
    if (triple_line(m.form)) {
      ++triples;
      CHECK(m.param == Param::infinity(Q()));
      CHECK(m.disc_multiplicity == 10);
    } else {
      CHECK(m.param == Param::affine(q(-1, 4)));
      REQUIRE(m.singularities.size() == 1);
      if (m.singularities[0].kind == SingKind::Cusp) ++cusps;
    }
  }
  CHECK(cusps == 1);
  CHECK(triples == 1);
}

TEST_CASE("classification") {
  auto cc = classify(canonical());
  CHECK(cc.kind == PencilKind::TypeV);
  CHECK(*cc.base_point == P("(0:0:1)"));
  auto ff = classify(fermat_flex());
  CHECK(ff.kind == PencilKind::FlexType);
  CHECK(*ff.flex_line == Line{F("x + y")});
  CHECK(*ff.triple_line_param == Param::infinity(Q()));
  CHECK(classify(nodal_flex()).kind == PencilKind::FlexType);
  CHECK(classify(hesse()).kind == PencilKind::NotOneBasePoint);
  CHECK(classify(Pencil(F("x^3"), F("y^3"))).kind == PencilKind::GenericSingular);

  auto scan = reducible_members_scan(canonical());
  CHECK(scan.members.empty());
  CHECK(scan.complete);
  auto fscan = reducible_members_scan(fermat_flex());
  REQUIRE(fscan.members.size() == 1);
  CHECK(fscan.members[0].line == Line{F("x + y")});
  CHECK_THROWS_AS(reducible_members_scan(hesse()), Error);
}

TEST_CASE("isotriviality") {
  CHECK_FALSE(is_isotrivial(canonical()));
  CHECK(is_isotrivial(fermat_flex()));
  CHECK_FALSE(is_isotrivial(nodal_flex()));
  CHECK_FALSE(is_isotrivial(hesse()));
  CHECK(is_isotrivial(Pencil(F("y^2*z - x^3 + z^3"), F("z^3"))));
  CHECK_THROWS_AS(is_isotrivial(Pencil(F("x^3"), F("y^3"))), Error);
  // Two smooth members of the canonical pencil with different j.
  Pencil c = canonical();
  CHECK_FALSE(j_invariant(member(c, Param::affine(q(0)))) == j_invariant(member(c, Param::affine(q(1)))));
}
