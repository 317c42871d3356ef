#include <set>

#include "doctest.h"
#include "onepoint/construct.hpp"
#include "onepoint/fibration.hpp"

using namespace onepoint;

namespace {
FieldPtr Q() { return NumberField::rationals(); }
Form3 F(const char* s) { return parse_form(s, Q()); }
Point2 P(const char* s) { return parse_point(s, Q()); }

std::multiset<int> mults(const FiberConfig& fc) {
  std::multiset<int> s;
  for (const auto& c : fc.components) s.insert(c.multiplicity);
  return s;
}

std::multiset<std::string> type_names(const std::vector<KodairaType>& ts) {
  std::multiset<std::string> s;
  for (const auto& t : ts) s.insert(t.to_string());
  return s;
}
}  // namespace

TEST_CASE("resolution of the canonical base point") {
  Pencil c = named_pencil("canonical");
  Ledger l = resolve_base_point(c);
  CHECK(l.size() == 9);
  CHECK(l.base_point() == P("(0:0:1)"));
  CHECK(l.reference_intersections() == std::vector<int>{9, 8, 7, 6, 5, 4, 3, 2, 1, 0});
  CHECK(local_intersection_sequence(l, "gen0", "gen1") == std::vector<int>{9, 7, 6, 5, 4, 3, 2, 1, 0, 0});
  CHECK(l.curve("D'").mult == std::vector<int>{2, 1, 1, 1, 1, 1, 1, 1, 0});
  CHECK(l.curve("C").mult == std::vector<int>(9, 1));

  auto t1 = transform_numbers(l, "C", "D'", 1);
  CHECK(t1.strict_intersection == 7);
  CHECK(t1.self_b == 5);
  CHECK(transform_numbers(l, "C", "L").self_b == -1);
  CHECK(transform_numbers(l, "C", "C'").self_a == 0);
  CHECK(transform_numbers(l, "C", "D'").self_b == -2);
  CHECK(total_transform(l, "C") == std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8, 9});

  // Each center after the first is free: proximate only to its predecessor.
  for (std::size_t j = 1; j < 9; ++j)
    for (std::size_t i = 0; i < j; ++i) CHECK(l.proximate(j, i) == (i + 1 == j));
  CHECK_THROWS_AS(l.curve("nope"), Error);
}

TEST_CASE("canonical fibers") {
  Pencil c = named_pencil("canonical");
  Ledger l = resolve_base_point(c);
  FiberConfig d = fiber_config(c, l, Param::infinity(Q()));
  REQUIRE(d.components.size() == 9);
  for (const auto& comp : d.components) {
    CHECK(comp.self_intersection == -2);
    CHECK(comp.multiplicity == 1);
    CHECK(comp.genus == 0);
  }
  CHECK(kodaira_type(d) == KodairaType{KodairaType::I, 9});
  // Ring: D'~ meets E1 and E8, E_k meets E_{k+1}.
  CHECK(d.adjacency[0][1] == 1);
  CHECK(d.adjacency[0][8] == 1);
  CHECK(d.adjacency[3][4] == 1);
  CHECK(d.adjacency[0][4] == 0);

  auto r = analyze_fibration(c);
  CHECK(r.fibers.size() == 2);
  CHECK(r.inferred_nodal == 2);
  CHECK(type_names(r.types) == std::multiset<std::string>{"I9", "I1", "I1", "I1"});
  CHECK(r.euler_sum == 12);
  CHECK(r.st.mw_rank == 0);
  CHECK(r.st.extremal);
  CHECK(r.label == MPLabel::X_1119);
  REQUIRE(r.beauville);
  CHECK(*r.beauville == "F6");
}

TEST_CASE("canonical pencil over Q(w3) resolves every fiber") {
  auto k = NumberField::cyclotomic(3);
  Pencil c(parse_form("x*y^2 + y*z^2 + z*x^2", k), parse_form("x^3 + x*y*z - y^3", k));
  auto r = analyze_fibration(c);
  CHECK(r.fibers.size() == 4);
  CHECK(r.inferred_nodal == 0);
  CHECK(type_names(r.types) == std::multiset<std::string>{"I9", "I1", "I1", "I1"});
  CHECK(r.euler_sum == 12);
}

TEST_CASE("flex pencils") {
  Pencil ff = named_pencil("fermat-flex");
  Ledger l = resolve_base_point(ff);
  CHECK(l.curve("l").mult == std::vector<int>{1, 1, 1, 0, 0, 0, 0, 0, 0});
  CHECK(total_transform(l, "3l") == std::vector<int>{3, 6, 9, 9, 9, 9, 9, 9, 9});
  FiberConfig star = fiber_config(ff, l, Param::infinity(Q()));
  CHECK(mults(star) == std::multiset<int>{3, 2, 4, 6, 5, 4, 3, 2, 1});
  CHECK(kodaira_type(star) == KodairaType{KodairaType::IIstar, 0});
  CHECK(euler_number(kodaira_type(star)) == 10);

  auto r = analyze_fibration(ff);
  CHECK(type_names(r.types) == std::multiset<std::string>{"II*", "II"});
  CHECK(r.euler_sum == 12);
  CHECK(r.st.mw_rank == 0);
  CHECK(r.label == MPLabel::X_22);
  CHECK_FALSE(r.beauville);

  auto rn = analyze_fibration(named_pencil("nodal-flex"));
  CHECK(type_names(rn.types) == std::multiset<std::string>{"II*", "I1", "I1"});
  CHECK(rn.euler_sum == 12);
  CHECK(rn.st.mw_rank == 0);
  CHECK(rn.label == MPLabel::X_211);
}

TEST_CASE("osculating conic and the zero section") {
  Pencil c = named_pencil("canonical");
  Ledger l = resolve_base_point(c);
  Cubic klein(c.gen0());
  Form3 q = osculating_conic(klein, P("(0:0:1)"));
  CHECK(q.degree() == 2);
  CHECK(intersection_multiplicity(q, klein.form(), P("(0:0:1)")).value >= 5);
  l.track("Q", q);
  CHECK(transform_numbers(l, "C", "Q").self_b == -1);
  // E9 meets a smooth fiber once.
  CHECK(l.curve("C").mult[8] == 1);
}

TEST_CASE("table lookups") {
  CHECK(beauville_row({1, 1, 9, 1}) == std::optional<std::string>("F6"));
  CHECK(beauville_row({3, 3, 3, 3}) == std::optional<std::string>("F1"));
  CHECK_FALSE(beauville_row({9, 1, 1}));
  CHECK(mp_label({{KodairaType::II, 0}, {KodairaType::IIstar, 0}}) == MPLabel::X_22);
  CHECK(mp_label({{KodairaType::I, 3}, {KodairaType::I, 3}, {KodairaType::I, 3}, {KodairaType::I, 3}}) == MPLabel::Other);
  CHECK_FALSE(euler_number(KodairaType{}));
  FiberConfig big{Param::infinity(Q()), std::vector<FiberComponent>(12), {}};
  CHECK_THROWS_AS(shioda_tate_rank(kRationalEllipticRho, {big}), Error);
  CHECK_THROWS_AS(resolve_base_point(named_pencil("hesse")), Error);
}
