#include "doctest.h"
#include "onepoint/construct.hpp"
#include "onepoint/report.hpp"

using namespace onepoint;

TEST_CASE("report contents") {
  Report r = analyze_pencil(named_pencil("canonical"));
  CHECK(r.classification == "TypeV");
  CHECK(r.profile == std::vector<int>{9, 1, 1, 1});
  CHECK(r.isotrivial == false);
  REQUIRE(r.fibration);
  CHECK(r.fibration->mp_label == "X_1119");
  CHECK(r.fibration->beauville_row == std::optional<std::string>("F6"));
  CHECK_FALSE(r.warnings.empty());

  Report h = analyze_pencil(Pencil(parse_form("x^3 + y^3 + z^3", NumberField::rationals()),
                                   parse_form("x*y*z", NumberField::rationals())));
  CHECK(h.classification == "NotOneBasePoint");
  CHECK_FALSE(h.fibration);
  CHECK_THROWS_AS(analyze_pencil(Pencil(parse_form("x^3", NumberField::rationals()), parse_form("y^3", NumberField::rationals()))),
                  Error);
}

TEST_CASE("report JSON round trip") {
  for (const char* name : {"canonical", "fermat-flex", "nodal-flex", "hesse"}) {
    Report r = analyze_pencil(named_pencil(name));
    auto j = to_json(r);
    CHECK(j["schema"] == 1);
    std::string text = j.dump();
    Report back = report_from_json(nlohmann::json::parse(text));
    CHECK(back == r);
    CHECK(to_json(back).dump() == text);
    // Deterministic output.
    CHECK(to_json(analyze_pencil(named_pencil(name))).dump() == text);
  }
  auto bad = nlohmann::json::parse(R"({"schema": 2})");
  CHECK_THROWS_AS(report_from_json(bad), Error);
  CHECK_THROWS_AS(report_from_json(nlohmann::json::parse(R"({"schema": 1})")), Error);
}
