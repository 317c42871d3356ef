#include "doctest.h"
#include "onepoint/exactfield.hpp"

using namespace onepoint;

TEST_CASE("cyclotomic moduli") {
  auto q = NumberField::cyclotomic(1);
  CHECK(q->degree() == 1);
  CHECK(q->modulus() == std::vector<Rat>{Rat(-1), Rat(1)});
  auto f3 = NumberField::cyclotomic(3);
  CHECK(f3->modulus() == std::vector<Rat>{Rat(1), Rat(1), Rat(1)});
  auto f9 = NumberField::cyclotomic(9);
  CHECK(f9->degree() == 6);
  CHECK(f9->modulus() == std::vector<Rat>{1, 0, 0, 1, 0, 0, 1});
  CHECK(NumberField::cyclotomic(12)->degree() == 4);
  CHECK_THROWS_AS(NumberField::cyclotomic(0), Error);
  CHECK_THROWS_AS(NumberField::from_spec("cyclotomic:x"), Error);
  CHECK(*NumberField::from_spec("cyclotomic:9") == *f9);
}

TEST_CASE("arithmetic in Q(zeta9)") {
  auto f = NumberField::cyclotomic(9);
  AlgNum z = AlgNum::generator(f);
  CHECK((z * z.pow(8)).is_one());
  CHECK((z.pow(6) + z.pow(3) + AlgNum(f, 1L)).is_zero());
  AlgNum z3 = z.pow(3);
  AlgNum one(f, 1L);
  CHECK((one - z3) * (one - z3 * z3) == AlgNum(f, 3L));
  CHECK(z.pow(9).is_one());
  for (int k = 1; k < 9; ++k) CHECK_FALSE(z.pow(k).is_one());
  CHECK(z3.pow(3).is_one());
  CHECK_FALSE(z3.is_one());
  AlgNum a = z + AlgNum(f, 2L);
  CHECK((a / a).is_one());
  CHECK(a * a.inverse() == one);
  CHECK_THROWS_AS(a / AlgNum(f), Error);
  CHECK(z.pow(-1) == z.pow(8));
}

TEST_CASE("field mismatch is an error") {
  AlgNum a(NumberField::cyclotomic(3), 1L);
  AlgNum b(NumberField::cyclotomic(9), 1L);
  CHECK_THROWS_AS(a + b, Error);
  try {
    (void)(a * b);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::FieldMismatch);
  }
}

TEST_CASE("text forms") {
  auto f = NumberField::cyclotomic(9);
  AlgNum z = AlgNum::generator(f);
  AlgNum v = z.pow(3) * Rat(1, 2) - AlgNum(f, 2L);
  CHECK(v.to_string() == "1/2*w^3 - 2");
  CHECK((-z).to_string() == "-w");
  CHECK(AlgNum(f).to_string() == "0");
  CHECK(parse_rat("-6/4") == Rat(-3, 2));
  CHECK(format_rat(Rat(-3, 2)) == "-3/2");
  CHECK_THROWS_AS(parse_rat("1/0"), Error);
  CHECK_THROWS_AS(parse_rat("abc"), Error);
}
