#include <doctest.h>

#include "mch/rational.hpp"

using namespace mch;

TEST_CASE("rational parse and format round trip") {
  CHECK(format_rat(parse_rat("3/4")) == "3/4");
  CHECK(format_rat(parse_rat("-3/4")) == "-3/4");
  CHECK(format_rat(parse_rat("6/8")) == "3/4");
  CHECK(format_rat(parse_rat("7")) == "7");
  CHECK(format_rat(parse_rat("0/5")) == "0");
  CHECK(format_rat(parse_rat("9/-3")) == "-3");
  CHECK(parse_rat("2/4") == rat(1, 2));
  CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("a/2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("1/2/3"), std::invalid_argument);
}

TEST_CASE("floor and binomial") {
  CHECK(rat_floor(rat(7, 2)) == 3);
  CHECK(rat_floor(rat(-7, 2)) == -4);
  CHECK(rat_floor(rat(4)) == 4);
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(5, 5) == 1);
  CHECK(binomial(3, 4) == 0);
  CHECK(binomial(3, -1) == 0);
  CHECK(binomial(40, 20) == Int("137846528820"));
}

TEST_CASE("sign and absolute value") {
  CHECK(sign_of(rat(-2, 3)) == -1);
  CHECK(sign_of(Rat(0)) == 0);
  CHECK(rat_abs(rat(-2, 3)) == rat(2, 3));
  CHECK(to_double(rat(1, 2)) == doctest::Approx(0.5));
}
