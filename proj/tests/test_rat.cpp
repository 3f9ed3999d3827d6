#include <doctest.h>

#include "rat.hpp"

using namespace bincons;

TEST_CASE("ratOf canonicalizes") {
  CHECK(ratOf(2, 4) == ratOf(1, 2));
  CHECK(ratOf(-2, 4) == ratOf(-1, 2));
  CHECK(ratOf(3, -6) == ratOf(-1, 2));
  CHECK(ratOf(0, 7) == 0);
  CHECK(ratOf(1, 2).get_den() == 2);
}

TEST_CASE("floor and ceil on rationals") {
  CHECK(ratFloor(ratOf(7, 2)) == 3);
  CHECK(ratCeil(ratOf(7, 2)) == 4);
  CHECK(ratFloor(ratOf(-7, 2)) == -4);
  CHECK(ratCeil(ratOf(-7, 2)) == -3);
  CHECK(ratFloor(ratOf(4)) == 4);
  CHECK(ratCeil(ratOf(4)) == 4);
  CHECK(ratCeil(ratOf(1, 3)) == 1);
  CHECK(ratCeil(ratOf(-1, 3)) == 0);
}

TEST_CASE("isInt") {
  CHECK(isInt(ratOf(4, 2)));
  CHECK(!isInt(ratOf(1, 2)));
  CHECK(isInt(ratOf(0)));
}

TEST_CASE("ratStr lowest terms") {
  CHECK(ratStr(ratOf(1, 2)) == "1/2");
  CHECK(ratStr(ratOf(-6, 4)) == "-3/2");
  CHECK(ratStr(ratOf(8, 4)) == "2");
  CHECK(ratStr(ratOf(0)) == "0");
}

TEST_CASE("parseRat round trip") {
  for (const char* s : {"0", "1", "-1", "1/2", "-3/2", "12345/67", "7"}) {
    auto r = parseRat(s);
    REQUIRE(r.has_value());
    CHECK(ratStr(*r) == s);
  }
  CHECK(parseRat("+3") == ratOf(3));
  CHECK(parseRat("2/4") == ratOf(1, 2));
}

TEST_CASE("parseRat rejects junk") {
  for (const char* s :
       {"", "/", "1/", "/2", "1/0", "a", "1.5", "1/2/3", "--1", "1/-2", " 1",
        "1 ", "+"}) {
    CAPTURE(s);
    CHECK(!parseRat(s).has_value());
  }
}

TEST_CASE("exactness beyond doubles") {
  Rat tiny = ratOf(1, 1000000007);
  Rat sum = 0;
  for (int i = 0; i < 1000; ++i) sum += tiny;
  CHECK(sum == Rat(1000) / 1000000007);
  CHECK(sum * Rat(1000000007) == 1000);
}
