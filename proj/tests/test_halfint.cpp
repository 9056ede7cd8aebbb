#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "keplerfock/halfint.hpp"

using keplerfock::HalfInt;
using keplerfock::parse_half_int;

TEST_CASE("snapping onto Z/2") {
    CHECK(HalfInt::snap(2.5 + 1e-9, 1e-6).twice() == 5);
    CHECK(HalfInt::snap(-1.5, 1e-6).twice() == -3);
    CHECK(HalfInt::snap(0.0, 1e-6).twice() == 0);
    CHECK_THROWS(HalfInt::snap(0.3, 1e-6));
}

TEST_CASE("arithmetic and printing") {
    const HalfInt half(1), one(2);
    CHECK((half + half) == one);
    CHECK((one - half) == half);
    CHECK((-half).twice() == -1);
    CHECK(half.value() == doctest::Approx(0.5));
    CHECK(half.str() == "1/2");
    CHECK(one.str() == "1");
    CHECK(one.is_integer());
    CHECK_FALSE(half.is_integer());
}

TEST_CASE("parsing") {
    CHECK(parse_half_int("3/2").twice() == 3);
    CHECK(parse_half_int("2").twice() == 4);
    CHECK(parse_half_int("1.5").twice() == 3);
    CHECK(parse_half_int("0").twice() == 0);
    CHECK_THROWS(parse_half_int("1/3"));
    CHECK_THROWS(parse_half_int("0.4"));
}
