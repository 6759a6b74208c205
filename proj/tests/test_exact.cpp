#include <doctest.h>

#include <stdexcept>

#include "egcf/exact.hpp"

using namespace egcf;

TEST_CASE("floor and fractional parts") {
  CHECK(floor_part(make_rational(7, 2)) == 3);
  CHECK(floor_part(ExactRational(0)) == 0);
  CHECK(floor_part(make_rational(-5, 3)) == -2);
  CHECK(frac_part(make_rational(17, 3)) == make_rational(2, 3));
  CHECK(frac_part(ExactRational(4)) == 0);
  CHECK(frac_part(make_rational(7, 2)) == make_rational(1, 2));
  CHECK(frac_part(make_rational(-5, 3)) == make_rational(1, 3));
}

TEST_CASE("make_rational is canonical") {
  ExactRational r = make_rational(6, -4);
  CHECK(r.get_num() == -3);
  CHECK(r.get_den() == 2);
  CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);
}

TEST_CASE("decimal rendering") {
  CHECK(decimal_render(make_rational(2, 3), 4) == "0.6667");
  CHECK(decimal_render(make_rational(-5, 3), 2) == "-1.67");
  CHECK(decimal_render(make_rational(1, 7), 6) == "0.142857");
  // Ties go to even.
  CHECK(decimal_render(make_rational(1, 8), 2) == "0.12");
  CHECK(decimal_render(make_rational(3, 8), 2) == "0.38");
  CHECK(decimal_render(make_rational(-1, 1000), 2) == "0.00");
  CHECK(decimal_render(ExactRational(12), 1) == "12.0");
  CHECK_THROWS_AS(decimal_render(ExactRational(1), 0), std::invalid_argument);
}

TEST_CASE("parsing") {
  CHECK(parse_rational("7") == 7);
  CHECK(parse_rational("-5/3") == make_rational(-5, 3));
  CHECK(parse_rational("0.125") == make_rational(1, 8));
  CHECK(parse_rational("1e-15") == pow10(-15));
  CHECK(parse_rational("2.5E3") == 2500);
  CHECK(parse_rational("-.5") == make_rational(-1, 2));
  for (const char* bad : {"", "abc", "1/0", "1/", "1e", "--1", "1.2.3", "1e999999"})
    CHECK_THROWS_AS(parse_rational(bad), std::invalid_argument);
  CHECK(to_text(make_rational(4, 7)) == "4/7");
  CHECK(to_text(ExactRational(-3)) == "-3");
}

TEST_CASE("integer helpers") {
  CHECK(isqrt(ExactInt(0)) == 0);
  CHECK(isqrt(ExactInt(15)) == 3);
  CHECK(isqrt(ExactInt(16)) == 4);
  CHECK(factorial(0) == 1);
  CHECK(factorial(10) == 3628800);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(3, 5) == 0);
}

TEST_CASE("enclosures") {
  Enclosure e(make_rational(4, 7), make_rational(2, 3));
  CHECK(e.width() == make_rational(2, 21));
  CHECK(e.contains(make_rational(3, 5)));
  CHECK_FALSE(e.contains(make_rational(1, 2)));
  CHECK(e.excludes_zero());
  CHECK(e.certainly_positive());
  CHECK_THROWS(Enclosure(ExactRational(1), ExactRational(0)));
  CHECK_THROWS_AS(e.intersect(Enclosure::point(ExactRational(1))), std::domain_error);

  Enclosure d = e.outward_dyadic(10);
  CHECK(d.contains(e));
  CHECK(d.width() <= e.width() + make_rational(2, 1024));
  CHECK(d.lo().get_den() <= 1024);

  Enclosure a = e.affine(ExactRational(-2), ExactRational(1));
  CHECK(a.lo() == ExactRational(1) - 2 * make_rational(2, 3));
  CHECK(a.hi() == ExactRational(1) - 2 * make_rational(4, 7));
  CHECK(e.widened(ExactRational(1)).strictly_contains(e));
}
