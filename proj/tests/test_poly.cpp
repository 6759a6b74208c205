#include <doctest.h>

#include "egcf/poly.hpp"

using namespace egcf;

TEST_CASE("construction trims and reports degree") {
  Poly z{ExactRational(0), ExactRational(0)};
  CHECK(z.is_zero());
  CHECK(z.degree() == -1);
  Poly p{ExactRational(1), ExactRational(2), make_rational(1, 2)};
  CHECK(p.degree() == 2);
  CHECK(p.coeff(5) == 0);
  CHECK(p.to_string() == "1/2*x^2 + 2*x + 1");
  CHECK(p.to_coeff_text() == "1 2 1/2");
}

TEST_CASE("arithmetic against evaluation") {
  Poly a{ExactRational(1), ExactRational(-3), make_rational(2, 5)};
  Poly b{make_rational(-1, 7), ExactRational(4)};
  for (long n = -3; n <= 3; ++n) {
    ExactRational x = make_rational(n, 3);
    CHECK((a * b).eval(x) == a.eval(x) * b.eval(x));
    CHECK((a + b).eval(x) == a.eval(x) + b.eval(x));
    CHECK((a - b).eval(x) == a.eval(x) - b.eval(x));
    CHECK(a.reflect().eval(x) == a.eval(-x));
    CHECK(b.pow(3).eval(x) == b.eval(x) * b.eval(x) * b.eval(x));
  }
  CHECK((a - a).is_zero());
  CHECK(Poly::x().pow(0) == Poly::constant(ExactRational(1)));
}

TEST_CASE("derivative") {
  CHECK((Poly::x().pow(2) + 2 * Poly::x()).derivative() == Poly{ExactRational(2), ExactRational(2)});
  CHECK(Poly::constant(make_rational(1, 2)).derivative().is_zero());
  CHECK(Poly{make_rational(3, 2), make_rational(1, 2)}.derivative() == Poly::constant(make_rational(1, 2)));
}
