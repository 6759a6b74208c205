#include <doctest.h>

#include "egcf/cf_core.hpp"
#include "egcf/quadrature.hpp"

using namespace egcf;

TEST_CASE("oracle error is honest against a tight enclosure") {
  for (const char* xs : {"1/4", "1", "3", "25"}) {
    ExactRational x = parse_rational(xs);
    OracleValue f = F_reference(x, pow10(-9));
    CHECK(f.err <= pow10(-9));
    Enclosure tight = enclose_F(x, 200);
    CHECK(f.enclosure().contains(tight.mid()));
  }
}

TEST_CASE("budget and argument checks") {
  QuadratureConfig tiny;
  tiny.max_panels = 2;
  CHECK_THROWS(F_reference(ExactRational(1), pow10(-15), tiny));
  CHECK_THROWS_AS(F_reference(ExactRational(1), ExactRational(0)), std::invalid_argument);
  CHECK_THROWS_AS(F_reference(ExactRational(-1), pow10(-6)), std::invalid_argument);
}
