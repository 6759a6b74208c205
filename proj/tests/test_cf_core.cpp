#include <doctest.h>

#include <cmath>

#include "egcf/cf_core.hpp"
#include "egcf/errors.hpp"

using namespace egcf;

namespace {

Poly lin(const char* c0, const char* c1) { return Poly{parse_rational(c0), parse_rational(c1)}; }

// e^x E1(x) from the convergent power series of E1, in long double.
long double series_F(long double x) {
  const long double gamma = 0.577215664901532860606512090082L;
  long double sum = 0, term = 1;
  for (int k = 1; k < 200; ++k) {
    term *= -x / k;
    sum += term / k;
  }
  return std::exp(x) * (-gamma - std::log(x) - sum);
}

}  // namespace

TEST_CASE("coefficients") {
  CHECK(cf_coefficient(1) == Poly::x());
  CHECK(cf_coefficient(4) == Poly::constant(make_rational(1, 2)));
  CHECK(cf_coefficient(6) == Poly::constant(make_rational(1, 3)));
  CHECK_THROWS(cf_coefficient(0));
}

TEST_CASE("convergent polynomials") {
  auto rows = convergent_polys(4);
  REQUIRE(rows.size() == 6);
  CHECK(rows[1].P.is_zero());
  CHECK(rows[1].Q == Poly::constant(ExactRational(1)));
  CHECK(rows[2].P == Poly::constant(ExactRational(1)));
  CHECK(rows[3].P == Poly::constant(ExactRational(1)));
  CHECK(rows[2].Q == Poly::x());
  CHECK(rows[3].Q == lin("1", "1"));
  CHECK(rows[4].Q == Poly{ExactRational(0), ExactRational(2), ExactRational(1)});
  CHECK(rows[5].Q == Poly{ExactRational(1), ExactRational(2), make_rational(1, 2)});
  CHECK(rows[4].P == lin("1", "1"));
  CHECK(rows[5].P == lin("3/2", "1/2"));
}

TEST_CASE("closed forms") {
  CHECK(closed_form_polys(4).Q == Poly{ExactRational(1), ExactRational(2), make_rational(1, 2)});
  CHECK(closed_form_polys(3).P == lin("1", "1"));
  CHECK(closed_form_polys(2).P == Poly::constant(ExactRational(1)));
  auto rows = convergent_polys(60);
  CHECK(closed_form_equivalence(rows).passed());
  for (long m = 0; m <= 60; ++m) CHECK(closed_form_Q(m) == rows[static_cast<std::size_t>(m + 1)].Q);
}

TEST_CASE("determinant and degree invariants") {
  auto rows = convergent_polys(80);
  CHECK(determinant_identity(rows).passed());
  CHECK(degree_invariants(rows).passed());
  // A corrupted row must be caught.
  rows[10].Q += Poly::constant(ExactRational(1));
  CHECK_FALSE(determinant_identity(rows).passed());
}

TEST_CASE("values and enclosures") {
  auto v4 = eval_convergent(4, ExactRational(1));
  CHECK(v4.p == 2);
  CHECK(v4.q == make_rational(7, 2));
  auto v6 = eval_convergent(6, ExactRational(1));
  CHECK(v6.p == make_rational(10, 3));
  CHECK(v6.q == make_rational(17, 3));
  auto v1 = eval_convergent(1, ExactRational(3));
  CHECK(v1.p == 1);
  CHECK(v1.q == 3);

  CHECK(enclose_F(ExactRational(1), 2) == Enclosure(make_rational(4, 7), make_rational(2, 3)));
  CHECK(enclose_F(ExactRational(1), 3) == Enclosure(make_rational(10, 17), make_rational(8, 13)));
  CHECK(enclose_F(ExactRational(1), 1) == Enclosure(make_rational(1, 2), ExactRational(1)));
}

TEST_CASE("scaled stream matches the rational recurrence") {
  for (const char* xs : {"1", "3/7", "5/2"}) {
    ExactRational x = parse_rational(xs);
    auto v = convergent_values(40, x);
    ScaledConvergents s(x);
    for (long m = 1; m <= 40; ++m) {
      s.advance();
      CHECK(s.p_value() == v[static_cast<std::size_t>(m + 1)].p);
      CHECK(s.q_value() == v[static_cast<std::size_t>(m + 1)].q);
    }
  }
}

TEST_CASE("error bounds and partial sums") {
  CHECK(error_bound(4, ExactRational(1)) == make_rational(2, 21));
  CHECK(error_bound(3, ExactRational(1)) == make_rational(2, 21));
  CHECK(error_bound(2, ExactRational(1)) == make_rational(1, 2));
  CHECK(asymptotic_partial_sum(1, ExactRational(10)) == make_rational(1, 10));
  CHECK(asymptotic_partial_sum(2, ExactRational(10)) == make_rational(9, 100));
  // 1/2 - 1/4 + 2/8
  CHECK(asymptotic_partial_sum(3, ExactRational(2)) == make_rational(1, 2));
}

TEST_CASE("lower bounds") {
  CHECK(lower_bound_exponents(1).K == 1);
  CHECK(lower_bound_exponents(1).L == 0);
  CHECK(lower_bound_exponents(4).K == 2);
  CHECK(lower_bound_exponents(4).L == 1);
  CHECK(lower_bound_exponents(9).K == 3);
  CHECK(lower_bound_exponents(9).L == 2);
  auto rows = convergent_polys(2);
  CHECK((rows[3].Q - lin("1", "1")).is_zero());
  CHECK((rows[2].Q - Poly::x()).is_zero());
  CHECK(verify_lower_bounds_upto(60).passed());
}

TEST_CASE("quadrature oracle") {
  OracleValue f1 = F_reference(ExactRational(1), pow10(-6));
  CHECK(f1.err <= pow10(-6));
  CHECK(std::fabs(static_cast<long double>(f1.value.get_d()) - 0.596347362323194L) < 1e-6L);

  OracleValue f10 = F_reference(ExactRational(10), pow10(-6));
  long double s10 = series_F(10.0L);
  CHECK(std::fabs(s10 - 0.0915633339397881L) < 1e-12L);
  CHECK(std::fabs(static_cast<long double>(f10.value.get_d()) - s10) < 1e-6L);

  for (const char* xs : {"1/2", "1", "2", "10"}) {
    ExactRational x = parse_rational(xs);
    OracleValue f = F_reference(x, pow10(-12));
    CHECK(enclose_F(x, 50).widened(f.err).contains(f.value));
  }
  CHECK_THROWS_AS(F_reference(ExactRational(0), pow10(-6)), std::invalid_argument);
}

TEST_CASE("tails") {
  OracleValue f = F_reference(ExactRational(1), pow10(-12));
  auto near = [](const Enclosure& e, long double v) {
    return std::fabs(static_cast<long double>(e.mid().get_d()) - v) < 1e-4L;
  };
  CHECK(near(tail_F(1, ExactRational(1), f), 1.67688L));
  CHECK(near(tail_F(2, ExactRational(1), f), 1.47738L));
  CHECK(near(tail_F(4, ExactRational(1), f), 0.91343L));
  CHECK(verify_tail_bounds(ExactRational(1), 12, f).passed());
  // A coarse oracle cannot certify deep tails.
  OracleValue coarse = F_reference(ExactRational(1), pow10(-3));
  CHECK_FALSE(verify_tail_bounds(ExactRational(1), 30, coarse).passed());
}

TEST_CASE("serial and parallel agree") {
  auto rows = convergent_polys(40);
  auto a = closed_form_equivalence(rows, Exec::serial);
  auto b = closed_form_equivalence(rows, Exec::parallel);
  CHECK(a.checked == b.checked);
  CHECK(a.violations == b.violations);
  auto i1 = verify_interleaving(make_rational(1, 2), 50, Exec::serial);
  auto i2 = verify_interleaving(make_rational(1, 2), 50, Exec::parallel);
  CHECK(i1.checked == i2.checked);
  CHECK(i1.passed());
  CHECK(i2.passed());
}
