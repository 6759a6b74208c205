#pragma once

// Convergents P_m / Q_m of the continued fraction
//
//   F(x) = 1/(c_1 + 1/(c_2 + 1/(c_3 + ...))),  c_m = x (m odd), 2/m (m even),
//
// where F(x) = e^x E_1(x). Polynomial- and value-level recurrences, the
// explicit double-sum forms, enclosures of F, and the exact checks built on
// them.

#include <cstdint>
#include <vector>

#include "egcf/exact.hpp"
#include "egcf/parallel.hpp"
#include "egcf/poly.hpp"
#include "egcf/quadrature.hpp"
#include "egcf/report.hpp"

namespace egcf {

// Throws std::invalid_argument for m < 1.
Poly cf_coefficient(long m);

struct ConvergentRow {
  long m = 0;
  Poly P;
  Poly Q;
};

// Rows m = -1 .. n (row m at index m + 1), seeded with
// P_-1 = 1, Q_-1 = 0, P_0 = 0, Q_0 = 1.
std::vector<ConvergentRow> convergent_polys(long n);

struct PolyPair {
  Poly P;
  Poly Q;
};

// P_m, Q_m from the explicit binomial double sums. m >= 1.
PolyPair closed_form_polys(long m);
// Q_m alone (single sum, cheap). m >= 0.
Poly closed_form_Q(long m);

// Rows from convergent_polys vs closed_form_polys for 1 <= m <= n.
CheckReport closed_form_equivalence(const std::vector<ConvergentRow>& rows, Exec exec = Exec::parallel);
// P_m Q_{m-1} - P_{m-1} Q_m == (-1)^{m-1} as polynomials for 1 <= m <= n.
CheckReport determinant_identity(const std::vector<ConvergentRow>& rows, Exec exec = Exec::parallel);
CheckReport determinant_identity(long n, Exec exec = Exec::parallel);
// Degree pattern and strictly positive Q coefficients.
CheckReport degree_invariants(const std::vector<ConvergentRow>& rows);

struct ValuePair {
  ExactRational p;
  ExactRational q;
};

// (P_m(x), Q_m(x)) by the scalar recurrence. m >= 0, x > 0.
ValuePair eval_convergent(long m, const ExactRational& x);
// Values for m = -1 .. n (index m + 1).
std::vector<ValuePair> convergent_values(long n, const ExactRational& x);

// Streams scaled convergent values at x = a/b using integers only:
//   p() = D_m P_m(x), q() = D_m Q_m(x),  D_m = b^ceil(m/2) * floor(m/2)!.
// At x = 1 the scale is floor(m/2)!.
class ScaledConvergents {
 public:
  explicit ScaledConvergents(const ExactRational& x);

  long m() const { return m_; }
  const ExactInt& p() const { return p_; }
  const ExactInt& q() const { return q_; }
  const ExactInt& scale() const { return scale_; }
  ExactRational p_value() const;
  ExactRational q_value() const;
  // P_m(x) / Q_m(x); the scale cancels.
  ExactRational ratio() const;

  void advance();
  void advance_to(long m);

 private:
  ExactInt a_, b_;
  long m_ = 0;
  ExactInt p_{0}, q_{1}, scale_{1};
  ExactInt p_prev_{1}, q_prev_{0};
};

// [P_2k(x)/Q_2k(x), P_2k-1(x)/Q_2k-1(x)]. x > 0, k >= 1.
Enclosure enclose_F(const ExactRational& x, long k);

// Bound on |F(x) - P_n(x)/Q_n(x)|:
//   n even: 1/(Q_n Q_{n-1});  n odd: 1/((2/(n+1)) Q_n^2 + Q_n Q_{n-1}).
ExactRational error_bound(long n, const ExactRational& x);

// sum_{k=1}^{n} (-1)^{k-1} (k-1)! / x^k.
ExactRational asymptotic_partial_sum(long n, const ExactRational& x);

struct LowerBoundExponents {
  long K;  // floor(sqrt(k))
  long L;  // floor((-1 + sqrt(1 + 4k)) / 2)
};
LowerBoundExponents lower_bound_exponents(long k);

// Every coefficient of Q_2k - (x+1)^K and Q_2k-1 - x(x+1)^L is >= 0.
CheckReport verify_lower_bounds(long k);
CheckReport verify_lower_bounds_upto(long k_max, Exec exec = Exec::parallel);

// Exact checks at fixed x for 1 <= k <= k_max: P_2k/Q_2k strictly
// increasing, P_2k-1/Q_2k-1 strictly decreasing, low_k < high_k.
CheckReport verify_interleaving(const ExactRational& x, long k_max, Exec exec = Exec::parallel);

// oracle.value lies in enclose_F(x, k) widened by `widen` for 1 <= k <= k_max.
CheckReport verify_oracle_containment(const ExactRational& x, long k_max, const OracleValue& oracle,
                                      const ExactRational& widen, Exec exec = Exec::parallel);

// Enclosure of the tail F_m(x) = (P_{m-2} - F Q_{m-2}) / (F Q_{m-1} - P_{m-1})
// with F ranging over the oracle's interval. m >= 1. Throws PrecisionError
// when the numerator or denominator sign is not determined.
Enclosure tail_F(long m, const ExactRational& x, const OracleValue& f);

// Lower endpoint of tail_F(m) exceeds x for odd m and 2/m for even m, m <= m_max.
CheckReport verify_tail_bounds(const ExactRational& x, long m_max, const OracleValue& f,
                               Exec exec = Exec::parallel);

}  // namespace egcf
