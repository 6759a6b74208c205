#pragma once

// The auxiliary polynomials behind the derivative-based proof of the
// convergent sandwich:
//
//   beta_m  = Q_m^2 - x P_m Q_m + x P_m' Q_m - x P_m Q_m'                 (m >= 1)
//   gamma_m = 2 Q_m Q_{m-1} - x P_m Q_{m-1} - x P_{m-1} Q_m
//             + x P_m' Q_{m-1} + x P_{m-1}' Q_m - x P_m Q_{m-1}' - x P_{m-1} Q_m'   (m >= 2)
//
// and the identities they satisfy. All checks are exact polynomial
// identities.

#include <optional>
#include <vector>

#include "egcf/cf_core.hpp"

namespace egcf {

inline Poly poly_derivative(const Poly& p) { return p.derivative(); }

struct BetaGamma {
  Poly beta;
  std::optional<Poly> gamma;  // absent for m = 1
};

// Built directly from P, Q and their derivatives. m >= 1.
BetaGamma beta_gamma_direct(long m);
// Same, reusing precomputed rows (rows[m + 1] is row m).
BetaGamma beta_gamma_direct(const std::vector<ConvergentRow>& rows, long m);

// beta_m = c_m^2 beta_{m-1} + beta_{m-2} + c_m gamma_{m-1} + c_m' (-1)^m x
// gamma_m = gamma_{m-1} + 2 c_m beta_{m-1}, for 3 <= m <= depth.
CheckReport verify_beta_gamma_recurrences(long depth, Exec exec = Exec::parallel);

// beta_m = (-1)^m x / c_{m+1} and gamma_{m+1} = (-1)^m x for 1 <= m <= depth,
// plus the degree pattern (beta constant for even m, linear for odd m).
CheckReport verify_theorem54(long depth, Exec exec = Exec::parallel);

// 1/c_{m+1} = 1/c_{m-1} + c_m' for 2 <= m <= depth, checked as the
// polynomial identity c_{m-1} - c_{m+1} = c_m' c_{m+1} c_{m-1}.
CheckReport verify_c_chain(long depth);

// Rational part (-1)^{m+1} beta_m(x) / (x Q_m(x)^2) of f_m'(x) = e^-x * (...).
ExactRational f_prime_rational_part(long m, const ExactRational& x);

// f_prime_rational_part < 0 for 1 <= m <= depth at each sample x.
CheckReport verify_f_prime_sign(long depth, const std::vector<ExactRational>& xs, Exec exec = Exec::parallel);

}  // namespace egcf
