#pragma once

// Classical Laguerre polynomials with rational parameter,
//
//   L_k^(a)(x) = sum_{i=0}^{k} C(k+a, k-i) / i! * (-x)^i,
//
// and their link to the convergent denominators:
//   Q_2k(x) = L_k^(0)(-x),   Q_2k-1(x) = k L_k^(-1)(-x).

#include "egcf/cf_core.hpp"

namespace egcf {

// prod_{j=0}^{k-i-1} (k + alpha - j) / (k-i)!, and 1 when i == k.
// Throws std::invalid_argument unless 0 <= i <= k.
ExactRational generalized_binomial(long k, const ExactRational& alpha, long i);

// Degree exactly k with leading coefficient (-1)^k / k!.
Poly laguerre_poly(long k, const ExactRational& alpha);

// Both Q/L identities plus L_k^(0) - L_{k-1}^(0) = L_k^(-1) at this k.
CheckReport verify_lemma61(long k);
CheckReport verify_lemma61_upto(long k_max, Exec exec = Exec::parallel);

// L_k^(a) - L_{k-1}^(a) = L_k^(a-1) for 1 <= k <= k_max.
CheckReport verify_laguerre_recurrence(const ExactRational& alpha, long k_max, Exec exec = Exec::parallel);

// Q_2k-1(x) / (sqrt(kx) Q_2k(x)) with exact Q values and sqrt(kx) to a
// relative error below 1e-30. k >= 1, x > 0.
ExactRational asymptotic_ratio(long k, const ExactRational& x);

}  // namespace egcf
