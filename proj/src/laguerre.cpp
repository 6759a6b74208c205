#include "egcf/laguerre.hpp"

#include <stdexcept>
#include <string>

namespace egcf {

ExactRational generalized_binomial(long k, const ExactRational& alpha, long i) {
  if (i < 0 || i > k) throw std::invalid_argument("generalized_binomial: need 0 <= i <= k");
  if (i == k) return ExactRational(1);
  ExactRational prod(1);
  for (long j = 0; j <= k - i - 1; ++j) prod *= alpha + (k - j);
  prod /= factorial(static_cast<unsigned long>(k - i));
  return prod;
}

Poly laguerre_poly(long k, const ExactRational& alpha) {
  if (k < 0) throw std::invalid_argument("laguerre_poly: k must be >= 0");
  std::vector<ExactRational> c(static_cast<std::size_t>(k + 1));
  for (long i = 0; i <= k; ++i) {
    ExactRational t = generalized_binomial(k, alpha, i) / factorial(static_cast<unsigned long>(i));
    c[static_cast<std::size_t>(i)] = i % 2 == 0 ? t : ExactRational(-t);
  }
  return Poly(std::move(c));
}

CheckReport verify_lemma61(long k) {
  if (k < 1) throw std::invalid_argument("verify_lemma61: k must be >= 1");
  CheckReport report{"Q/Laguerre identities k=" + std::to_string(k)};
  report.checked = 3;
  std::string tag = "k=" + std::to_string(k);

  auto rows = convergent_polys(2 * k);
  const Poly& q_even = rows[static_cast<std::size_t>(2 * k + 1)].Q;
  const Poly& q_odd = rows[static_cast<std::size_t>(2 * k)].Q;
  Poly l0 = laguerre_poly(k, ExactRational(0));
  Poly lm1 = laguerre_poly(k, ExactRational(-1));

  if (l0.reflect() != q_even) report.fail(tag + ": Q_2k != L_k^(0)(-x)");
  if (ExactRational(k) * lm1.reflect() != q_odd) report.fail(tag + ": Q_2k-1 != k L_k^(-1)(-x)");
  if (l0 - laguerre_poly(k - 1, ExactRational(0)) != lm1) report.fail(tag + ": L_k^(0) - L_k-1^(0) != L_k^(-1)");
  return report;
}

CheckReport verify_lemma61_upto(long k_max, Exec exec) {
  if (k_max < 1) throw std::invalid_argument("verify_lemma61_upto: k_max must be >= 1");
  CheckReport report{"Q/Laguerre identities"};
  auto rows = convergent_polys(2 * k_max);
  report.absorb(map_indices(
      1, k_max + 1,
      [&](std::int64_t k) -> std::optional<std::string> {
        std::string tag = "k=" + std::to_string(k);
        const Poly& q_even = rows[static_cast<std::size_t>(2 * k + 1)].Q;
        const Poly& q_odd = rows[static_cast<std::size_t>(2 * k)].Q;
        Poly l0 = laguerre_poly(k, ExactRational(0));
        Poly lm1 = laguerre_poly(k, ExactRational(-1));
        if (l0.reflect() != q_even) return tag + ": Q_2k != L_k^(0)(-x)";
        if (ExactRational(k) * lm1.reflect() != q_odd) return tag + ": Q_2k-1 != k L_k^(-1)(-x)";
        if (l0 - laguerre_poly(k - 1, ExactRational(0)) != lm1) return tag + ": L_k^(0) - L_k-1^(0) != L_k^(-1)";
        return std::nullopt;
      },
      exec));
  return report;
}

CheckReport verify_laguerre_recurrence(const ExactRational& alpha, long k_max, Exec exec) {
  CheckReport report{"Laguerre recurrence alpha=" + to_text(alpha)};
  report.absorb(map_indices(
      1, k_max + 1,
      [&](std::int64_t k) -> std::optional<std::string> {
        Poly lhs = laguerre_poly(k, alpha) - laguerre_poly(k - 1, alpha);
        if (lhs != laguerre_poly(k, alpha - 1)) return "k=" + std::to_string(k) + ": recurrence fails";
        return std::nullopt;
      },
      exec));
  return report;
}

ExactRational asymptotic_ratio(long k, const ExactRational& x) {
  if (k < 1) throw std::invalid_argument("asymptotic_ratio: k must be >= 1");
  if (sgn(x) <= 0) throw std::invalid_argument("asymptotic_ratio: x must be > 0");

  // The scale factors of Q_2k-1 and Q_2k differ by exactly k.
  ScaledConvergents s(x);
  s.advance_to(2 * k - 1);
  ExactInt q_odd = s.q();
  s.advance();
  ExactRational quotient(q_odd * k, s.q());
  quotient.canonicalize();

  // sqrt(kx) = sqrt(n d) / d with kx = n/d, taken on a 10^-40 grid.
  ExactRational kx = x * k;
  ExactInt guard;
  mpz_ui_pow_ui(guard.get_mpz_t(), 10, 40);
  ExactInt radicand = kx.get_num() * kx.get_den() * guard * guard;
  ExactRational root(isqrt(radicand), kx.get_den() * guard);
  root.canonicalize();
  return quotient / root;
}

}  // namespace egcf
