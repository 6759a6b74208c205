#include "egcf/identity_lab.hpp"

#include <stdexcept>
#include <string>

namespace egcf {

namespace {

std::string at(long m) { return "m=" + std::to_string(m); }

Poly signed_x(long m) { return m % 2 == 0 ? Poly::x() : -Poly::x(); }  // (-1)^m x

std::vector<BetaGamma> all_beta_gamma(const std::vector<ConvergentRow>& rows, long depth, Exec exec) {
  return map_indices(1, depth + 1, [&](std::int64_t m) { return beta_gamma_direct(rows, m); }, exec);
}

}  // namespace

BetaGamma beta_gamma_direct(const std::vector<ConvergentRow>& rows, long m) {
  if (m < 1) throw std::invalid_argument("beta_gamma_direct: m must be >= 1");
  if (static_cast<std::size_t>(m + 1) >= rows.size()) throw std::out_of_range("beta_gamma_direct: rows too short");
  const Poly x = Poly::x();
  const Poly& P = rows[static_cast<std::size_t>(m + 1)].P;
  const Poly& Q = rows[static_cast<std::size_t>(m + 1)].Q;
  const Poly dP = P.derivative(), dQ = Q.derivative();

  BetaGamma out;
  out.beta = Q * Q + x * (dP * Q - P * Q - P * dQ);
  if (m >= 2) {
    const Poly& P1 = rows[static_cast<std::size_t>(m)].P;
    const Poly& Q1 = rows[static_cast<std::size_t>(m)].Q;
    const Poly dP1 = P1.derivative(), dQ1 = Q1.derivative();
    Poly bracket = dP * Q1 + dP1 * Q - P * Q1 - P1 * Q - P * dQ1 - P1 * dQ;
    out.gamma = ExactRational(2) * (Q * Q1) + x * bracket;
  }
  return out;
}

BetaGamma beta_gamma_direct(long m) {
  if (m < 1) throw std::invalid_argument("beta_gamma_direct: m must be >= 1");
  return beta_gamma_direct(convergent_polys(m), m);
}

CheckReport verify_beta_gamma_recurrences(long depth, Exec exec) {
  if (depth < 3) throw std::invalid_argument("verify_beta_gamma_recurrences: depth must be >= 3");
  CheckReport report{"beta/gamma recurrences"};
  auto rows = convergent_polys(depth);
  auto bg = all_beta_gamma(rows, depth, exec);
  auto get = [&](long m) -> const BetaGamma& { return bg[static_cast<std::size_t>(m - 1)]; };
  report.absorb(map_indices(
      3, depth + 1,
      [&](std::int64_t m) -> std::optional<std::string> {
        Poly c = cf_coefficient(m);
        Poly dc = c.derivative();
        const BetaGamma& prev = get(m - 1);
        Poly beta_rec = c * c * prev.beta + get(m - 2).beta + c * *prev.gamma + dc * signed_x(m);
        if (beta_rec != get(m).beta) return at(m) + ": beta recurrence fails";
        Poly gamma_rec = *prev.gamma + ExactRational(2) * (c * prev.beta);
        if (gamma_rec != *get(m).gamma) return at(m) + ": gamma recurrence fails";
        return std::nullopt;
      },
      exec));
  return report;
}

CheckReport verify_theorem54(long depth, Exec exec) {
  if (depth < 1) throw std::invalid_argument("verify_theorem54: depth must be >= 1");
  CheckReport report{"beta/gamma closed forms"};
  auto rows = convergent_polys(depth + 1);
  auto bg = all_beta_gamma(rows, depth + 1, exec);
  report.absorb(map_indices(
      1, depth + 1,
      [&](std::int64_t m) -> std::optional<std::string> {
        const BetaGamma& cur = bg[static_cast<std::size_t>(m - 1)];
        const BetaGamma& next = bg[static_cast<std::size_t>(m)];
        // (-1)^m x / c_{m+1}: c_{m+1} = x for even m, 2/(m+1) for odd m.
        Poly expected_beta = m % 2 == 0 ? Poly::constant(ExactRational(1))
                                        : Poly::monomial(make_rational(-(m + 1), 2), 1);
        if (cur.beta != expected_beta) return at(m) + ": beta = " + cur.beta.to_string();
        if (cur.beta.degree() != (m % 2 == 0 ? 0 : 1)) return at(m) + ": beta degree";
        if (*next.gamma != signed_x(m)) return at(m) + ": gamma_{m+1} = " + next.gamma->to_string();
        return std::nullopt;
      },
      exec));
  return report;
}

CheckReport verify_c_chain(long depth) {
  if (depth < 2) throw std::invalid_argument("verify_c_chain: depth must be >= 2");
  CheckReport report{"c-chain identity"};
  for (long m = 2; m <= depth; ++m) {
    ++report.checked;
    Poly before = cf_coefficient(m - 1), after = cf_coefficient(m + 1);
    Poly lhs = before - after;
    Poly rhs = cf_coefficient(m).derivative() * after * before;
    if (lhs != rhs) report.fail(at(m) + ": " + lhs.to_string() + " != " + rhs.to_string());
  }
  return report;
}

ExactRational f_prime_rational_part(long m, const ExactRational& x) {
  if (sgn(x) <= 0) throw std::invalid_argument("f_prime_rational_part: x must be > 0");
  auto rows = convergent_polys(m);
  BetaGamma bg = beta_gamma_direct(rows, m);
  ExactRational q = rows[static_cast<std::size_t>(m + 1)].Q.eval(x);
  ExactRational r = bg.beta.eval(x) / (x * q * q);
  return m % 2 == 1 ? r : ExactRational(-r);
}

CheckReport verify_f_prime_sign(long depth, const std::vector<ExactRational>& xs, Exec exec) {
  CheckReport report{"f' sign"};
  auto rows = convergent_polys(depth);
  auto bg = all_beta_gamma(rows, depth, exec);
  for (const auto& x : xs) {
    if (sgn(x) <= 0) throw std::invalid_argument("verify_f_prime_sign: x must be > 0");
    report.absorb(map_indices(
        1, depth + 1,
        [&](std::int64_t m) -> std::optional<std::string> {
          ExactRational q = rows[static_cast<std::size_t>(m + 1)].Q.eval(x);
          ExactRational r = bg[static_cast<std::size_t>(m - 1)].beta.eval(x) / (x * q * q);
          if (m % 2 == 0) r = -r;
          if (sgn(r) >= 0) return at(m) + " x=" + to_text(x) + ": rational part not negative";
          return std::nullopt;
        },
        exec));
  }
  return report;
}

}  // namespace egcf
