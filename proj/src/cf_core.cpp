#include "egcf/cf_core.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "egcf/errors.hpp"

namespace egcf {

namespace {

void require_positive(const ExactRational& x, const char* who) {
  if (sgn(x) <= 0) throw std::invalid_argument(std::string(who) + ": x must be > 0");
}

ExactRational coefficient_value(long m, const ExactRational& x) {
  if (m % 2 == 1) return x;
  return make_rational(2, m);
}

std::string at(long m) { return "m=" + std::to_string(m); }

}  // namespace

Poly cf_coefficient(long m) {
  if (m < 1) throw std::invalid_argument("cf_coefficient: m must be >= 1");
  if (m % 2 == 1) return Poly::x();
  return Poly::constant(make_rational(2, m));
}

std::vector<ConvergentRow> convergent_polys(long n) {
  if (n < 0) throw std::invalid_argument("convergent_polys: n must be >= 0");
  std::vector<ConvergentRow> rows;
  rows.reserve(static_cast<std::size_t>(n + 2));
  rows.push_back({-1, Poly::constant(ExactRational(1)), Poly{}});
  rows.push_back({0, Poly{}, Poly::constant(ExactRational(1))});
  for (long m = 1; m <= n; ++m) {
    const ConvergentRow& r1 = rows[static_cast<std::size_t>(m)];
    const ConvergentRow& r2 = rows[static_cast<std::size_t>(m - 1)];
    Poly c = cf_coefficient(m);
    ConvergentRow next{m, c * r1.P + r2.P, c * r1.Q + r2.Q};
    rows.push_back(std::move(next));
  }
  return rows;
}

Poly closed_form_Q(long m) {
  if (m < 0) throw std::invalid_argument("closed_form_Q: m must be >= 0");
  std::vector<ExactRational> q;
  if (m % 2 == 0) {
    unsigned long k = static_cast<unsigned long>(m / 2);
    q.resize(k + 1);
    for (unsigned long i = 0; i <= k; ++i) {
      q[i] = ExactRational(binomial(k, i), factorial(i));
      q[i].canonicalize();
    }
  } else {
    unsigned long k = static_cast<unsigned long>((m + 1) / 2);
    q.resize(k + 1);
    for (unsigned long i = 0; i < k; ++i) {
      q[i + 1] = ExactRational(binomial(k, i + 1), factorial(i));
      q[i + 1].canonicalize();
    }
  }
  return Poly(std::move(q));
}

PolyPair closed_form_polys(long m) {
  if (m < 1) throw std::invalid_argument("closed_form_polys: m must be >= 1");
  const bool even = m % 2 == 0;
  const unsigned long k = static_cast<unsigned long>(even ? m / 2 : (m + 1) / 2);

  std::vector<ExactInt> fact(k + 1);
  fact[0] = 1;
  for (unsigned long i = 1; i <= k; ++i) fact[i] = fact[i - 1] * i;
  std::vector<ExactInt> binom(k + 1);
  for (unsigned long j = 0; j <= k; ++j) binom[j] = binomial(k, j);

  // Inner sum over l of (-1)^l C(k, l+i+1) / falling(l, i), where the
  // falling product is (l+i+1)...(l+1) = (l+i+1)!/l! for even m and
  // (l+i)...(l+1) = (l+i)!/l! for odd m (empty product 1 when i = 0).
  // Each term is accumulated over the common denominator `common`.
  const ExactInt& common = even ? fact[k] : fact[k - 1];
  std::vector<ExactRational> p(k);
  ExactInt acc, term;
  for (unsigned long i = 0; i < k; ++i) {
    acc = 0;
    for (unsigned long l = 0; l + i + 1 <= k; ++l) {
      unsigned long j = l + i + 1;
      const ExactInt& top = even ? fact[j] : fact[j - 1];
      mpz_divexact(term.get_mpz_t(), common.get_mpz_t(), top.get_mpz_t());
      term *= fact[l];
      term *= binom[j];
      if (l % 2 == 0)
        acc += term;
      else
        acc -= term;
    }
    p[i] = ExactRational(acc, common);
    p[i].canonicalize();
  }
  return {Poly(std::move(p)), closed_form_Q(m)};
}

CheckReport closed_form_equivalence(const std::vector<ConvergentRow>& rows, Exec exec) {
  CheckReport report{"closed forms vs recurrence"};
  long n = static_cast<long>(rows.size()) - 2;
  report.absorb(map_indices(
      1, n + 1,
      [&](std::int64_t m) -> std::optional<std::string> {
        const ConvergentRow& row = rows[static_cast<std::size_t>(m + 1)];
        PolyPair cf = closed_form_polys(m);
        if (cf.P != row.P) return at(m) + ": P mismatch";
        if (cf.Q != row.Q) return at(m) + ": Q mismatch";
        return std::nullopt;
      },
      exec));
  return report;
}

CheckReport determinant_identity(const std::vector<ConvergentRow>& rows, Exec exec) {
  CheckReport report{"determinant identity"};
  long n = static_cast<long>(rows.size()) - 2;
  report.absorb(map_indices(
      1, n + 1,
      [&](std::int64_t m) -> std::optional<std::string> {
        const ConvergentRow& cur = rows[static_cast<std::size_t>(m + 1)];
        const ConvergentRow& prev = rows[static_cast<std::size_t>(m)];
        Poly det = cur.P * prev.Q - prev.P * cur.Q;
        Poly expected = Poly::constant(ExactRational(m % 2 == 1 ? 1 : -1));
        if (det != expected) return at(m) + ": got " + det.to_string();
        return std::nullopt;
      },
      exec));
  return report;
}

CheckReport determinant_identity(long n, Exec exec) {
  if (n < 1) throw std::invalid_argument("determinant_identity: n must be >= 1");
  return determinant_identity(convergent_polys(n), exec);
}

CheckReport degree_invariants(const std::vector<ConvergentRow>& rows) {
  CheckReport report{"degree invariants"};
  for (const auto& row : rows) {
    if (row.m < 1) continue;
    ++report.checked;
    long half_up = (row.m + 1) / 2;
    if (row.P.degree() != half_up - 1) report.fail(at(row.m) + ": deg P = " + std::to_string(row.P.degree()));
    if (row.Q.degree() != half_up) report.fail(at(row.m) + ": deg Q = " + std::to_string(row.Q.degree()));
    // Q_{2k-1} = x * (...) has a zero constant term; every other coefficient is > 0.
    const auto& c = row.Q.coeffs();
    std::size_t first = row.m % 2 == 1 ? 1 : 0;
    if (row.m % 2 == 1 && !c.empty() && sgn(c[0]) != 0) report.fail(at(row.m) + ": Q(0) != 0");
    for (std::size_t i = first; i < c.size(); ++i)
      if (sgn(c[i]) <= 0) report.fail(at(row.m) + ": Q coefficient " + std::to_string(i) + " not positive");
  }
  return report;
}

std::vector<ValuePair> convergent_values(long n, const ExactRational& x) {
  require_positive(x, "convergent_values");
  if (n < 0) throw std::invalid_argument("convergent_values: n must be >= 0");
  std::vector<ValuePair> v;
  v.reserve(static_cast<std::size_t>(n + 2));
  v.push_back({ExactRational(1), ExactRational(0)});
  v.push_back({ExactRational(0), ExactRational(1)});
  for (long m = 1; m <= n; ++m) {
    ExactRational c = coefficient_value(m, x);
    const ValuePair& a = v[static_cast<std::size_t>(m)];
    const ValuePair& b = v[static_cast<std::size_t>(m - 1)];
    ExactRational p = c * a.p + b.p;
    ExactRational q = c * a.q + b.q;
    v.push_back({std::move(p), std::move(q)});
  }
  return v;
}

ValuePair eval_convergent(long m, const ExactRational& x) {
  if (m < 0) throw std::invalid_argument("eval_convergent: m must be >= 0");
  return convergent_values(m, x).back();
}

ScaledConvergents::ScaledConvergents(const ExactRational& x) : a_(x.get_num()), b_(x.get_den()) {
  require_positive(x, "ScaledConvergents");
}

void ScaledConvergents::advance() {
  long next = m_ + 1;
  ExactInt np, nq;
  if (next == 1) {
    np = b_;
    nq = a_;
    scale_ = b_;
  } else if (next % 2 == 1) {
    // D_{2k+1} P_{2k+1} = a (D_2k P_2k) + b k (D_{2k-1} P_{2k-1})
    unsigned long k = static_cast<unsigned long>(next / 2);
    ExactInt bk = b_ * k;
    np = a_ * p_ + bk * p_prev_;
    nq = a_ * q_ + bk * q_prev_;
    scale_ *= b_;
  } else {
    // D_2k P_2k = (D_{2k-1} P_{2k-1}) + b k (D_{2k-2} P_{2k-2})
    unsigned long k = static_cast<unsigned long>(next / 2);
    ExactInt bk = b_ * k;
    np = p_ + bk * p_prev_;
    nq = q_ + bk * q_prev_;
    scale_ *= k;
  }
  p_prev_ = std::move(p_);
  q_prev_ = std::move(q_);
  p_ = std::move(np);
  q_ = std::move(nq);
  m_ = next;
}

void ScaledConvergents::advance_to(long m) {
  if (m < m_) throw std::invalid_argument("ScaledConvergents::advance_to: cannot go backwards");
  while (m_ < m) advance();
}

ExactRational ScaledConvergents::p_value() const {
  ExactRational r(p_, scale_);
  r.canonicalize();
  return r;
}

ExactRational ScaledConvergents::q_value() const {
  ExactRational r(q_, scale_);
  r.canonicalize();
  return r;
}

ExactRational ScaledConvergents::ratio() const {
  ExactRational r(p_, q_);
  r.canonicalize();
  return r;
}

Enclosure enclose_F(const ExactRational& x, long k) {
  require_positive(x, "enclose_F");
  if (k < 1) throw std::invalid_argument("enclose_F: k must be >= 1");
  ScaledConvergents s(x);
  s.advance_to(2 * k - 1);
  ExactRational hi = s.ratio();
  s.advance();
  return Enclosure(s.ratio(), hi);
}

ExactRational error_bound(long n, const ExactRational& x) {
  require_positive(x, "error_bound");
  if (n < 1) throw std::invalid_argument("error_bound: n must be >= 1");
  auto v = convergent_values(n, x);
  const ExactRational& qn = v[static_cast<std::size_t>(n + 1)].q;
  const ExactRational& qn1 = v[static_cast<std::size_t>(n)].q;
  ExactRational denom = qn * qn1;
  if (n % 2 == 1) {
    denom += make_rational(2, n + 1) * qn * qn;
  }
  return 1 / denom;
}

ExactRational asymptotic_partial_sum(long n, const ExactRational& x) {
  require_positive(x, "asymptotic_partial_sum");
  if (n < 1) throw std::invalid_argument("asymptotic_partial_sum: n must be >= 1");
  ExactRational sum(0);
  ExactRational term = 1 / x;  // (k-1)! / x^k at k = 1
  for (long k = 1; k <= n; ++k) {
    if (k % 2 == 1)
      sum += term;
    else
      sum -= term;
    term *= k;
    term /= x;
  }
  return sum;
}

LowerBoundExponents lower_bound_exponents(long k) {
  if (k < 1) throw std::invalid_argument("lower_bound_exponents: k must be >= 1");
  ExactInt kk(k);
  long K = isqrt(kk).get_si();
  // L is the largest integer with 2L + 1 <= sqrt(1 + 4k).
  long s = isqrt(ExactInt(4 * kk + 1)).get_si();
  return {K, (s - 1) / 2};
}

CheckReport verify_lower_bounds(long k) {
  auto [K, L] = lower_bound_exponents(k);
  CheckReport report{"lower bounds k=" + std::to_string(k)};
  report.checked = 2;
  Poly one_plus_x{ExactRational(1), ExactRational(1)};
  Poly even_gap = closed_form_Q(2 * k) - one_plus_x.pow(static_cast<unsigned>(K));
  Poly odd_gap = closed_form_Q(2 * k - 1) - Poly::x() * one_plus_x.pow(static_cast<unsigned>(L));
  for (std::size_t i = 0; i < even_gap.coeffs().size(); ++i)
    if (sgn(even_gap.coeffs()[i]) < 0)
      report.fail("k=" + std::to_string(k) + ": Q_2k - (x+1)^" + std::to_string(K) + " coefficient " +
                  std::to_string(i) + " negative");
  for (std::size_t i = 0; i < odd_gap.coeffs().size(); ++i)
    if (sgn(odd_gap.coeffs()[i]) < 0)
      report.fail("k=" + std::to_string(k) + ": Q_2k-1 - x(x+1)^" + std::to_string(L) + " coefficient " +
                  std::to_string(i) + " negative");
  return report;
}

CheckReport verify_lower_bounds_upto(long k_max, Exec exec) {
  CheckReport report{"lower bounds"};
  auto parts = map_indices(1, k_max + 1, [](std::int64_t k) { return verify_lower_bounds(k); }, exec);
  for (const auto& p : parts) report.merge(p);
  return report;
}

namespace {

struct Brackets {
  std::vector<ExactRational> lows;   // index k-1: P_2k / Q_2k
  std::vector<ExactRational> highs;  // index k-1: P_2k-1 / Q_2k-1
};

Brackets brackets(const ExactRational& x, long k_max) {
  Brackets b;
  b.lows.reserve(static_cast<std::size_t>(k_max));
  b.highs.reserve(static_cast<std::size_t>(k_max));
  ScaledConvergents s(x);
  for (long k = 1; k <= k_max; ++k) {
    s.advance();
    b.highs.push_back(s.ratio());
    s.advance();
    b.lows.push_back(s.ratio());
  }
  return b;
}

}  // namespace

CheckReport verify_interleaving(const ExactRational& x, long k_max, Exec exec) {
  require_positive(x, "verify_interleaving");
  CheckReport report{"interleaving x=" + to_text(x)};
  Brackets b = brackets(x, k_max);
  report.absorb(map_indices(
      1, k_max + 1,
      [&](std::int64_t k) -> std::optional<std::string> {
        auto i = static_cast<std::size_t>(k - 1);
        std::string tag = "k=" + std::to_string(k);
        if (!(b.lows[i] < b.highs[i])) return tag + ": low >= high";
        if (k > 1 && !(b.lows[i - 1] < b.lows[i])) return tag + ": lows not increasing";
        if (k > 1 && !(b.highs[i] < b.highs[i - 1])) return tag + ": highs not decreasing";
        return std::nullopt;
      },
      exec));
  return report;
}

CheckReport verify_oracle_containment(const ExactRational& x, long k_max, const OracleValue& oracle,
                                      const ExactRational& widen, Exec exec) {
  require_positive(x, "verify_oracle_containment");
  CheckReport report{"oracle containment x=" + to_text(x)};
  Brackets b = brackets(x, k_max);
  report.absorb(map_indices(
      1, k_max + 1,
      [&](std::int64_t k) -> std::optional<std::string> {
        auto i = static_cast<std::size_t>(k - 1);
        Enclosure e = Enclosure(b.lows[i], b.highs[i]).widened(widen);
        if (!e.contains(oracle.value)) return "k=" + std::to_string(k) + ": oracle outside enclosure";
        return std::nullopt;
      },
      exec));
  return report;
}

Enclosure tail_F(long m, const ExactRational& x, const OracleValue& f) {
  require_positive(x, "tail_F");
  if (m < 1) throw std::invalid_argument("tail_F: m must be >= 1");
  auto v = convergent_values(m - 1, x);
  const ValuePair& two_back = v[static_cast<std::size_t>(m - 1)];  // m - 2
  const ValuePair& one_back = v[static_cast<std::size_t>(m)];      // m - 1
  Enclosure F = f.enclosure();
  Enclosure num = F.affine(-two_back.q, two_back.p);
  Enclosure den = F.affine(one_back.q, -one_back.p);
  if (!den.excludes_zero())
    throw PrecisionError("tail_F: denominator sign undetermined at m=" + std::to_string(m));
  if (!num.excludes_zero())
    throw PrecisionError("tail_F: numerator sign undetermined at m=" + std::to_string(m));
  ExactRational c[4] = {num.lo() / den.lo(), num.lo() / den.hi(), num.hi() / den.lo(), num.hi() / den.hi()};
  return Enclosure(*std::min_element(c, c + 4), *std::max_element(c, c + 4));
}

CheckReport verify_tail_bounds(const ExactRational& x, long m_max, const OracleValue& f, Exec exec) {
  CheckReport report{"tail bounds x=" + to_text(x)};
  report.absorb(map_indices(
      1, m_max + 1,
      [&](std::int64_t m) -> std::optional<std::string> {
        try {
          Enclosure t = tail_F(m, x, f);
          ExactRational bound = m % 2 == 1 ? x : make_rational(2, m);
          if (!(t.lo() > bound)) return at(m) + ": lower endpoint not above " + to_text(bound);
        } catch (const PrecisionError& e) {
          return at(m) + ": indeterminate (" + e.what() + ")";
        }
        return std::nullopt;
      },
      exec));
  return report;
}

}  // namespace egcf
