#include "egcf/quadrature.hpp"

#include <cfloat>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "egcf/errors.hpp"

namespace egcf {

namespace {

struct Rule {
  std::vector<long double> nodes;    // on [-1, 1]
  std::vector<long double> weights;
};

Rule gauss_legendre(std::size_t n) {
  Rule r;
  r.nodes.resize(n);
  r.weights.resize(n);
  const long double pi = std::numbers::pi_v<long double>;
  for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
    long double z = std::cos(pi * (static_cast<long double>(i) + 0.75L) / (static_cast<long double>(n) + 0.5L));
    long double dp = 0;
    for (int iter = 0; iter < 100; ++iter) {
      long double p0 = 1, p1 = z;
      for (std::size_t j = 2; j <= n; ++j) {
        long double p2 = ((2.0L * j - 1) * z * p1 - (j - 1.0L) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (z * p1 - p0) / (z * z - 1);
      long double dz = p1 / dp;
      z -= dz;
      if (std::fabs(dz) < 4 * LDBL_EPSILON) break;
    }
    long double w = 2 / ((1 - z * z) * dp * dp);
    r.nodes[i] = -z;
    r.nodes[n - 1 - i] = z;
    r.weights[i] = w;
    r.weights[n - 1 - i] = w;
  }
  return r;
}

long double to_long_double(const ExactRational& r, long double& rel_err) {
  const bool small = mpz_sizeinbase(r.get_num_mpz_t(), 2) <= 63 && mpz_sizeinbase(r.get_den_mpz_t(), 2) <= 63;
  if (small) {
    rel_err = LDBL_EPSILON;
    return static_cast<long double>(r.get_num().get_si()) / static_cast<long double>(r.get_den().get_si());
  }
  rel_err = 4 * DBL_EPSILON;
  return static_cast<long double>(r.get_d());
}

ExactRational from_long_double(long double v) {
  if (!std::isfinite(v)) throw std::domain_error("non-finite value in quadrature");
  if (v == 0) return ExactRational(0);
  int e = 0;
  long double m = std::frexp(std::fabs(v), &e);  // [0.5, 1)
  auto mant = static_cast<unsigned long long>(std::ldexp(m, 64));
  ExactInt num;
  mpz_import(num.get_mpz_t(), 1, 1, sizeof(mant), 0, 0, &mant);
  ExactRational out(num);
  long shift = e - 64;
  if (shift >= 0)
    mpq_mul_2exp(out.get_mpq_t(), out.get_mpq_t(), static_cast<unsigned long>(shift));
  else
    mpq_div_2exp(out.get_mpq_t(), out.get_mpq_t(), static_cast<unsigned long>(-shift));
  return v < 0 ? ExactRational(-out) : out;
}

}  // namespace

OracleValue F_reference(const ExactRational& x, const ExactRational& target_err, const QuadratureConfig& cfg) {
  if (sgn(x) <= 0) throw std::invalid_argument("F_reference: x must be > 0");
  if (sgn(target_err) <= 0) throw std::invalid_argument("F_reference: target_err must be > 0");

  long double x_rel = 0;
  const long double xv = to_long_double(x, x_rel);
  const long double target = static_cast<long double>(target_err.get_d());

  long double T = std::max(1.0L, std::log(2.0L / target));
  long double tail = std::exp(-T) / (T + xv);
  while (tail >= target / 2) {
    T += 1;
    tail = std::exp(-T) / (T + xv);
  }

  // Base panels grow geometrically from min(x, 1) near the origin (the pole
  // sits at t = -x) up to width 2, then stay at width 2 out to T.
  std::vector<long double> breaks{0};
  long double w = std::min(xv, 1.0L);
  while (breaks.back() < T) {
    breaks.push_back(std::min(breaks.back() + w, T));
    w = std::min(2 * w, 2.0L);
  }
  const std::size_t base = breaks.size() - 1;

  const Rule rule = gauss_legendre(cfg.nodes);
  auto integrate = [&](std::size_t split) {
    long double sum = 0, comp = 0;  // Neumaier summation over panels
    for (std::size_t b = 0; b < base; ++b) {
      long double h = (breaks[b + 1] - breaks[b]) / static_cast<long double>(split);
      for (std::size_t s = 0; s < split; ++s) {
        long double a = breaks[b] + h * static_cast<long double>(s);
        long double half = h / 2, centre = a + half;
        long double panel = 0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
          long double t = centre + half * rule.nodes[i];
          panel += rule.weights[i] * std::exp(-t) / (t + xv);
        }
        panel *= half;
        long double next = sum + panel;
        comp += std::fabs(sum) >= std::fabs(panel) ? (sum - next) + panel : (panel - next) + sum;
        sum = next;
      }
    }
    return sum + comp;
  };

  long double prev = integrate(1);
  for (std::size_t split = 2; base * split <= cfg.max_panels; split *= 2) {
    long double cur = integrate(split);
    long double gap = std::fabs(cur - prev);
    if (gap < target / 4) {
      // |F'(x)| < 1/x, so an x rounded with relative error r moves F by < r.
      long double rounding = 64 * LDBL_EPSILON * cur + x_rel;
      long double err = (tail + gap + rounding) * (1 + 1e-6L);
      ExactRational err_q = from_long_double(err);
      if (err_q > target_err) break;
      return {from_long_double(cur), err_q};
    }
    prev = cur;
  }
  throw CapExceeded("F_reference: target error not reached within the panel budget");
}

}  // namespace egcf
