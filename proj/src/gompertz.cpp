#include "egcf/gompertz.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <map>
#include <stdexcept>

#include "egcf/errors.hpp"

namespace egcf {

namespace {

// Scaled state of the x = 1 stream at one index.
struct Raw {
  long m;
  ExactInt p, q, scale;
};

constexpr unsigned long kSignalBits = 160;

// Bounds for (v qr - pr) / D over v in [lo, hi], rounded outward to 2^-160.
// Integer-only: no gcd on the large denominators.
Enclosure signal_bounds(const ExactInt& pr, const ExactInt& qr, const ExactInt& D, const Enclosure& delta) {
  auto endpoint = [&](const ExactRational& v, bool up) {
    ExactInt num = (v.get_num() * qr - v.get_den() * pr) << kSignalBits;
    ExactInt den = v.get_den() * D;
    ExactInt out;
    if (up) mpz_cdiv_q(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    else mpz_fdiv_q(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    ExactRational r(out, ExactInt(1) << kSignalBits);
    r.canonicalize();
    return r;
  };
  return Enclosure(endpoint(delta.lo(), false), endpoint(delta.hi(), true));
}

FracRecord record_from(const Raw& r, const Enclosure& delta, bool fractions) {
  ExactInt pr, qr;
  mpz_fdiv_r(pr.get_mpz_t(), r.p.get_mpz_t(), r.scale.get_mpz_t());
  mpz_fdiv_r(qr.get_mpz_t(), r.q.get_mpz_t(), r.scale.get_mpz_t());
  FracRecord rec;
  rec.m = r.m;
  rec.signal = signal_bounds(pr, qr, r.scale, delta);
  if (fractions) {
    rec.p_frac = ExactRational(pr, r.scale);
    rec.q_frac = ExactRational(qr, r.scale);
    rec.p_frac.canonicalize();
    rec.q_frac.canonicalize();
  }
  return rec;
}

ExactInt floor_div(const ExactInt& n, const ExactInt& d) {
  ExactInt out;
  mpz_fdiv_q(out.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return out;
}

bool parity_match(long m, Parity parity) {
  if (parity == Parity::all) return true;
  return (m % 2 == 0) == (parity == Parity::even);
}

// CDF of delta U - V with U, V independent uniform on [0, 1).
double trapezoid_cdf(double s, double d) {
  if (s <= -1) return 0;
  if (s >= d) return 1;
  if (s <= d - 1) return (s + 1) * (s + 1) / (2 * d);
  if (s <= 0) return d / 2 + s - d + 1;
  return 1 - (d - s) * (d - s) / (2 * d);
}

double ks_statistic(std::vector<double> xs, double d) {
  if (xs.empty()) return 0;
  std::sort(xs.begin(), xs.end());
  double n = static_cast<double>(xs.size());
  double worst = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    double f = trapezoid_cdf(xs[i], d);
    worst = std::max({worst, (static_cast<double>(i) + 1) / n - f, f - static_cast<double>(i) / n});
  }
  return worst;
}

// Signals for the given parity up to m_max.
std::vector<std::pair<long, Enclosure>> collect_signals(long m_max, Parity parity, const Enclosure& delta,
                                                        Exec exec) {
  std::vector<std::pair<long, Enclosure>> out;
  ScanOptions opts;
  opts.exec = exec;
  opts.bins = 1;
  opts.fractions = false;
  distribution_scan(
      m_max, delta,
      [&](const FracRecord& r) {
        if (parity_match(r.m, parity)) out.emplace_back(r.m, r.signal);
      },
      opts);
  return out;
}

}  // namespace

long default_depth_cap() {
  if (const char* env = std::getenv("EGCF_DEPTH_CAP")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 2000;
}

DeltaBracket delta_enclosure(const ExactRational& eps, long depth_cap) {
  if (sgn(eps) <= 0) throw std::invalid_argument("delta_enclosure: eps must be > 0");
  if (depth_cap < 1) throw std::invalid_argument("delta_enclosure: depth cap must be >= 1");
  ScaledConvergents s(ExactRational(1));
  for (long k = 1; k <= depth_cap; ++k) {
    s.advance_to(2 * k - 1);
    ExactRational hi = s.ratio();
    s.advance();
    Enclosure e(s.ratio(), hi);
    if (e.width() < eps) return DeltaBracket{k, std::move(e)};
  }
  throw CapExceeded("delta_enclosure: width " + to_text(eps) + " not reached by k=" + std::to_string(depth_cap));
}

Enclosure delta_series_reference() {
  const ExactRational gamma = parse_rational("0.577215664901532860606512090082");
  const ExactRational gamma_err = pow10(-30);
  const unsigned long terms = 60;

  ExactRational series(0), e_sum(1);
  ExactInt fact(1);
  for (unsigned long j = 1; j <= terms; ++j) {
    fact *= j;
    ExactRational t(ExactInt(1), fact * j);
    t.canonicalize();
    if (j % 2 == 1) series += t; else series -= t;
    ExactRational inv(ExactInt(1), fact);
    inv.canonicalize();
    e_sum += inv;
  }
  // Alternating tail below its first omitted term; e's tail below 2/(61!).
  ExactInt next_fact = fact * (terms + 1);
  ExactRational alt_tail(ExactInt(1), next_fact * (terms + 1));
  ExactRational e_tail(ExactInt(2), next_fact);
  alt_tail.canonicalize();
  e_tail.canonicalize();

  ExactRational e1_lo = series - gamma - gamma_err - alt_tail;
  ExactRational e1_hi = series - gamma + gamma_err + alt_tail;
  return Enclosure(e_sum * e1_lo, (e_sum + e_tail) * e1_hi);
}

PQAtOne pq_at_one(long m) {
  if (m < 1) throw std::invalid_argument("pq_at_one: m must be >= 1");
  ValuePair v = eval_convergent(m, ExactRational(1));
  ExactInt f = factorial(static_cast<unsigned long>(m / 2));
  ExactRational sp = v.p * f, sq = v.q * f;
  if (sp.get_den() != 1 || sq.get_den() != 1 || sgn(sp) <= 0 || sgn(sq) <= 0)
    throw IntegralityViolation("pq_at_one: floor(m/2)! p_m or q_m not a positive integer at m=" +
                               std::to_string(m));
  return PQAtOne{v.p, v.q, sp.get_num(), sq.get_num()};
}

CheckReport verify_integrality(long m_max, Exec exec) {
  if (m_max < 1) throw std::invalid_argument("verify_integrality: m_max must be >= 1");
  CheckReport report{"integrality at x=1"};
  auto values = convergent_values(m_max, ExactRational(1));
  std::vector<std::pair<ExactInt, ExactInt>> stream;
  stream.reserve(static_cast<std::size_t>(m_max));
  ScaledConvergents s(ExactRational(1));
  for (long m = 1; m <= m_max; ++m) {
    s.advance();
    stream.emplace_back(s.p(), s.q());
  }
  report.absorb(map_indices(
      1, m_max + 1,
      [&](std::int64_t m) -> std::optional<std::string> {
        const ValuePair& v = values[static_cast<std::size_t>(m + 1)];
        ExactInt f = factorial(static_cast<unsigned long>(m / 2));
        ExactRational sp = v.p * f, sq = v.q * f;
        std::string tag = "m=" + std::to_string(m);
        if (sp.get_den() != 1 || sq.get_den() != 1) return tag + ": scaled value not integral";
        if (sgn(sp) <= 0 || sgn(sq) <= 0) return tag + ": scaled value not positive";
        const auto& [ip, iq] = stream[static_cast<std::size_t>(m - 1)];
        if (sp.get_num() != ip || sq.get_num() != iq) return tag + ": integer stream disagrees";
        return std::nullopt;
      },
      exec));
  return report;
}

CheckReport q_growth_check(long k_max) {
  if (k_max < 1) throw std::invalid_argument("q_growth_check: k_max must be >= 1");
  CheckReport report{"growth at x=1"};
  ScaledConvergents s(ExactRational(1));
  // Values two steps back, for the per-parity comparisons.
  ExactRational back2_p(1), back2_q(0), back1_p(0), back1_q(1);  // m = -1, m = 0
  ExactInt bound(1);
  for (long m = 1; m <= 2 * k_max; ++m) {
    s.advance();
    ExactRational p = s.p_value(), q = s.q_value();
    if (m % 2 == 1) {
      bound *= 2;
      ++report.checked;
      if (!(q < bound)) report.fail("m=" + std::to_string(m) + ": q >= 2^k");
    }
    // m = 1 vs m = -1 is meaningless (P_-1 = 1, Q_-1 = 0); start at m = 2.
    if (m >= 2) {
      report.checked += 2;
      if (!(p > back2_p)) report.fail("m=" + std::to_string(m) + ": p not above p_{m-2}");
      if (!(q > back2_q)) report.fail("m=" + std::to_string(m) + ": q not above q_{m-2}");
    }
    back2_p = std::move(back1_p);
    back2_q = std::move(back1_q);
    back1_p = std::move(p);
    back1_q = std::move(q);
  }
  return report;
}

FracRecord frac_signal(long m, const Enclosure& delta) {
  if (m < 1) throw std::invalid_argument("frac_signal: m must be >= 1");
  ScaledConvergents s(ExactRational(1));
  s.advance_to(m);
  return record_from(Raw{m, s.p(), s.q(), s.scale()}, delta, true);
}

ScanSummary distribution_scan(long m_max, const Enclosure& delta,
                              const std::function<void(const FracRecord&)>& sink, const ScanOptions& opts) {
  if (m_max < 1) throw std::invalid_argument("distribution_scan: m_max must be >= 1");
  if (opts.bins < 1 || opts.chunk < 1) throw std::invalid_argument("distribution_scan: bins and chunk must be >= 1");
  if (!(delta.width() < pow10(-6))) throw PrecisionError("distribution_scan: delta enclosure too wide");

  ScanSummary sum;
  for (Histogram* h : {&sum.all, &sum.even, &sum.odd}) h->counts.assign(opts.bins, 0);
  std::vector<double> all_mid, even_mid, odd_mid;
  const ExactRational bin_scale = ExactRational(static_cast<long>(opts.bins)) / 2;

  ScaledConvergents s(ExactRational(1));
  std::vector<Raw> chunk;
  chunk.reserve(opts.chunk);
  while (s.m() < m_max) {
    chunk.clear();
    while (s.m() < m_max && chunk.size() < opts.chunk) {
      s.advance();
      chunk.push_back(Raw{s.m(), s.p(), s.q(), s.scale()});
    }
    auto records = map_indices(
        0, static_cast<std::int64_t>(chunk.size()),
        [&](std::int64_t i) { return record_from(chunk[static_cast<std::size_t>(i)], delta, opts.fractions); }, opts.exec);

    for (const auto& r : records) {
      sink(r);
      ++sum.scanned;
      if (!(r.signal.lo() > -1 && r.signal.hi() < delta.hi())) sum.range_ok = false;
      ExactRational w = r.signal.width();
      if (w > sum.max_signal_width) sum.max_signal_width = w;

      ExactRational mid = r.signal.mid();
      ExactInt b = floor_part((mid + 1) * bin_scale);
      long bin = std::clamp(b.get_si(), 0L, static_cast<long>(opts.bins) - 1);
      double md = mid.get_d();
      Histogram& view = r.m % 2 == 0 ? sum.even : sum.odd;
      ++view.counts[static_cast<std::size_t>(bin)];
      ++view.total;
      ++sum.all.counts[static_cast<std::size_t>(bin)];
      ++sum.all.total;
      all_mid.push_back(md);
      (r.m % 2 == 0 ? even_mid : odd_mid).push_back(md);
    }
  }
  double d = delta.mid().get_d();
  sum.all.ks_trapezoid = ks_statistic(std::move(all_mid), d);
  sum.even.ks_trapezoid = ks_statistic(std::move(even_mid), d);
  sum.odd.ks_trapezoid = ks_statistic(std::move(odd_mid), d);
  return sum;
}

std::vector<FracRecord> distribution_scan(long m_max, const Enclosure& delta) {
  std::vector<FracRecord> out;
  distribution_scan(m_max, delta, [&](const FracRecord& r) { out.push_back(r); });
  return out;
}

std::string to_string(Direction d) {
  return d == Direction::non_decreasing ? "non-decreasing" : "non-increasing";
}

std::string to_string(Parity p) {
  switch (p) {
    case Parity::even: return "even";
    case Parity::odd: return "odd";
    default: return "all";
  }
}

Parity parse_parity(const std::string& text) {
  if (text == "even") return Parity::even;
  if (text == "odd") return Parity::odd;
  if (text == "all") return Parity::all;
  throw std::invalid_argument("unknown parity '" + text + "' (expected even, odd or all)");
}

SubseqReport monotone_subseq(const std::vector<Enclosure>& values, Direction direction) {
  SubseqReport rep;
  rep.direction = direction;
  rep.scanned = static_cast<long>(values.size());

  std::vector<ExactRational> key;
  key.reserve(values.size());
  for (const auto& v : values) key.push_back(direction == Direction::non_decreasing ? v.mid() : ExactRational(-v.mid()));

  // tails[j]: index ending the best run of length j + 1 with the smallest key.
  std::vector<std::size_t> tails;
  std::vector<long> prev(values.size(), -1);
  for (std::size_t i = 0; i < values.size(); ++i) {
    auto it = std::upper_bound(tails.begin(), tails.end(), i,
                               [&](std::size_t a, std::size_t b) { return key[a] < key[b]; });
    if (it != tails.begin()) prev[i] = static_cast<long>(*(it - 1));
    if (it == tails.end()) tails.push_back(i); else *it = i;
  }

  if (!tails.empty()) {
    for (long i = static_cast<long>(tails.back()); i >= 0; i = prev[static_cast<std::size_t>(i)])
      rep.indices.push_back(i);
    std::reverse(rep.indices.begin(), rep.indices.end());
  }
  rep.length = rep.indices.size();

  rep.certified = true;
  for (std::size_t j = 1; j < rep.indices.size(); ++j) {
    const Enclosure& a = values[static_cast<std::size_t>(rep.indices[j - 1])];
    const Enclosure& b = values[static_cast<std::size_t>(rep.indices[j])];
    bool ok = direction == Direction::non_decreasing ? a.hi() <= b.lo() : a.lo() >= b.hi();
    if (!ok) rep.certified = false;
  }
  return rep;
}

SubseqReport subseq_scan(long k_max, Parity parity, const Enclosure& delta, Exec exec) {
  if (k_max < 1) throw std::invalid_argument("subseq_scan: k_max must be >= 1");
  if (parity == Parity::all) throw std::invalid_argument("subseq_scan: parity must be even or odd");
  long m_max = parity == Parity::even ? 2 * k_max : 2 * k_max - 1;
  auto sig = collect_signals(m_max, parity, delta, exec);
  std::vector<Enclosure> values;
  values.reserve(sig.size());
  for (auto& [m, e] : sig) values.push_back(std::move(e));

  Direction dir = parity == Parity::even ? Direction::non_decreasing : Direction::non_increasing;
  SubseqReport rep = monotone_subseq(values, dir);
  rep.parity = parity;
  for (long& i : rep.indices) i += 1;  // position -> k
  return rep;
}

std::vector<long> cluster_subsequence(long m_max, const ExactRational& eps, Parity parity, const Enclosure& delta,
                                      Exec exec) {
  if (sgn(eps) <= 0) throw std::invalid_argument("cluster_subsequence: eps must be > 0");
  auto sig = collect_signals(m_max, parity, delta, exec);

  ExactRational span = ExactRational(2) / eps;
  ExactInt nb = floor_part(span);
  if (nb * eps < 2) ++nb;  // ceil(2 / eps)
  long nbins = nb.fits_slong_p() ? nb.get_si() : std::numeric_limits<long>::max();

  std::map<long, std::vector<long>> bins;
  for (const auto& [m, e] : sig) {
    ExactInt b = floor_part((e.mid() + 1) / eps);
    long bin = std::clamp(b.get_si(), 0L, nbins - 1);
    bins[bin].push_back(m);
  }
  const std::vector<long>* best = nullptr;
  for (const auto& [bin, ms] : bins)
    if (!best || ms.size() > best->size()) best = &ms;  // ascending bins, so ties keep the lowest
  return best ? *best : std::vector<long>{};
}

ABResult build_AB(const std::vector<long>& indices, const Enclosure& delta) {
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] < 1) throw std::invalid_argument("build_AB: indices must be >= 1");
    if (i > 0 && indices[i] <= indices[i - 1]) throw std::invalid_argument("build_AB: indices must ascend");
  }
  ABResult res;
  if (indices.size() < 2) throw std::invalid_argument("build_AB: need at least 2 indices");

  std::vector<std::pair<ExactInt, ExactInt>> parts;  // ([p_m], [q_m]) per used index
  ScaledConvergents s(ExactRational(1));
  for (long m : indices) {
    s.advance_to(m);
    ExactInt fp = floor_div(s.p(), s.scale()), fq = floor_div(s.q(), s.scale());
    if (!parts.empty() && !(fp > parts.back().first && fq > parts.back().second)) continue;
    parts.emplace_back(std::move(fp), std::move(fq));
    res.used_indices.push_back(m);
  }
  if (parts.size() < 2) throw std::invalid_argument("build_AB: fewer than 2 usable indices after filtering");

  for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
    ExactInt A = parts[i + 1].first - parts[i].first;
    ExactInt B = parts[i + 1].second - parts[i].second;
    Enclosure r = delta.affine(ExactRational(B), ExactRational(-A));
    res.rows.push_back(ABRow{static_cast<long>(i + 1), res.used_indices[i], res.used_indices[i + 1], std::move(A),
                             std::move(B), std::move(r)});
  }
  return res;
}

CheckReport verify_lemma73(long k_max, const Enclosure& delta) {
  if (k_max < 1) throw std::invalid_argument("verify_lemma73: k_max must be >= 1");
  CheckReport report{"residual monotonicity at x=1"};

  // r[m] encloses delta q_m - p_m for 0 <= m <= 2 k_max + 1.
  std::vector<Enclosure> r;
  r.reserve(static_cast<std::size_t>(2 * k_max + 2));
  r.push_back(delta);
  ScaledConvergents s(ExactRational(1));
  for (long m = 1; m <= 2 * k_max + 1; ++m) {
    s.advance();
    r.push_back(delta.affine(s.q_value(), -s.p_value()));
  }

  // Records "a < b" as pass, reversed order as failure, overlap as indeterminate.
  auto less = [&](const Enclosure& a, const Enclosure& b, const std::string& what) {
    ++report.checked;
    if (a.hi() < b.lo()) return;
    report.fail(what + (a.lo() > b.hi() ? ": fails" : ": indeterminate"));
  };
  auto sign = [&](const Enclosure& a, bool positive, const std::string& what) {
    ++report.checked;
    if (positive ? a.certainly_positive() : a.certainly_negative()) return;
    report.fail(what + ((positive ? a.certainly_negative() : a.certainly_positive()) ? ": fails" : ": indeterminate"));
  };

  for (long k = 1; k <= k_max; ++k) {
    auto i = [](long m) { return static_cast<std::size_t>(m); };
    std::string tag = "k=" + std::to_string(k);
    less(r[i(2 * k)], r[i(2 * k - 2)], tag + " even decrease");
    less(r[i(2 * k - 1)], r[i(2 * k + 1)], tag + " odd increase");
    sign(r[i(2 * k)], true, tag + " even residual positive");
    sign(r[i(2 * k - 1)], false, tag + " odd residual negative");
  }
  return report;
}

Enclosure delta_for_residuals(const ABResult& ab, const ExactRational& target, long depth_cap) {
  if (sgn(target) <= 0) throw std::invalid_argument("delta_for_residuals: target must be > 0");
  ExactInt b_max(1);
  for (const auto& r : ab.rows) b_max = std::max(b_max, ExactInt(abs(r.B)));
  return delta_enclosure(target / b_max, depth_cap).enclosure;
}

void refine_residuals(ABResult& ab, const Enclosure& delta) {
  for (auto& r : ab.rows) r.residual = delta.affine(ExactRational(r.B), ExactRational(-r.A));
}

Enclosure theorem71_gap(long m, const Enclosure& delta) {
  if (m < 1) throw std::invalid_argument("theorem71_gap: m must be >= 1");
  ScaledConvergents s(ExactRational(1));
  s.advance_to(m);
  ExactInt fp = floor_div(s.p(), s.scale()), fq = floor_div(s.q(), s.scale());
  if (fq < 1) throw std::invalid_argument("theorem71_gap: [q_m] < 1");
  ExactRational ratio(fp, fq);
  ratio.canonicalize();
  return delta.affine(ExactRational(1), -ratio);
}

}  // namespace egcf
