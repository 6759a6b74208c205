#include "egcf/cli.hpp"

#include <CLI11.hpp>
#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

#include "egcf/cf_core.hpp"
#include "egcf/errors.hpp"
#include "egcf/gompertz.hpp"
#include "egcf/identity_lab.hpp"
#include "egcf/laguerre.hpp"

namespace egcf::cli {

namespace {

constexpr std::size_t kDecDigits = 20;

struct RunConfig {
  long depth = 0;  // 0: subcommand default
  long k = 0;
  std::string x = "1";
  std::string eps;
  std::string parity = "all";
  std::size_t bins = 40;
  std::string out;
  std::uint64_t seed = 1;
};

// What a subcommand produced: CSV body, summary text, and the exit status.
struct Outcome {
  std::string csv;
  std::string summary;
  int status = kOk;
};

class CsvWriter {
 public:
  explicit CsvWriter(std::initializer_list<std::string> header) { row(std::vector<std::string>(header)); }
  void row(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) buf_ << (i ? "," : "") << cells[i];
    buf_ << '\n';
  }
  std::string str() const { return buf_.str(); }

 private:
  std::ostringstream buf_;
};

void write_atomic(const std::string& path, const std::string& body) {
  namespace fs = std::filesystem;
  fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::invalid_argument("cannot open '" + tmp.string() + "' for writing");
    f << body;
    f.flush();
    if (!f) throw std::runtime_error("write to '" + tmp.string() + "' failed");
  }
  fs::rename(tmp, target);
}

std::string dec(const ExactRational& r) { return decimal_render(r, kDecDigits); }

long or_default(long v, long dflt) { return v > 0 ? v : dflt; }

ExactRational eps_or(const RunConfig& cfg, const char* dflt) {
  ExactRational e = parse_rational(cfg.eps.empty() ? dflt : cfg.eps);
  if (sgn(e) <= 0) throw std::invalid_argument("--eps must be > 0");
  return e;
}

ExactRational positive_x(const RunConfig& cfg) {
  ExactRational x = parse_rational(cfg.x);
  if (sgn(x) <= 0) throw std::invalid_argument("--x must be > 0");
  return x;
}

// Shared delta enclosure for the x = 1 experiments: width below 1e-30,
// endpoints rounded outward to 2^-128 to keep the arithmetic small.
Enclosure scan_delta() { return delta_enclosure(pow10(-30)).enclosure.outward_dyadic(128); }

Outcome report_table(const std::vector<CheckReport>& reports) {
  CsvWriter csv({"check", "checked", "violations", "status", "first_violation"});
  Outcome o;
  std::size_t failed = 0;
  for (const auto& r : reports) {
    csv.row({r.name, std::to_string(r.checked), std::to_string(r.violations.size()), r.passed() ? "pass" : "fail",
             r.passed() ? "" : r.violations.front()});
    if (!r.passed()) ++failed;
  }
  o.csv = csv.str();
  o.status = failed ? kCheckFailed : kOk;
  o.summary = std::to_string(reports.size() - failed) + "/" + std::to_string(reports.size()) + " checks passed";
  return o;
}

Outcome cmd_convergents(const RunConfig& cfg, bool with_x) {
  long n = or_default(cfg.depth, 10);
  Outcome o;
  if (with_x) {
    ExactRational x = positive_x(cfg);
    auto v = convergent_values(n, x);
    CsvWriter csv({"m", "p", "q", "ratio", "ratio_dec"});
    for (long m = 1; m <= n; ++m) {
      const ValuePair& pq = v[static_cast<std::size_t>(m + 1)];
      ExactRational r = pq.p / pq.q;
      csv.row({std::to_string(m), to_text(pq.p), to_text(pq.q), to_text(r), dec(r)});
    }
    o.csv = csv.str();
  } else {
    auto rows = convergent_polys(n);
    CsvWriter csv({"m", "P_coeffs", "Q_coeffs"});
    for (long m = 1; m <= n; ++m) {
      const auto& row = rows[static_cast<std::size_t>(m + 1)];
      csv.row({std::to_string(m), row.P.to_coeff_text(), row.Q.to_coeff_text()});
    }
    o.csv = csv.str();
  }
  CheckReport det = determinant_identity(n);
  o.status = det.passed() ? kOk : kCheckFailed;
  o.summary = std::to_string(n) + " convergents; " + det.summary();
  return o;
}

// Determinant identity at seeded random rational points, as a spot check of
// the value recurrence independent of the polynomial one.
CheckReport random_point_check(long depth, std::uint64_t seed) {
  CheckReport r{"determinant at random points (seed " + std::to_string(seed) + ")"};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> pick(1, 1000);
  for (int t = 0; t < 8; ++t) {
    ExactRational x = make_rational(pick(rng), pick(rng));
    auto v = convergent_values(depth, x);
    for (long m = 1; m <= depth; ++m) {
      const auto& cur = v[static_cast<std::size_t>(m + 1)];
      const auto& prev = v[static_cast<std::size_t>(m)];
      ++r.checked;
      if (cur.p * prev.q - prev.p * cur.q != (m % 2 == 1 ? 1 : -1))
        r.fail("x=" + to_text(x) + " m=" + std::to_string(m));
    }
  }
  return r;
}

Outcome cmd_identity_check(const RunConfig& cfg) {
  long depth = or_default(cfg.depth, 200);
  auto rows = convergent_polys(depth);
  std::vector<ExactRational> xs = {make_rational(1, 2), ExactRational(1), ExactRational(2), ExactRational(10)};
  std::vector<CheckReport> reps;
  reps.push_back(closed_form_equivalence(rows));
  reps.push_back(determinant_identity(rows));
  reps.push_back(degree_invariants(rows));
  if (depth >= 3) reps.push_back(verify_beta_gamma_recurrences(depth));
  reps.push_back(verify_theorem54(depth));
  if (depth >= 2) reps.push_back(verify_c_chain(depth));
  reps.push_back(verify_f_prime_sign(std::min(depth, 100L), xs));
  reps.push_back(random_point_check(std::min(depth, 60L), cfg.seed));
  return report_table(reps);
}

Outcome cmd_bounds_check(const RunConfig& cfg) {
  long k = or_default(cfg.k, 200);
  ExactRational x = positive_x(cfg);
  std::vector<CheckReport> reps;
  reps.push_back(verify_lower_bounds_upto(k));
  reps.push_back(verify_interleaving(x, k));
  if (!cfg.eps.empty()) {
    ExactRational tol = eps_or(cfg, "1e-12");
    OracleValue f = F_reference(x, tol);
    reps.push_back(verify_oracle_containment(x, k, f, tol));
  }
  return report_table(reps);
}

Outcome cmd_enclose(const RunConfig& cfg) {
  ExactRational x = positive_x(cfg);
  long k = or_default(cfg.k, 1);
  Enclosure e = enclose_F(x, k);
  CsvWriter csv({"lo", "hi", "width"});
  csv.row({to_text(e.lo()), to_text(e.hi()), to_text(e.width())});
  Outcome o{csv.str(), "F(" + to_text(x) + ") in [" + dec(e.lo()) + ", " + dec(e.hi()) + "], k=" + std::to_string(k)};
  o.status = e.lo() < e.hi() ? kOk : kCheckFailed;
  return o;
}

Outcome cmd_tails(const RunConfig& cfg) {
  ExactRational x = positive_x(cfg);
  long depth = or_default(cfg.depth, 20);
  ExactRational tol = eps_or(cfg, "1e-12");
  OracleValue f = F_reference(x, tol);
  CsvWriter csv({"m", "lo", "hi", "bound", "lo_dec", "hi_dec", "status"});
  for (long m = 1; m <= depth; ++m) {
    ExactRational bound = m % 2 == 1 ? x : make_rational(2, m);
    try {
      Enclosure t = tail_F(m, x, f);
      csv.row({std::to_string(m), to_text(t.lo()), to_text(t.hi()), to_text(bound), dec(t.lo()), dec(t.hi()),
               t.lo() > bound ? "pass" : "fail"});
    } catch (const PrecisionError&) {
      csv.row({std::to_string(m), "", "", to_text(bound), "", "", "indeterminate"});
    }
  }
  CheckReport rep = verify_tail_bounds(x, depth, f);
  Outcome o{csv.str(), rep.summary()};
  o.status = rep.passed() ? kOk : kCheckFailed;
  return o;
}

Outcome cmd_laguerre_check(const RunConfig& cfg) {
  long k = or_default(cfg.k, 200);
  std::vector<CheckReport> reps;
  reps.push_back(verify_lemma61_upto(k));
  for (const char* a : {"0", "-1", "1/2"}) reps.push_back(verify_laguerre_recurrence(parse_rational(a), k));
  Outcome o = report_table(reps);
  ExactRational x = positive_x(cfg);
  for (long kk : {16L, 256L}) {
    if (kk > k) break;
    o.summary += "; ratio(" + std::to_string(kk) + "," + to_text(x) + ")=" + decimal_render(asymptotic_ratio(kk, x), 12);
  }
  return o;
}

// Smallest d with 10^-d <= eps, so d decimals resolve the enclosure.
std::size_t digits_for(const ExactRational& eps) {
  std::size_t d = 1;
  while (pow10(-static_cast<long>(d)) > eps && d < 100000) ++d;
  return d;
}

Outcome cmd_delta(const RunConfig& cfg) {
  ExactRational eps = eps_or(cfg, "1e-15");
  long cap = or_default(cfg.depth, default_depth_cap());
  DeltaBracket b = delta_enclosure(eps, cap);
  const Enclosure& e = b.enclosure;
  std::size_t digits = digits_for(eps);
  CsvWriter csv({"k", "lo", "hi", "width", "mid_dec", "width_dec"});
  csv.row({std::to_string(b.k), to_text(e.lo()), to_text(e.hi()), to_text(e.width()), decimal_render(e.mid(), digits),
           decimal_render(e.width(), digits + 3)});

  Enclosure ref = delta_series_reference();
  bool agree = !(e.hi() < ref.lo() || ref.hi() < e.lo());
  Outcome o{csv.str(), "delta = " + decimal_render(e.mid(), digits) + " +- " + decimal_render(e.width(), digits + 3) +
                           " (k=" + std::to_string(b.k) + "); series oracle " + (agree ? "agrees" : "DISAGREES")};
  o.status = agree ? kOk : kCheckFailed;
  return o;
}

std::string histogram_text(const std::string& label, const Histogram& h) {
  std::string s = label + ": n=" + std::to_string(h.total) + " ks_trapezoid=" + std::to_string(h.ks_trapezoid) + " counts=";
  for (std::size_t i = 0; i < h.counts.size(); ++i) s += (i ? " " : "") + std::to_string(h.counts[i]);
  return s;
}

Outcome cmd_scan_frac(const RunConfig& cfg) {
  long depth = or_default(cfg.depth, 1000);
  Parity parity = parse_parity(cfg.parity);
  Enclosure delta = scan_delta();
  ScanOptions opts;
  opts.bins = cfg.bins;
  CsvWriter csv({"m", "p_frac", "q_frac", "signal_lo", "signal_hi", "signal_dec"});
  ScanSummary sum = distribution_scan(
      depth, delta,
      [&](const FracRecord& r) {
        if (r.m % 2 == 0 ? parity == Parity::odd : parity == Parity::even) return;
        const Enclosure& s = r.signal;
        csv.row({std::to_string(r.m), to_text(r.p_frac), to_text(r.q_frac), to_text(s.lo()), to_text(s.hi()),
                 dec(s.mid())});
      },
      opts);
  const Histogram& h = parity == Parity::even ? sum.even : parity == Parity::odd ? sum.odd : sum.all;
  Outcome o{csv.str(), histogram_text(to_string(parity), h) + (sum.range_ok ? "; range ok" : "; RANGE VIOLATION")};
  o.status = sum.range_ok ? kOk : kCheckFailed;
  return o;
}

Outcome cmd_subseq_scan(const RunConfig& cfg) {
  long k = or_default(cfg.k, 500);
  Parity parity = parse_parity(cfg.parity == "all" ? "even" : cfg.parity);
  Enclosure delta = scan_delta();
  SubseqReport rep = subseq_scan(k, parity, delta);
  CsvWriter csv({"position", "k", "m", "signal_dec"});
  std::vector<long> ms;
  for (long kk : rep.indices) ms.push_back(parity == Parity::even ? 2 * kk : 2 * kk - 1);
  for (std::size_t i = 0; i < rep.indices.size(); ++i) {
    FracRecord r = frac_signal(ms[i], delta);
    csv.row({std::to_string(i + 1), std::to_string(rep.indices[i]), std::to_string(ms[i]), dec(r.signal.mid())});
  }
  Outcome o{csv.str(), to_string(parity) + " " + to_string(rep.direction) + " subsequence: length " +
                           std::to_string(rep.length) + " of " + std::to_string(rep.scanned) +
                           (rep.certified ? ", certified" : ", not certified")};
  return o;
}

Outcome cmd_ab_build(const RunConfig& cfg) {
  long depth = or_default(cfg.depth, 5000);
  ExactRational eps = eps_or(cfg, "1e-3");
  Parity parity = parse_parity(cfg.parity);
  Enclosure delta = scan_delta();
  std::vector<long> idx = cluster_subsequence(depth, eps, parity, delta);
  ABResult ab = build_AB(idx, delta);
  refine_residuals(ab, delta_for_residuals(ab, pow10(-30)));
  CsvWriter csv({"i", "m_i", "m_next", "A", "B", "residual_lo", "residual_hi", "residual_dec", "excludes_zero"});
  std::size_t excluded = 0;
  for (const auto& r : ab.rows) {
    Enclosure res = r.residual.outward_dyadic(160);
    csv.row({std::to_string(r.i), std::to_string(r.m_i), std::to_string(r.m_next), r.A.get_str(), r.B.get_str(),
             to_text(res.lo()), to_text(res.hi()), dec(res.mid()), r.excludes_zero() ? "yes" : "indeterminate"});
    if (r.excludes_zero()) ++excluded;
  }
  Outcome o{csv.str(), std::to_string(idx.size()) + " cluster indices (proxy selection), " +
                           std::to_string(ab.used_indices.size()) + " after filtering, " +
                           std::to_string(ab.rows.size()) + " rows, " + std::to_string(excluded) +
                           " residuals exclude 0"};
  return o;
}

// Writes the even-index view next to the main file: foo.csv -> foo_even.csv.
std::string even_path(const std::string& out) {
  std::filesystem::path p(out);
  return (p.parent_path() / (p.stem().string() + "_even" + p.extension().string())).string();
}

Outcome cmd_figures(const RunConfig& cfg, std::string& extra_path, std::string& extra_csv) {
  if (cfg.out.empty()) throw std::invalid_argument("figures requires --out");
  long depth = or_default(cfg.depth, 10000);
  long k = or_default(cfg.k, 5000);
  Enclosure delta = scan_delta();
  ScanOptions opts;
  opts.bins = cfg.bins;
  opts.fractions = false;
  CsvWriter all({"m", "signal_dec"});
  CsvWriter even({"k", "signal_dec"});
  long m_max = std::max(depth, 2 * k);
  ScanSummary sum = distribution_scan(
      m_max, delta,
      [&](const FracRecord& r) {
        std::string v = decimal_render(r.signal.mid(), 12);
        if (r.m <= depth) all.row({std::to_string(r.m), v});
        if (r.m % 2 == 0 && r.m <= 2 * k) even.row({std::to_string(r.m / 2), v});
      },
      opts);
  extra_path = even_path(cfg.out);
  extra_csv = even.str();
  Outcome o{all.str(), histogram_text("all m<=" + std::to_string(m_max), sum.all) + "; " +
                           histogram_text("even", sum.even) + (sum.range_ok ? "; range ok" : "; RANGE VIOLATION")};
  o.status = sum.range_ok ? kOk : kCheckFailed;
  return o;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Continued fraction of e^x E1(x): exact checks, enclosures and Euler-Gompertz experiments", "egcf"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--depth", cfg.depth, "Depth cap (index bound)")->check(CLI::PositiveNumber);
    sub->add_option("--k", cfg.k, "Index k")->check(CLI::PositiveNumber);
    sub->add_option("--x", cfg.x, "Evaluation point (rational or decimal)");
    sub->add_option("--eps", cfg.eps, "Precision target or bin width");
    sub->add_option("--parity", cfg.parity, "even, odd or all")->check(CLI::IsMember({"even", "odd", "all"}));
    sub->add_option("--bins", cfg.bins, "Histogram bins")->check(CLI::PositiveNumber);
    sub->add_option("--out", cfg.out, "Output CSV path");
    sub->add_option("--seed", cfg.seed, "Seed for randomized checks");
  };

  std::map<std::string, CLI::App*> subs;
  for (const char* name : {"convergents", "identity-check", "bounds-check", "enclose", "tails", "laguerre-check",
                           "delta", "scan-frac", "subseq-scan", "ab-build", "figures"}) {
    subs[name] = app.add_subcommand(name);
    add_common(subs[name]);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    std::string extra_path, extra_csv;
    Outcome o;
    if (subs["convergents"]->parsed()) o = cmd_convergents(cfg, subs["convergents"]->count("--x") > 0);
    else if (subs["identity-check"]->parsed()) o = cmd_identity_check(cfg);
    else if (subs["bounds-check"]->parsed()) o = cmd_bounds_check(cfg);
    else if (subs["enclose"]->parsed()) o = cmd_enclose(cfg);
    else if (subs["tails"]->parsed()) o = cmd_tails(cfg);
    else if (subs["laguerre-check"]->parsed()) o = cmd_laguerre_check(cfg);
    else if (subs["delta"]->parsed()) o = cmd_delta(cfg);
    else if (subs["scan-frac"]->parsed()) o = cmd_scan_frac(cfg);
    else if (subs["subseq-scan"]->parsed()) o = cmd_subseq_scan(cfg);
    else if (subs["ab-build"]->parsed()) o = cmd_ab_build(cfg);
    else o = cmd_figures(cfg, extra_path, extra_csv);

    if (cfg.out.empty()) {
      out << o.csv << "# " << o.summary << '\n';
    } else {
      write_atomic(cfg.out, o.csv);
      if (!extra_path.empty()) write_atomic(extra_path, extra_csv);
      out << o.summary << '\n';
    }
    return o.status;
  } catch (const PrecisionError& e) {
    err << "error: " << e.what() << '\n';
    return kCheckFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace egcf::cli
