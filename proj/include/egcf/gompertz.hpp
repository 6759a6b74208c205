#pragma once

// Experiments at x = 1, where F(1) is the Euler-Gompertz constant delta.
// p_m = P_m(1), q_m = Q_m(1); floor_part / frac_part give [.] and {.}.

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "egcf/cf_core.hpp"

namespace egcf {

// Depth cap for delta_enclosure: 2000, or EGCF_DEPTH_CAP when set to a
// positive integer.
long default_depth_cap();

struct DeltaBracket {
  long k;
  Enclosure enclosure;  // [p_2k / q_2k, p_2k-1 / q_2k-1]
};

// First k with width < eps. Throws CapExceeded past depth_cap.
DeltaBracket delta_enclosure(const ExactRational& eps, long depth_cap = default_depth_cap());

// delta = e * (-gamma + sum_{j>=1} (-1)^{j+1} / (j j!)) from the published
// 30-digit Euler-Mascheroni constant, truncated at j = 60 with the
// truncation and rounding errors folded into the interval.
Enclosure delta_series_reference();

struct PQAtOne {
  ExactRational p;
  ExactRational q;
  ExactInt scaled_p;  // floor(m/2)! * p
  ExactInt scaled_q;
};

class IntegralityViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exact p_m, q_m by the rational recurrence; throws IntegralityViolation if
// floor(m/2)! p_m or floor(m/2)! q_m is not a positive integer. m >= 1.
PQAtOne pq_at_one(long m);

// Integrality and positivity of the scaled values for 1 <= m <= m_max, plus
// agreement with the integer-only stream.
CheckReport verify_integrality(long m_max, Exec exec = Exec::parallel);

// q_2k-1 < 2^k for k <= k_max; p and q strictly increasing along each
// parity class (p_2k > p_2k-2, p_2k+1 > p_2k-1, same for q).
CheckReport q_growth_check(long k_max);

struct FracRecord {
  long m = 0;
  ExactRational p_frac;  // {p_m}
  ExactRational q_frac;  // {q_m}
  // delta {q_m} - {p_m}, endpoints rounded outward to multiples of 2^-160.
  Enclosure signal = Enclosure::point(ExactRational(0));
};

FracRecord frac_signal(long m, const Enclosure& delta);

struct Histogram {
  std::vector<std::size_t> counts;  // equal bins over [-1, 1)
  std::size_t total = 0;
  double ks_trapezoid = 0;  // sup |ECDF - CDF of delta U - V|, U, V uniform
};

struct ScanSummary {
  long scanned = 0;
  bool range_ok = true;                 // every signal inside (-1, delta_hi)
  ExactRational max_signal_width{0};
  Histogram all, even, odd;
};

struct ScanOptions {
  std::size_t bins = 40;
  std::size_t chunk = 256;
  Exec exec = Exec::parallel;
  // Fill p_frac / q_frac. Reducing them costs a gcd on numbers with
  // thousands of digits, so signal-only scans turn this off (fields stay 0).
  bool fractions = true;
};

// Records for 1 <= m <= m_max delivered to `sink` in increasing m.
// Throws PrecisionError unless width(delta) < 1e-6.
ScanSummary distribution_scan(long m_max, const Enclosure& delta,
                              const std::function<void(const FracRecord&)>& sink, const ScanOptions& opts = {});
std::vector<FracRecord> distribution_scan(long m_max, const Enclosure& delta);

enum class Direction { non_decreasing, non_increasing };
enum class Parity { even, odd, all };

std::string to_string(Direction d);
std::string to_string(Parity p);
Parity parse_parity(const std::string& text);

struct SubseqReport {
  Parity parity = Parity::all;
  long scanned = 0;
  std::vector<long> indices;  // positions (or k values when produced by subseq_scan)
  Direction direction = Direction::non_decreasing;
  std::size_t length = 0;
  // Every consecutive selected pair is ordered for all values inside the
  // enclosures, not just their midpoints.
  bool certified = false;
};

// Longest weakly monotone subsequence of the enclosure midpoints,
// O(n log n). Indices are 0-based positions.
SubseqReport monotone_subseq(const std::vector<Enclosure>& values, Direction direction);

// Signals delta{q_2k} - {p_2k} (even, non-decreasing) or
// delta{q_2k-1} - {p_2k-1} (odd, non-increasing) for 1 <= k <= k_max.
// Indices in the report are the k values.
SubseqReport subseq_scan(long k_max, Parity parity, const Enclosure& delta, Exec exec = Exec::parallel);

// Ascending indices m <= m_max (restricted to the parity) whose signal
// midpoints share the most populated width-eps bin over [-1, 1); ties go
// to the lowest bin.
std::vector<long> cluster_subsequence(long m_max, const ExactRational& eps, Parity parity, const Enclosure& delta,
                                      Exec exec = Exec::parallel);

struct ABRow {
  long i;
  long m_i;
  long m_next;
  ExactInt A;  // [p_{m_{i+1}}] - [p_{m_i}]
  ExactInt B;  // [q_{m_{i+1}}] - [q_{m_i}]
  Enclosure residual;  // delta B - A

  bool excludes_zero() const { return residual.excludes_zero(); }
};

struct ABResult {
  std::vector<long> used_indices;  // after the strict-increase filter
  std::vector<ABRow> rows;
};

// Throws std::invalid_argument with fewer than 2 usable indices.
ABResult build_AB(const std::vector<long>& indices, const Enclosure& delta);

// A delta enclosure narrow enough that every residual of `ab` is narrower
// than `target`, and the residuals recomputed from a given enclosure.
Enclosure delta_for_residuals(const ABResult& ab, const ExactRational& target, long depth_cap = 20000);
void refine_residuals(ABResult& ab, const Enclosure& delta);

// delta q_2k - p_2k strictly decreasing and positive, delta q_2k+1 - p_2k+1
// strictly increasing and negative, for 1 <= k <= k_max. Overlapping
// enclosures are reported as indeterminate violations.
CheckReport verify_lemma73(long k_max, const Enclosure& delta);

// Enclosure of delta - [p_m]/[q_m]. Throws std::invalid_argument if [q_m] < 1.
Enclosure theorem71_gap(long m, const Enclosure& delta);

}  // namespace egcf
