#pragma once

// Exact integers and rationals, plus closed rational intervals.
//
// ExactInt and ExactRational are GMP's mpz_class / mpq_class. mpq_class is
// kept canonical (positive denominator, gcd 1, zero is 0/1) by every
// arithmetic operator, so comparisons are exact cross-multiplications.

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

namespace egcf {

using ExactInt = mpz_class;
using ExactRational = mpq_class;

// n/d in canonical form. Throws std::invalid_argument when d == 0.
ExactRational make_rational(long n, long d);

// Greatest integer <= r.
ExactInt floor_part(const ExactRational& r);

// r - floor_part(r), always in [0, 1).
ExactRational frac_part(const ExactRational& r);

// Round-half-to-even decimal string with exactly `digits` fractional digits.
// Throws std::invalid_argument when digits < 1.
std::string decimal_render(const ExactRational& r, std::size_t digits);

// "num/den" with den omitted when it is 1.
std::string to_text(const ExactRational& r);

// Parses "7", "-5/3", "0.125", "1e-15", "2.5E3". Throws std::invalid_argument.
ExactRational parse_rational(std::string_view text);

// 10^e as an exact rational (e may be negative).
ExactRational pow10(long e);

// floor(sqrt(n)) for n >= 0, exact.
ExactInt isqrt(const ExactInt& n);

ExactInt factorial(unsigned long n);
ExactInt binomial(unsigned long n, unsigned long k);

// Closed interval [lo, hi] certified to contain some real value.
class Enclosure {
 public:
  Enclosure(ExactRational lo, ExactRational hi);
  static Enclosure point(const ExactRational& v) { return Enclosure(v, v); }

  const ExactRational& lo() const { return lo_; }
  const ExactRational& hi() const { return hi_; }
  ExactRational width() const { return hi_ - lo_; }
  ExactRational mid() const { return (lo_ + hi_) / 2; }

  bool contains(const ExactRational& v) const { return lo_ <= v && v <= hi_; }
  bool contains(const Enclosure& inner) const {
    return lo_ <= inner.lo_ && inner.hi_ <= hi_;
  }
  // Proper subset with both endpoints strictly inside.
  bool strictly_contains(const Enclosure& inner) const {
    return lo_ < inner.lo_ && inner.hi_ < hi_;
  }
  bool excludes_zero() const { return lo_ > 0 || hi_ < 0; }
  bool certainly_positive() const { return lo_ > 0; }
  bool certainly_negative() const { return hi_ < 0; }

  Enclosure widened(const ExactRational& by) const;
  // Throws std::domain_error when the intervals are disjoint.
  Enclosure intersect(const Enclosure& other) const;

  // Smallest enclosure with endpoints on the grid 2^-bits containing *this.
  Enclosure outward_dyadic(unsigned long bits) const;

  // Value bounds for a*v + b where v ranges over *this.
  Enclosure affine(const ExactRational& a, const ExactRational& b) const;

  friend bool operator==(const Enclosure&, const Enclosure&) = default;

 private:
  ExactRational lo_;
  ExactRational hi_;
};

}  // namespace egcf
