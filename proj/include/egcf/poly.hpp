#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "egcf/exact.hpp"

namespace egcf {

// Dense univariate polynomial over the rationals, coefficients in ascending
// degree. Trailing zeros are always trimmed; the zero polynomial is empty.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<ExactRational> coeffs);
  Poly(std::initializer_list<ExactRational> coeffs);

  static Poly constant(const ExactRational& c);
  static Poly monomial(const ExactRational& c, std::size_t degree);
  static Poly x() { return monomial(ExactRational(1), 1); }

  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<ExactRational>& coeffs() const { return coeffs_; }
  // Coefficient of x^i, zero past the degree.
  ExactRational coeff(std::size_t i) const;

  ExactRational eval(const ExactRational& x) const;
  Poly derivative() const;
  // p(-x).
  Poly reflect() const;
  Poly pow(unsigned n) const;

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const ExactRational& s);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(const Poly& a);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const ExactRational& s) { return a *= s; }
  friend Poly operator*(const ExactRational& s, Poly a) { return a *= s; }
  friend bool operator==(const Poly&, const Poly&) = default;

  // Space-separated "num/den" coefficients, ascending; "0" for zero.
  std::string to_coeff_text() const;
  // Human-readable, e.g. "1/2*x^2 + 2*x + 1".
  std::string to_string() const;

 private:
  void trim();
  std::vector<ExactRational> coeffs_;
};

}  // namespace egcf
