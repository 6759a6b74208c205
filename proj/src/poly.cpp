#include "egcf/poly.hpp"

#include <algorithm>
#include <utility>

namespace egcf {

Poly::Poly(std::vector<ExactRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<ExactRational> coeffs) : coeffs_(coeffs) { trim(); }

Poly Poly::constant(const ExactRational& c) { return Poly({c}); }

Poly Poly::monomial(const ExactRational& c, std::size_t degree) {
  std::vector<ExactRational> v(degree + 1);
  v[degree] = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

ExactRational Poly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : ExactRational(0);
}

ExactRational Poly::eval(const ExactRational& x) const {
  ExactRational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<ExactRational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return Poly(std::move(d));
}

Poly Poly::reflect() const {
  Poly r = *this;
  for (std::size_t i = 1; i < r.coeffs_.size(); i += 2) r.coeffs_[i] = -r.coeffs_[i];
  return r;
}

Poly Poly::pow(unsigned n) const {
  Poly result = constant(ExactRational(1));
  Poly base = *this;
  while (n) {
    if (n & 1u) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const ExactRational& s) {
  if (sgn(s) == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= s;
  return *this;
}

Poly operator-(const Poly& a) {
  Poly r = a;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

namespace {

// p = (integer vector) / den, with den the lcm of the coefficient denominators.
struct IntegerForm {
  std::vector<ExactInt> nums;
  ExactInt den;
};

IntegerForm to_integer_form(const std::vector<ExactRational>& coeffs) {
  IntegerForm f;
  f.den = 1;
  for (const auto& c : coeffs) mpz_lcm(f.den.get_mpz_t(), f.den.get_mpz_t(), c.get_den_mpz_t());
  f.nums.resize(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    ExactInt scale;
    mpz_divexact(scale.get_mpz_t(), f.den.get_mpz_t(), coeffs[i].get_den_mpz_t());
    f.nums[i] = coeffs[i].get_num() * scale;
  }
  return f;
}

}  // namespace

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  // Multiply over the integers after clearing denominators; one gcd per
  // output coefficient instead of one per term.
  IntegerForm fa = to_integer_form(a.coeffs_);
  IntegerForm fb = to_integer_form(b.coeffs_);
  std::vector<ExactInt> prod(fa.nums.size() + fb.nums.size() - 1);
  for (std::size_t i = 0; i < fa.nums.size(); ++i) {
    if (sgn(fa.nums[i]) == 0) continue;
    for (std::size_t j = 0; j < fb.nums.size(); ++j)
      mpz_addmul(prod[i + j].get_mpz_t(), fa.nums[i].get_mpz_t(), fb.nums[j].get_mpz_t());
  }
  ExactInt den = fa.den * fb.den;
  std::vector<ExactRational> out(prod.size());
  for (std::size_t k = 0; k < prod.size(); ++k) {
    out[k] = ExactRational(prod[k], den);
    out[k].canonicalize();
  }
  return Poly(std::move(out));
}

std::string Poly::to_coeff_text() const {
  if (coeffs_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) s += ' ';
    s += egcf::to_text(coeffs_[i]);
  }
  return s;
}

std::string Poly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string s;
  for (std::size_t n = coeffs_.size(); n-- > 0;) {
    const ExactRational& c = coeffs_[n];
    if (sgn(c) == 0) continue;
    ExactRational mag = abs(c);
    if (s.empty()) {
      if (sgn(c) < 0) s += "-";
    } else {
      s += sgn(c) < 0 ? " - " : " + ";
    }
    bool unit = mag == 1 && n > 0;
    if (!unit) s += egcf::to_text(mag);
    if (n > 0) {
      if (!unit) s += "*";
      s += "x";
      if (n > 1) s += "^" + std::to_string(n);
    }
  }
  return s;
}

}  // namespace egcf
