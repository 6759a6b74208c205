#include "egcf/exact.hpp"

#include <cctype>
#include <stdexcept>

namespace egcf {

ExactRational make_rational(long n, long d) {
  if (d == 0) throw std::invalid_argument("make_rational: zero denominator");
  ExactRational r{ExactInt(n), ExactInt(d)};
  r.canonicalize();
  return r;
}

ExactInt floor_part(const ExactRational& r) {
  ExactInt q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

ExactRational frac_part(const ExactRational& r) {
  ExactInt rem;
  mpz_fdiv_r(rem.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  ExactRational out(rem, r.get_den());
  out.canonicalize();
  return out;
}

std::string decimal_render(const ExactRational& r, std::size_t digits) {
  if (digits < 1) throw std::invalid_argument("decimal_render: digits must be >= 1");
  ExactInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);

  // |r| * 10^digits = q + rem/den with 0 <= rem < den.
  ExactInt num = abs(r.get_num()) * scale;
  const ExactInt& den = r.get_den();
  ExactInt q, rem;
  mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  int half = cmp(ExactInt(2 * rem), den);
  if (half > 0 || (half == 0 && mpz_odd_p(q.get_mpz_t()))) ++q;

  std::string body = q.get_str();
  if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
  body.insert(body.size() - digits, ".");
  if (sgn(r) < 0 && q != 0) body.insert(0, "-");
  return body;
}

std::string to_text(const ExactRational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

ExactRational pow10(long e) {
  ExactInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(e < 0 ? -e : e));
  if (e >= 0) return ExactRational(p);
  ExactRational out(1, 1);
  out /= p;
  return out;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

ExactInt parse_int(std::string_view s) {
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  ExactInt v(std::string(s), 10);
  return neg ? ExactInt(-v) : v;
}

}  // namespace

ExactRational parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    ExactInt num = parse_int(text.substr(0, slash));
    ExactInt den = parse_int(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    ExactRational out(num, den);
    out.canonicalize();
    return out;
  }

  std::string_view mant = text;
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    mant = text.substr(0, e);
    ExactInt ex = parse_int(text.substr(e + 1));
    if (!ex.fits_slong_p() || abs(ex) > 100000)
      throw std::invalid_argument("exponent out of range in '" + std::string(text) + "'");
    exponent = ex.get_si();
  }

  bool neg = false;
  if (!mant.empty() && (mant.front() == '-' || mant.front() == '+')) {
    neg = mant.front() == '-';
    mant.remove_prefix(1);
  }
  std::string digits;
  long frac_digits = 0;
  if (auto dot = mant.find('.'); dot != std::string_view::npos) {
    std::string_view ip = mant.substr(0, dot), fp = mant.substr(dot + 1);
    if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) ||
        (!fp.empty() && !all_digits(fp)))
      throw std::invalid_argument("malformed decimal '" + std::string(text) + "'");
    digits = std::string(ip) + std::string(fp);
    frac_digits = static_cast<long>(fp.size());
  } else {
    if (!all_digits(mant)) throw std::invalid_argument("malformed number '" + std::string(text) + "'");
    digits = std::string(mant);
  }
  ExactRational out(ExactInt(digits, 10));
  out *= pow10(exponent - frac_digits);
  if (neg) out = -out;
  return out;
}

ExactInt isqrt(const ExactInt& n) {
  if (sgn(n) < 0) throw std::domain_error("isqrt of negative integer");
  ExactInt r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

ExactInt factorial(unsigned long n) {
  ExactInt f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

ExactInt binomial(unsigned long n, unsigned long k) {
  ExactInt b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

Enclosure::Enclosure(ExactRational lo, ExactRational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_ > hi_) throw std::invalid_argument("Enclosure: lo > hi");
}

Enclosure Enclosure::widened(const ExactRational& by) const {
  if (sgn(by) < 0) throw std::invalid_argument("Enclosure::widened: negative amount");
  return Enclosure(lo_ - by, hi_ + by);
}

Enclosure Enclosure::intersect(const Enclosure& other) const {
  const ExactRational& lo = lo_ > other.lo_ ? lo_ : other.lo_;
  const ExactRational& hi = hi_ < other.hi_ ? hi_ : other.hi_;
  if (lo > hi) throw std::domain_error("Enclosure::intersect: disjoint intervals");
  return Enclosure(lo, hi);
}

Enclosure Enclosure::outward_dyadic(unsigned long bits) const {
  ExactInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 2, bits);
  ExactInt lo_n, hi_n;
  ExactInt lo_s = lo_.get_num() * scale;
  ExactInt hi_s = hi_.get_num() * scale;
  mpz_fdiv_q(lo_n.get_mpz_t(), lo_s.get_mpz_t(), lo_.get_den_mpz_t());
  mpz_cdiv_q(hi_n.get_mpz_t(), hi_s.get_mpz_t(), hi_.get_den_mpz_t());
  ExactRational lo(lo_n, scale), hi(hi_n, scale);
  lo.canonicalize();
  hi.canonicalize();
  return Enclosure(lo, hi);
}

Enclosure Enclosure::affine(const ExactRational& a, const ExactRational& b) const {
  ExactRational x = a * lo_ + b;
  ExactRational y = a * hi_ + b;
  if (x <= y) return Enclosure(x, y);
  return Enclosure(y, x);
}

}  // namespace egcf
