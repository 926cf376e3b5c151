#include "extremal/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace extremal {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Integer parse_integer(std::string_view s) {
  std::string_view body = s;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  if (!all_digits(body)) throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  Integer z;
  z.set_str(std::string(s.front() == '+' ? s.substr(1) : s), 10);
  return z;
}

}  // namespace

int sign(const Rational& q) { return sgn(q); }

Rational pow10(long e) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(e < 0 ? -e : e));
  if (e >= 0) return Rational(p);
  Rational r(Integer(1), p);
  r.canonicalize();
  return r;
}

long decimal_exponent(const Rational& q) {
  if (sgn(q) == 0) throw std::domain_error("decimal_exponent of zero");
  Rational a = abs(q);
  // Start from a floating estimate and correct by exact comparison.
  long e = static_cast<long>(std::floor(std::log10(std::fabs(a.get_d()))));
  if (!std::isfinite(a.get_d()) || a.get_d() == 0.0) {
    e = static_cast<long>(mpz_sizeinbase(a.get_num_mpz_t(), 10)) -
        static_cast<long>(mpz_sizeinbase(a.get_den_mpz_t(), 10));
  }
  while (pow10(e) > a) --e;
  while (pow10(e + 1) <= a) ++e;
  return e;
}

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) throw std::invalid_argument("empty rational");

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(s.substr(0, slash));
    Integer den = parse_integer(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
  }

  bool negative = false;
  if (s.front() == '-' || s.front() == '+') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    Integer ez = parse_integer(s.substr(e + 1));
    if (!ez.fits_slong_p() || abs(ez) > 10000)
      throw std::invalid_argument("exponent out of range in '" + std::string(text) + "'");
    exponent = ez.get_si();
    s = s.substr(0, e);
  }
  std::string digits;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view ip = s.substr(0, dot), fp = s.substr(dot + 1);
    if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)) || (ip.empty() && fp.empty()))
      throw std::invalid_argument("malformed decimal '" + std::string(text) + "'");
    digits = std::string(ip) + std::string(fp);
    exponent -= static_cast<long>(fp.size());
  } else {
    if (!all_digits(s)) throw std::invalid_argument("malformed number '" + std::string(text) + "'");
    digits = std::string(s);
  }
  Rational r(Integer(digits, 10));
  r *= pow10(exponent);
  if (negative) r = -r;
  return r;
}

std::string to_exact_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_str();
}

std::string to_decimal(const Rational& q, int significant) {
  if (significant < 1) throw std::invalid_argument("significant digits must be >= 1");
  if (sgn(q) == 0) {
    if (significant == 1) return "0";
    return "0." + std::string(static_cast<std::size_t>(significant - 1), '0');
  }
  Rational a = abs(q);
  long e = decimal_exponent(a);
  // Scale so that the rounded integer carries exactly `significant` digits.
  long shift = significant - 1 - e;
  Rational scaled = a * pow10(shift);
  Integer n = scaled.get_num() / scaled.get_den();
  Rational frac = scaled - Rational(n);
  if (frac * 2 >= 1) ++n;
  std::string d = n.get_str();
  if (static_cast<long>(d.size()) > significant) {
    // Rounding carried into a new leading digit (e.g. 9.99 -> 10.0).
    d.pop_back();
    --shift;
  }
  // Value is d * 10^(-shift).
  std::string out;
  if (shift <= 0) {
    out = d + std::string(static_cast<std::size_t>(-shift), '0');
  } else if (shift >= static_cast<long>(d.size())) {
    out = "0." + std::string(static_cast<std::size_t>(shift - static_cast<long>(d.size())), '0') + d;
  } else {
    out = d.substr(0, d.size() - static_cast<std::size_t>(shift)) + "." +
          d.substr(d.size() - static_cast<std::size_t>(shift));
  }
  return sgn(q) < 0 ? "-" + out : out;
}

Rational from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("from_double: non-finite value");
  Rational r(x);  // exact binary value
  r.canonicalize();
  return r;
}

}  // namespace extremal
