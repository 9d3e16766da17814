#include "ambikit/scalar.hpp"

#include <boost/multiprecision/gmp.hpp>

#include <cctype>
#include <cmath>
#include <sstream>

namespace ambikit {

namespace mp = boost::multiprecision;
using Integer = mp::mpz_int;

double to_double(const Rational& q) { return q.convert_to<double>(); }

Rational parse_rational(const std::string& text) {
  std::string t;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
  if (t.empty()) throw std::invalid_argument("empty rational literal");

  // the string constructors honor C-style base prefixes, so digit strings are
  // stripped of leading zeros and built in base ten explicitly
  auto make_integer = [&text](const std::string& body) {
    bool neg = false;
    size_t pos = 0;
    if (pos < body.size() && (body[pos] == '+' || body[pos] == '-'))
      neg = (body[pos++] == '-');
    if (pos >= body.size()) throw std::invalid_argument("bad rational literal: " + text);
    for (size_t i = pos; i < body.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(body[i])))
        throw std::invalid_argument("bad rational literal: " + text);
    size_t nz = body.find_first_not_of('0', pos);
    Integer value(nz == std::string::npos ? "0" : body.substr(nz));
    return neg ? Integer(-value) : value;
  };

  auto slash = t.find('/');
  if (slash != std::string::npos) {
    Integer num = make_integer(t.substr(0, slash));
    Integer den = make_integer(t.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: " + text);
    return Rational(num, den);
  }

  // [sign] digits [. digits] [e [sign] digits]
  size_t pos = 0;
  bool neg = false;
  if (pos < t.size() && (t[pos] == '+' || t[pos] == '-')) neg = (t[pos++] == '-');

  std::string digits;
  long frac_digits = 0;
  bool saw_digit = false;
  while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) {
    digits.push_back(t[pos++]);
    saw_digit = true;
  }
  if (pos < t.size() && t[pos] == '.') {
    ++pos;
    while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) {
      digits.push_back(t[pos++]);
      ++frac_digits;
      saw_digit = true;
    }
  }
  long exp10 = 0;
  if (pos < t.size() && (t[pos] == 'e' || t[pos] == 'E')) {
    ++pos;
    bool eneg = false;
    if (pos < t.size() && (t[pos] == '+' || t[pos] == '-')) eneg = (t[pos++] == '-');
    if (pos >= t.size() || !std::isdigit(static_cast<unsigned char>(t[pos])))
      throw std::invalid_argument("bad rational literal: " + text);
    while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos])))
      exp10 = exp10 * 10 + (t[pos++] - '0');
    if (eneg) exp10 = -exp10;
  }
  if (!saw_digit || pos != t.size()) throw std::invalid_argument("bad rational literal: " + text);

  Integer num = make_integer(digits.empty() ? "0" : digits);
  if (neg) num = -num;
  long shift = exp10 - frac_digits;
  Integer den(1);
  if (shift >= 0) {
    num *= mp::pow(Integer(10), static_cast<unsigned>(shift));
  } else {
    den = mp::pow(Integer(10), static_cast<unsigned>(-shift));
  }
  return Rational(num, den);
}

std::string rational_to_string(const Rational& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

GaussQ GaussQ::inverse() const {
  Rational n = norm();
  if (n == 0) throw std::domain_error("division by zero");
  return {re / n, -im / n};
}

Exact Exact::inverse() const {
  // 1/(r + s*sqrt2) = (r - s*sqrt2) / (r^2 - 2 s^2); the denominator is a
  // Gaussian rational and vanishes only at zero (sqrt2 is not in Q(i)).
  if (is_zero()) throw std::domain_error("division by zero");
  GaussQ two{Rational(2), Rational(0)};
  GaussQ den = r * r - two * (s * s);
  GaussQ d = den.inverse();
  return {r * d, -(s * d)};
}

std::complex<double> Exact::to_complex() const {
  static const double root2 = std::sqrt(2.0);
  return {to_double(r.re) + root2 * to_double(s.re), to_double(r.im) + root2 * to_double(s.im)};
}

Scalar Scalar::inverse() const {
  if (exact_) return Scalar(e_.inverse());
  if (f_ == std::complex<double>{0.0, 0.0}) throw std::domain_error("division by zero");
  return Scalar(1.0 / f_);
}

namespace {

std::string gaussq_to_string(const GaussQ& g) {
  std::string re = rational_to_string(g.re);
  if (g.im == 0) return re;
  std::string im = rational_to_string(g.im);
  std::string out;
  if (g.re != 0) out = re;
  if (!im.empty() && im[0] != '-' && !out.empty()) out += "+";
  out += im + "i";
  return out;
}

}  // namespace

std::string Scalar::to_string() const {
  if (!exact_) {
    std::ostringstream os;
    os.precision(17);
    os << f_.real() << (f_.imag() < 0 ? "" : "+") << f_.imag() << "i";
    return os.str();
  }
  if (e_.is_zero()) return "0";
  std::string out;
  if (!e_.r.is_zero()) out = gaussq_to_string(e_.r);
  if (!e_.s.is_zero()) {
    if (!out.empty()) out += "+";
    out += "sqrt2*(" + gaussq_to_string(e_.s) + ")";
  }
  return out;
}

bool is_unimodular(const Scalar& z, const Tol& tol) {
  if (z.is_exact()) {
    return z.norm_sq().exact() == Exact(GaussQ{Rational(1), Rational(0)});
  }
  return std::abs(std::abs(z.to_complex()) - 1.0) <= tol.rel;
}

Scalar circle_point(const Rational& t) {
  Rational d = 1 + t * t;
  return Scalar(GaussQ{(1 - t * t) / d, 2 * t / d});
}

Scalar parse_scalar(const std::string& text) { return Scalar(parse_rational(text)); }

}  // namespace ambikit
