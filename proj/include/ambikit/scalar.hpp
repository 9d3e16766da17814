// Dual-mode scalars: exact elements of Q(i, sqrt2), or complex<double>.
//
// Every partner decision in this library is made in exact mode when the
// inputs allow it.  The exact carrier is the field Q(i)[sqrt2]: a value is
// (a + b*sqrt2) with Gaussian-rational components a, b.  This is closed
// under +, -, *, /, conjugation, and contains every coefficient produced
// by the Bargmann transform of rational Hermite expansions (powers 2^{k/2}
// land on the sqrt2 component for odd k).
//
// Float mode is plain complex<double>.  Mixing an exact and a float operand
// demotes the result to float.  Equality is mode-aware and always explicit:
// use values_equal(x, y, tol), never operator== on floats.

#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ambikit {

using Rational = boost::multiprecision::mpq_rational;

// Relative comparison context for float mode.  |x - y| <= rel*max(1,|x|,|y|).
// Passed explicitly to every comparison that may run in float mode.
struct Tol {
  double rel = 1e-9;
};

double to_double(const Rational& q);

// Parse "p/q", "-3", "1.25", "2e-3" into an exact rational.
// Throws std::invalid_argument on anything else.
Rational parse_rational(const std::string& text);

// Render without loss; integers come out bare, otherwise "p/q".
std::string rational_to_string(const Rational& q);

// Gaussian rational, an element of Q(i).
struct GaussQ {
  Rational re, im;

  GaussQ() : re(0), im(0) {}
  GaussQ(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re == 0 && im == 0; }
  GaussQ conj() const { return {re, -im}; }

  friend GaussQ operator+(const GaussQ& x, const GaussQ& y) { return {x.re + y.re, x.im + y.im}; }
  friend GaussQ operator-(const GaussQ& x, const GaussQ& y) { return {x.re - y.re, x.im - y.im}; }
  friend GaussQ operator-(const GaussQ& x) { return {-x.re, -x.im}; }
  friend GaussQ operator*(const GaussQ& x, const GaussQ& y) {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
  }
  friend bool operator==(const GaussQ& x, const GaussQ& y) { return x.re == y.re && x.im == y.im; }

  // squared modulus, a nonnegative rational
  Rational norm() const { return re * re + im * im; }

  GaussQ inverse() const;
};

// Exact scalar: r + s*sqrt2 with r, s in Q(i).
struct Exact {
  GaussQ r, s;

  Exact() = default;
  explicit Exact(GaussQ rational_part) : r(std::move(rational_part)) {}
  Exact(GaussQ rational_part, GaussQ sqrt2_part) : r(std::move(rational_part)), s(std::move(sqrt2_part)) {}

  bool is_zero() const { return r.is_zero() && s.is_zero(); }
  Exact conj() const { return {r.conj(), s.conj()}; }

  friend Exact operator+(const Exact& x, const Exact& y) { return {x.r + y.r, x.s + y.s}; }
  friend Exact operator-(const Exact& x, const Exact& y) { return {x.r - y.r, x.s - y.s}; }
  friend Exact operator-(const Exact& x) { return {-x.r, -x.s}; }
  friend Exact operator*(const Exact& x, const Exact& y) {
    GaussQ two{Rational(2), Rational(0)};
    return {x.r * y.r + two * (x.s * y.s), x.r * y.s + x.s * y.r};
  }
  friend bool operator==(const Exact& x, const Exact& y) { return x.r == y.r && x.s == y.s; }

  Exact inverse() const;
  std::complex<double> to_complex() const;
};

class Scalar {
 public:
  Scalar() : exact_(true) {}
  Scalar(int v) : exact_(true), e_(GaussQ{Rational(v), Rational(0)}) {}
  Scalar(long v) : exact_(true), e_(GaussQ{Rational(v), Rational(0)}) {}
  Scalar(Rational v) : exact_(true), e_(GaussQ{std::move(v), Rational(0)}) {}
  Scalar(GaussQ v) : exact_(true), e_(std::move(v)) {}
  Scalar(Exact v) : exact_(true), e_(std::move(v)) {}
  Scalar(std::complex<double> v) : exact_(false), f_(v) {}

  static Scalar exact_rational(const Rational& re, const Rational& im) {
    return Scalar(GaussQ{re, im});
  }
  // q * sqrt2
  static Scalar exact_sqrt2(const GaussQ& q) { return Scalar(Exact{GaussQ{}, q}); }
  static Scalar from_double(double re, double im = 0.0) { return Scalar(std::complex<double>{re, im}); }
  static Scalar i() { return Scalar(GaussQ{Rational(0), Rational(1)}); }

  bool is_exact() const { return exact_; }
  const Exact& exact() const {
    if (!exact_) throw std::logic_error("scalar is not exact");
    return e_;
  }
  std::complex<double> to_complex() const { return exact_ ? e_.to_complex() : f_; }

  bool is_zero() const { return exact_ ? e_.is_zero() : (f_.real() == 0.0 && f_.imag() == 0.0); }

  Scalar conj() const { return exact_ ? Scalar(e_.conj()) : Scalar(std::conj(f_)); }
  Scalar inverse() const;
  // z * conj(z); exact mode keeps it exact (components are real rationals)
  Scalar norm_sq() const { return *this * this->conj(); }

  friend Scalar operator+(const Scalar& x, const Scalar& y) {
    if (x.exact_ && y.exact_) return Scalar(x.e_ + y.e_);
    return Scalar(x.to_complex() + y.to_complex());
  }
  friend Scalar operator-(const Scalar& x, const Scalar& y) {
    if (x.exact_ && y.exact_) return Scalar(x.e_ - y.e_);
    return Scalar(x.to_complex() - y.to_complex());
  }
  friend Scalar operator-(const Scalar& x) { return x.exact_ ? Scalar(-x.e_) : Scalar(-x.f_); }
  friend Scalar operator*(const Scalar& x, const Scalar& y) {
    if (x.exact_ && y.exact_) return Scalar(x.e_ * y.e_);
    return Scalar(x.to_complex() * y.to_complex());
  }
  friend Scalar operator/(const Scalar& x, const Scalar& y) { return x * y.inverse(); }

  Scalar& operator+=(const Scalar& y) { return *this = *this + y; }
  Scalar& operator-=(const Scalar& y) { return *this = *this - y; }
  Scalar& operator*=(const Scalar& y) { return *this = *this * y; }

  // Exact-only structural equality.  Throws if either side is float;
  // tolerance comparisons must go through values_equal.
  friend bool operator==(const Scalar& x, const Scalar& y) {
    if (!x.exact_ || !y.exact_) throw std::logic_error("operator== requires exact scalars");
    return x.e_ == y.e_;
  }

  // Human-readable exact rendering: "3", "1/2", "sqrt2*1/2", "1/2+sqrt2*1/3", ...
  std::string to_string() const;

 private:
  bool exact_;
  Exact e_;
  std::complex<double> f_{0.0, 0.0};
};

inline bool approx_equal(std::complex<double> x, std::complex<double> y, const Tol& tol) {
  double scale = std::max({1.0, std::abs(x), std::abs(y)});
  return std::abs(x - y) <= tol.rel * scale;
}

// Mode-aware equality: exact when both operands are exact, tolerance otherwise.
inline bool values_equal(const Scalar& x, const Scalar& y, const Tol& tol) {
  if (x.is_exact() && y.is_exact()) return x.exact() == y.exact();
  return approx_equal(x.to_complex(), y.to_complex(), tol);
}

// |z| == 1, exactly or within tol
bool is_unimodular(const Scalar& z, const Tol& tol);

// Exact unit scalar from a rational point on the circle:
// t -> ((1-t^2) + 2it) / (1+t^2).
Scalar circle_point(const Rational& t);

Scalar parse_scalar(const std::string& text);

}  // namespace ambikit
