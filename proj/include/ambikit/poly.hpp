// Univariate and bivariate polynomials over dual-mode scalars.
//
// Coefficients ascend by degree and are kept trimmed; the zero polynomial
// is the empty list.  check_p is the reversal-type involution
// P-check(z) = (-1)^n P(-z), star conjugates coefficients:
// P*(z) = conj(P(conj z)).

#pragma once

#include "ambikit/scalar.hpp"

#include <complex>
#include <vector>

namespace ambikit {

struct Poly {
  std::vector<Scalar> c;

  static Poly of(std::vector<Scalar> coeffs);
  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
  const Scalar& coeff(int k) const;
  bool all_exact() const;
  Poly to_float() const;
};

Poly add(const Poly& p, const Poly& q);
Poly sub(const Poly& p, const Poly& q);
Poly mul(const Poly& p, const Poly& q);
Poly scale(const Scalar& s, const Poly& p);
Poly derivative(const Poly& p);
Poly star(const Poly& p);     // conjugate coefficients
Poly check_p(const Poly& p);  // (-1)^deg P(-z); an involution, preserves monic
std::complex<double> eval(const Poly& p, std::complex<double> z);
bool polys_equal(const Poly& p, const Poly& q, const Tol& tol);

// {P, Q}_- = P Q-check - P-check Q (antisymmetric);
// {P, Q}_+ = P Q-check + P-check Q (symmetric).
Poly bracket_minus(const Poly& p, const Poly& q);
Poly bracket_plus(const Poly& p, const Poly& q);

// c[i][j] is the coefficient of z^i w^j; rows all have equal length.
struct BiPoly {
  std::vector<std::vector<Scalar>> c;

  bool is_zero() const { return c.empty(); }
  int deg_z() const { return static_cast<int>(c.size()) - 1; }
  int deg_w() const { return c.empty() ? -1 : static_cast<int>(c.front().size()) - 1; }
  const Scalar& coeff(int i, int j) const;
};

BiPoly bipoly_mul(const BiPoly& x, const BiPoly& y);
BiPoly bipoly_negate_args(const BiPoly& x);  // (z, w) -> (-z, -w)
bool bipolys_equal(const BiPoly& x, const BiPoly& y, const Tol& tol);

}  // namespace ambikit
