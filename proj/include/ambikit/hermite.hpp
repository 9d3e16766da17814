// The algebraic side of partner decisions for Hermite-expanded signals.
//
// A finite Hermite expansion sum alpha_k H_k(t) e^{-t^2/2} maps under the
// Bargmann transform to the polynomial sum alpha_k 2^{k/2} Z^k, and the
// ambiguity function's squared modulus is governed by the bivariate
// polynomial A_P(z, w) = sum_m (1/m!) P^(m)(z) P*^(m)(w).  Two expansions
// are partners iff A_P(z,w) A_P(-z,-w) = A_Q(z,w) A_Q(-z,-w), a finite
// coefficient identity decided exactly for rational inputs (sqrt2 factors
// included).

#pragma once

#include "ambikit/poly.hpp"

#include <complex>
#include <vector>

namespace ambikit {

// Physicists' Hermite polynomial H_k, exact integer coefficients.
Poly hermite_poly(int k);

// Bargmann image of a Hermite expansion: sum herm[k] * 2^{k/2} Z^k.
// Exact inputs stay exact; odd k lands on the sqrt2 component.
Poly bargmann(const std::vector<Scalar>& herm);

BiPoly ambiguity_polynomial(const Poly& p);

// The quartic identity above.  Degrees must match (else false).
bool algebraic_partner_test(const Poly& p, const Poly& q, const Tol& tol = {});

// Companion-matrix roots (float).
std::vector<std::complex<double>> poly_roots(const Poly& p);

// Simple roots, and no root pair (r, -r'): distances all above tol.
bool is_generic(const Poly& p, double tol = 1e-6);

// All monic partner candidates of a monic generic P, found by flipping root
// subsets P = AB -> Q = A B-check and certified with the algebraic test at
// tolerance tol.  For generic P the result is exactly {P-check, P}.  Degree
// is capped at 12 (2^deg subsets are enumerated).  When the subleading
// coefficient vanishes the enumeration collapses to verifying {P, P-check}
// directly.
std::vector<Poly> partner_scan(const Poly& p, double tol = 1e-8);

// Closed form for the cross-ambiguity A(H_j e^{-t^2/2}, H_k e^{-t^2/2})(x, y)
// via the unified Laguerre-type polynomial.
std::complex<double> laguerre_cross(int j, int k, double x, double y);

// Partner test for two Hermite expansions given by their coefficient lists.
bool hermite_signal_partner_test(const std::vector<Scalar>& p, const std::vector<Scalar>& q,
                                 const Tol& tol = {});

}  // namespace ambikit
