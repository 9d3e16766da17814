// Partner decisions for finite sequences.
//
// Two normalized sequences are partners when their ambiguity functions have
// equal modulus everywhere.  For fixed shift k the ambiguity function is a
// trigonometric polynomial in y whose squared modulus is determined by the
// autocorrelation of the cross sequence c_j = a_j conj(a_{j-k}); equality of
// those autocorrelation lists for every k is therefore an exact, finite
// certificate.  AmbiguitySignature stores the lists for k = 0..N (negative
// shifts are determined by Hermitian symmetry).

#pragma once

#include "ambikit/signal.hpp"

#include <optional>
#include <vector>

namespace ambikit {

struct AmbiguitySignature {
  int n = 0;                             // degree of the generating sequence
  std::vector<std::vector<Scalar>> rows; // rows[k] = autocorrelation(cross_sequence(a, k)), k = 0..n
};

AmbiguitySignature signature(const Signal& a);

bool signatures_equal(const AmbiguitySignature& x, const AmbiguitySignature& y, const Tol& tol);

// Equal-modulus-everywhere decision; exact whenever both signals are exact.
bool is_partner(const Signal& a, const Signal& b, const Tol& tol = {});

// Group element of the obvious symmetries: b_j = e^{i(beta + j omega)} a_{j-l},
// with a_{-j-l} instead when reflected.  Angles in radians, reduced mod 2pi.
struct HeisenbergElement {
  double beta = 0.0;
  double omega = 0.0;
  int l = 0;
  bool reflected = false;
};

// Witness that b is a trivial partner of a.  The angle form h is derived for
// display; the anchored data reproduces b without ever evaluating an angle:
//   b_j = r0 * v^{(j - anchor)/g} * a~_j   on the common support
// where a~ is a or its reflection and g is the gcd of the support gaps
// (g = 0 marks a single-point support).  With exact inputs the reproduction
// is exact.
struct TrivialWitness {
  HeisenbergElement h;
  int anchor = 0;
  Scalar r0;
  Scalar v;
  int g = 0;

  Signal reproduce(const Signal& a) const;
};

// Decide whether b = e^{i(beta + j omega)} a_{j-l} (or the reflected form)
// for some choice of parameters.  Both orientations are tested, direct
// first.  Among valid (beta, omega) branches the lexicographically smallest
// pair is returned, angles in [0, 2pi).
std::optional<TrivialWitness> is_trivial_partner(const Signal& a, const Signal& b, const Tol& tol = {});

// Exact-capable form: phase = e^{i beta}, step = e^{i omega} as unit scalars.
Signal apply_trivial(const Scalar& phase, const Scalar& step, int l, bool reflected, const Signal& a);
// Angle form; always produces a float signal.
Signal apply_trivial(const HeisenbergElement& h, const Signal& a);

// integer exponentiation; negative powers via inverse
Scalar pow_scalar(const Scalar& z, long e);

// Unimodular multiplier c supported on a set Lambda.
struct Multiplier {
  SupportSet support;
  std::vector<Scalar> values;  // values[i] = c(support.elems[i]), all |c| = 1

  const Scalar& at(int n) const;
};

// The quadruple condition: c(n1) conj(c(n2)) = c(n3) conj(c(n4)) whenever
// n1 - n2 = n3 - n4 on the support.  Sufficient for apply_multiplier to
// produce a partner.
bool check_multiplier_condition(const Multiplier& c, const Tol& tol = {});

// b_n = c(n) a_n.  Requires support(a) contained in c's support.
Signal apply_multiplier(const Multiplier& c, const Signal& a);

// Shift-wise proportionality: does cross_sequence(a,k) = eta_k * cross_sequence(b,k)
// hold for every k with unimodular eta_k?  Returns the family {eta_k}, k = 0..N.
std::optional<std::vector<Scalar>> restricted_partner_check(const Signal& a, const Signal& b,
                                                            const Tol& tol = {});

}  // namespace ambikit
