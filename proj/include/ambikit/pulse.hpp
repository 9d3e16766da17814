// Pulse-type signals: u(t) = sum_j a_j chi_{[j, j+eta]}(t) with eta <= 1/2,
// optionally decorated by the continuous trivial transforms (unit phase,
// modulation, time shift, reflection).
//
// The ambiguity function factors: with k the nearest integer to x,
// A(u)(x, y) = [sum_j a_j conj(a_{j-k}) e^{ijy}] * A(chi_{[0,eta]})(x-k, y),
// and the box factor has the closed form below.  Decorations change A only
// by unit phases and the (x, y) -> (-x, -y) flip, so |A| is invariant.

#pragma once

#include "ambikit/signal.hpp"

#include <complex>
#include <iosfwd>

namespace ambikit {

struct PulseDescriptor {
  Signal a;            // normalized discrete coefficients
  Rational eta;        // pulse width, 0 < eta <= 1/2
  std::complex<double> phase{1.0, 0.0};  // |phase| = 1
  double omega = 0.0;  // modulation
  double shift = 0.0;  // time shift
  bool reflected = false;
};

void validate_pulse(const PulseDescriptor& u);

// A(chi_{[0,eta]})(x, y); zero for |x| >= eta.  Near y = 0 a two-term series
// replaces sin(ys)/y (the modulus is |sin((eta-|x|)y/2) / (y/2)|).
std::complex<double> box_ambiguity(double eta, double x, double y);

// Discrete-time factor sum_j a_j conj(a_{j-k}) e^{ijy}, evaluated in float.
std::complex<double> discrete_ambiguity_eval(const Signal& a, int k, double y);

// Closed-form ambiguity function of the decorated pulse signal.
std::complex<double> pulse_ambiguity(const PulseDescriptor& u, double x, double y);

// Compose a further trivial transform v(t) = c e^{i eps omega t} u(eps t - alpha)
// onto the descriptor (eps = -1 when reflect).  |A| is unchanged pointwise.
PulseDescriptor apply_continuous_trivial(std::complex<double> c, double omega, double alpha,
                                         bool reflect, const PulseDescriptor& u);

struct GridRange {
  double start, stop, step;
  long count() const;  // inclusive endpoints
};

// CSV rows "x,y,abs,re,im" (17 significant digits), x-major, header first.
void export_grid(const PulseDescriptor& u, const GridRange& xs, const GridRange& ys,
                 std::ostream& out);

// Independent oracle: adaptive Gauss-Kronrod on each smooth piece of
// t -> u(t) conj(u(t-x)) e^{iyt}, with the pulse endpoints as breakpoints.
std::complex<double> pulse_ambiguity_quadrature(const PulseDescriptor& u, double x, double y,
                                                double abs_tol = 1e-10);

// Pointwise evaluation of the decorated signal (half-open pulses [j, j+eta)).
std::complex<double> eval_pulse(const PulseDescriptor& u, double t);

}  // namespace ambikit
