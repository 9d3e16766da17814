// Numerical integration used by the verification oracles: Gauss-Hermite
// rules for integrals against e^{-s^2}, and adaptive Gauss-Kronrod (7-15)
// for piecewise-smooth integrands on finite intervals.

#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace ambikit {

struct GaussHermiteRule {
  std::vector<double> nodes, weights;  // integral f(s) e^{-s^2} ds ~ sum w_i f(x_i)
};

// Golub-Welsch: eigenvalues of the Jacobi matrix give the nodes.
GaussHermiteRule gauss_hermite(int n);

// Adaptive bisection with the embedded 7-point Gauss estimate as error
// control.  abs_tol is an absolute target for this interval.
std::complex<double> integrate_gk(const std::function<std::complex<double>(double)>& f, double a,
                                  double b, double abs_tol, int max_depth = 24);

// Oracle for the Hermite cross-ambiguity: direct quadrature of
// int H_j(t) e^{-t^2/2} H_k(t-x) e^{-(t-x)^2/2} e^{iyt} dt after completing
// the square, against a Gauss-Hermite rule.
std::complex<double> hermite_cross_quadrature(int j, int k, double x, double y, int nodes = 64);

// H_k(t) by the three-term recurrence
double hermite_eval(int k, double t);

}  // namespace ambikit
