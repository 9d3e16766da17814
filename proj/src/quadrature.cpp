#include "ambikit/quadrature.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ambikit {

GaussHermiteRule gauss_hermite(int n) {
  if (n < 1) throw std::invalid_argument("need at least one node");
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) {
    double b = std::sqrt(i / 2.0);
    jacobi(i, i - 1) = b;
    jacobi(i - 1, i) = b;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi);
  GaussHermiteRule rule;
  rule.nodes.resize(static_cast<size_t>(n));
  rule.weights.resize(static_cast<size_t>(n));
  double mu0 = std::sqrt(std::numbers::pi);
  for (int i = 0; i < n; ++i) {
    rule.nodes[static_cast<size_t>(i)] = solver.eigenvalues()(i);
    double v = solver.eigenvectors()(0, i);
    rule.weights[static_cast<size_t>(i)] = mu0 * v * v;
  }
  return rule;
}

namespace {

// 15-point Kronrod extension of 7-point Gauss on [-1, 1]
constexpr double xgk[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691, 0.7415311855993944,
    0.5860872354676911, 0.4058451513773972, 0.2077849550078985, 0.0};
constexpr double wgk[8] = {
    0.02293532201052922, 0.06309209262997855, 0.1047900103222502, 0.1406532597155259,
    0.1690047266392679, 0.1903505780647854, 0.2044329400752989, 0.2094821410847278};
constexpr double wg[4] = {
    0.1294849661688697, 0.2797053914892767, 0.3818300505051189, 0.4179591836734694};

struct GkEstimate {
  std::complex<double> kronrod;
  double err;
};

GkEstimate gk15(const std::function<std::complex<double>(double)>& f, double a, double b) {
  double c = 0.5 * (a + b), h = 0.5 * (b - a);
  std::complex<double> fc = f(c);
  std::complex<double> kr = wgk[7] * fc;
  std::complex<double> gs = wg[3] * fc;
  for (int i = 0; i < 7; ++i) {
    std::complex<double> lo = f(c - h * xgk[i]), hi = f(c + h * xgk[i]);
    kr += wgk[i] * (lo + hi);
    if (i % 2 == 1) gs += wg[i / 2] * (lo + hi);
  }
  kr *= h;
  gs *= h;
  return {kr, std::abs(kr - gs)};
}

std::complex<double> adapt(const std::function<std::complex<double>(double)>& f, double a, double b,
                           double abs_tol, int depth) {
  GkEstimate e = gk15(f, a, b);
  if (e.err <= abs_tol || depth <= 0) return e.kronrod;
  double m = 0.5 * (a + b);
  return adapt(f, a, m, abs_tol / 2, depth - 1) + adapt(f, m, b, abs_tol / 2, depth - 1);
}

}  // namespace

std::complex<double> integrate_gk(const std::function<std::complex<double>(double)>& f, double a,
                                  double b, double abs_tol, int max_depth) {
  if (!(b > a)) return {0.0, 0.0};
  return adapt(f, a, b, abs_tol, max_depth);
}

double hermite_eval(int k, double t) {
  double h0 = 1.0;
  if (k == 0) return h0;
  double h1 = 2.0 * t;
  for (int i = 1; i < k; ++i) {
    double h2 = 2.0 * t * h1 - 2.0 * i * h0;
    h0 = h1;
    h1 = h2;
  }
  return h1;
}

std::complex<double> hermite_cross_quadrature(int j, int k, double x, double y, int nodes) {
  // t = s + x/2 completes the square: e^{-t^2/2 - (t-x)^2/2} = e^{-s^2} e^{-x^2/4}
  GaussHermiteRule rule = gauss_hermite(nodes);
  std::complex<double> acc{0.0, 0.0};
  for (size_t i = 0; i < rule.nodes.size(); ++i) {
    double s = rule.nodes[i];
    double val = hermite_eval(j, s + x / 2.0) * hermite_eval(k, s - x / 2.0);
    acc += rule.weights[i] * val * std::exp(std::complex<double>{0.0, y * (s + x / 2.0)});
  }
  return acc * std::exp(-x * x / 4.0);
}

}  // namespace ambikit
