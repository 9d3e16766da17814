#include "ambikit/pulse.hpp"

#include "ambikit/parallel.hpp"
#include "ambikit/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace ambikit {

namespace {

using Cx = std::complex<double>;

double eta_value(const PulseDescriptor& u) { return to_double(u.eta); }

}  // namespace

void validate_pulse(const PulseDescriptor& u) {
  if (!u.a.is_normalized()) throw std::invalid_argument("signal not normalized");
  if (u.eta <= 0 || u.eta > Rational(1, 2)) throw std::invalid_argument("eta must lie in (0, 1/2]");
  if (std::abs(std::abs(u.phase) - 1.0) > 1e-9) throw std::invalid_argument("phase must be unimodular");
}

std::complex<double> box_ambiguity(double eta, double x, double y) {
  if (!(eta > 0.0)) throw std::invalid_argument("eta must be positive");
  double ax = std::abs(x);
  if (ax >= eta) return {0.0, 0.0};
  double lo = std::max(0.0, x), hi = std::min(eta, eta + x);
  double mid = 0.5 * (lo + hi), s = 0.5 * (eta - ax);
  double modulus;
  if (std::abs(y) < 1e-4) {
    double u = y * s;
    modulus = 2.0 * s * (1.0 - u * u / 6.0 + u * u * u * u / 120.0);
  } else {
    modulus = 2.0 * std::sin(y * s) / y;
  }
  return modulus * std::exp(Cx{0.0, y * mid});
}

std::complex<double> discrete_ambiguity_eval(const Signal& a, int k, double y) {
  if (!a.is_normalized()) throw std::invalid_argument("signal not normalized");
  int n = a.degree();
  if (std::abs(k) > n) return {0.0, 0.0};
  Cx acc{0.0, 0.0};
  for (int j = 0; j <= n; ++j) {
    int jm = j - k;
    if (jm < 0 || jm > n) continue;
    Cx term = a.coeffs[static_cast<size_t>(j)].to_complex() *
              std::conj(a.coeffs[static_cast<size_t>(jm)].to_complex());
    if (term == Cx{0.0, 0.0}) continue;
    acc += term * std::exp(Cx{0.0, y * j});
  }
  return acc;
}

namespace {

Cx undecorated_ambiguity(const PulseDescriptor& u, double x, double y) {
  // pulses are eta-wide on unit spacing, so at most one integer shift k
  // contributes at a given x: the nearest one
  double eta = eta_value(u);
  int k = static_cast<int>(std::floor(x + 0.5));
  Cx box = box_ambiguity(eta, x - k, y);
  if (box == Cx{0.0, 0.0}) return box;
  return discrete_ambiguity_eval(u.a, k, y) * box;
}

}  // namespace

std::complex<double> pulse_ambiguity(const PulseDescriptor& u, double x, double y) {
  validate_pulse(u);
  if (!u.reflected) {
    // v = c e^{i omega t} u0(t - shift):  A(v)(x,y) = e^{i omega x} e^{i y shift} A(u0)(x,y)
    return std::exp(Cx{0.0, u.omega * x + y * u.shift}) * undecorated_ambiguity(u, x, y);
  }
  // v = c e^{-i omega t} u0(-t - shift): A(v)(x,y) = e^{-i omega x} e^{-i y shift} A(u0)(-x,-y)
  return std::exp(Cx{0.0, -u.omega * x - y * u.shift}) * undecorated_ambiguity(u, -x, -y);
}

PulseDescriptor apply_continuous_trivial(std::complex<double> c, double omega, double alpha,
                                         bool reflect, const PulseDescriptor& u) {
  validate_pulse(u);
  if (std::abs(std::abs(c) - 1.0) > 1e-9) throw std::invalid_argument("phase must be unimodular");
  double eps1 = u.reflected ? -1.0 : 1.0;
  PulseDescriptor out = u;
  out.reflected = (u.reflected != reflect);
  out.omega = u.omega + eps1 * omega;
  out.shift = u.shift + eps1 * alpha;
  out.phase = u.phase * c * std::exp(Cx{0.0, -eps1 * u.omega * alpha});
  return out;
}

long GridRange::count() const {
  if (!(step > 0.0) || stop < start) throw std::invalid_argument("empty grid");
  return static_cast<long>(std::floor((stop - start) / step + 1e-9)) + 1;
}

void export_grid(const PulseDescriptor& u, const GridRange& xs, const GridRange& ys,
                 std::ostream& out) {
  validate_pulse(u);
  long nx = xs.count(), ny = ys.count();
  std::vector<Cx> values(static_cast<size_t>(nx * ny));
  parallel_chunks(nx, [&](long lo, long hi) {
    for (long ix = lo; ix < hi; ++ix) {
      double x = xs.start + xs.step * static_cast<double>(ix);
      for (long iy = 0; iy < ny; ++iy) {
        double y = ys.start + ys.step * static_cast<double>(iy);
        values[static_cast<size_t>(ix * ny + iy)] = pulse_ambiguity(u, x, y);
      }
    }
  });
  out << "x,y,abs,re,im\n";
  char line[192];
  for (long ix = 0; ix < nx; ++ix) {
    double x = xs.start + xs.step * static_cast<double>(ix);
    for (long iy = 0; iy < ny; ++iy) {
      double y = ys.start + ys.step * static_cast<double>(iy);
      Cx v = values[static_cast<size_t>(ix * ny + iy)];
      std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g,%.17g,%.17g\n", x, y, std::abs(v),
                    v.real(), v.imag());
      out << line;
    }
  }
}

std::complex<double> eval_pulse(const PulseDescriptor& u, double t) {
  double eps = u.reflected ? -1.0 : 1.0;
  double s = eps * t - u.shift;
  double j = std::floor(s);
  int n = u.a.degree();
  if (j < 0 || j > n || s - j >= eta_value(u)) return {0.0, 0.0};
  Cx base = u.a.coeffs[static_cast<size_t>(j)].to_complex();
  if (base == Cx{0.0, 0.0}) return base;
  return u.phase * std::exp(Cx{0.0, eps * u.omega * t}) * base;
}

std::complex<double> pulse_ambiguity_quadrature(const PulseDescriptor& u, double x, double y,
                                                double abs_tol) {
  validate_pulse(u);
  double eta = eta_value(u);
  double eps = u.reflected ? -1.0 : 1.0;
  int n = u.a.degree();

  // v(t) is supported on the images of [j, j+eta]; collect both families of
  // endpoints (for v and its x-translate) as breakpoints
  std::vector<double> cuts;
  for (int j = 0; j <= n + 1; ++j) {
    for (double edge : {static_cast<double>(j), j + eta}) {
      double t = eps * (edge + u.shift);
      cuts.push_back(t);
      cuts.push_back(t + x);
    }
  }
  std::sort(cuts.begin(), cuts.end());
  auto f = [&](double t) { return eval_pulse(u, t) * std::conj(eval_pulse(u, t - x)) * std::exp(Cx{0.0, y * t}); };
  Cx acc{0.0, 0.0};
  double piece_tol = abs_tol / static_cast<double>(cuts.size());
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    double lo = cuts[i], hi = cuts[i + 1];
    if (hi - lo < 1e-14) continue;
    acc += integrate_gk(f, lo, hi, piece_tol);
  }
  return acc;
}

}  // namespace ambikit
