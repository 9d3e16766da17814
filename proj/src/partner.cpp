#include "ambikit/partner.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

namespace ambikit {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

double wrap_angle(double t) {
  t = std::fmod(t, two_pi);
  if (t < 0) t += two_pi;
  // collapse values within one ulp-ish of 2pi onto 0
  if (two_pi - t < 1e-12) t = 0.0;
  return t;
}

}  // namespace

AmbiguitySignature signature(const Signal& a) {
  if (!a.is_normalized()) throw std::invalid_argument("signal not normalized");
  AmbiguitySignature sig;
  sig.n = a.degree();
  sig.rows.reserve(static_cast<size_t>(sig.n) + 1);
  for (int k = 0; k <= sig.n; ++k) sig.rows.push_back(autocorrelation(cross_sequence(a, k)));
  return sig;
}

bool signatures_equal(const AmbiguitySignature& x, const AmbiguitySignature& y, const Tol& tol) {
  if (x.n != y.n) return false;
  for (size_t k = 0; k < x.rows.size(); ++k) {
    if (x.rows[k].size() != y.rows[k].size()) return false;
    for (size_t i = 0; i < x.rows[k].size(); ++i)
      if (!values_equal(x.rows[k][i], y.rows[k][i], tol)) return false;
  }
  return true;
}

bool is_partner(const Signal& a, const Signal& b, const Tol& tol) {
  if (!a.is_normalized() || !b.is_normalized()) throw std::invalid_argument("signal not normalized");
  if (a.degree() != b.degree()) return false;
  return signatures_equal(signature(a), signature(b), tol);
}

Scalar pow_scalar(const Scalar& z, long e) {
  if (e < 0) return pow_scalar(z.inverse(), -e);
  Scalar acc{1};
  Scalar base = z;
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

Signal TrivialWitness::reproduce(const Signal& a) const {
  int n = a.degree();
  Signal b;
  b.offset = 0;
  b.coeffs.assign(static_cast<size_t>(n) + 1, Scalar{});
  for (int j = 0; j <= n; ++j) {
    const Scalar& src = h.reflected ? a.coeffs[static_cast<size_t>(n - j)] : a.coeffs[static_cast<size_t>(j)];
    if (src.is_zero()) continue;
    Scalar factor = (g == 0) ? r0 : r0 * pow_scalar(v, (j - anchor) / g);
    b.coeffs[static_cast<size_t>(j)] = factor * src;
  }
  return b;
}

namespace {

// extended gcd: returns g and writes x, y with x*a + y*b = g
long ext_gcd(long a, long b, long& x, long& y) {
  if (b == 0) {
    x = 1;
    y = 0;
    return a;
  }
  long x1, y1;
  long g = ext_gcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

std::optional<TrivialWitness> match_orientation(const Signal& a, const Signal& b, bool reflected,
                                                const Tol& tol) {
  int n = a.degree();
  // target[j] = a_j (direct) or a_{n-j} (reflected); b_j must be a unit multiple
  std::vector<int> supp;
  std::vector<Scalar> ratio;
  for (int j = 0; j <= n; ++j) {
    const Scalar& bj = b.coeffs[static_cast<size_t>(j)];
    const Scalar& aj = a.coeffs[static_cast<size_t>(reflected ? n - j : j)];
    if (bj.is_zero() != aj.is_zero()) return std::nullopt;
    if (bj.is_zero()) continue;
    Scalar r = bj / aj;
    if (!is_unimodular(r, tol)) return std::nullopt;
    supp.push_back(j);
    ratio.push_back(r);
  }
  // normalized signals always hit 0 and n, so supp is nonempty
  int j0 = supp.front();
  const Scalar& r0 = ratio.front();

  TrivialWitness w;
  w.h.l = reflected ? -n : 0;
  w.h.reflected = reflected;
  w.anchor = j0;
  w.r0 = r0;

  if (supp.size() == 1) {
    w.g = 0;
    w.v = Scalar{1};
    w.h.omega = 0.0;
    w.h.beta = wrap_angle(std::arg(r0.to_complex()));
    return w;
  }

  // The affine-argument condition, decided multiplicatively.  With
  // rho_j = r_j / r_{j0} and d_j = j - j0, the condition "arg r_j is affine
  // in j" is equivalent to rho_j = v^{d_j/g} for all j, where g = gcd(d_j)
  // and v is the Bezout combination prod rho_j^{c_j} (so v = e^{i g omega}
  // for any admissible omega).  This keeps the decision exact in exact mode.
  std::vector<Scalar> rho;
  std::vector<long> d;
  for (size_t t = 1; t < supp.size(); ++t) {
    rho.push_back(ratio[t] / r0);
    d.push_back(supp[t] - j0);
  }
  long g = d[0];
  std::vector<long> coef(d.size(), 0);
  coef[0] = 1;
  for (size_t t = 1; t < d.size(); ++t) {
    long x, y;
    long g2 = ext_gcd(g, d[t], x, y);
    for (size_t u = 0; u < t; ++u) coef[u] *= x;
    coef[t] = y;
    g = g2;
  }
  Scalar v{1};
  for (size_t t = 0; t < d.size(); ++t) v *= pow_scalar(rho[t], coef[t]);
  for (size_t t = 0; t < d.size(); ++t)
    if (!values_equal(rho[t], pow_scalar(v, d[t] / g), tol)) return std::nullopt;

  w.g = static_cast<int>(g);
  w.v = v;

  // Valid step angles are the g branches (arg v + 2 pi t)/g; every branch
  // reproduces b on the support, pick the lexicographically smallest (beta, omega).
  double theta_v = wrap_angle(std::arg(v.to_complex()));
  double arg_r0 = std::arg(r0.to_complex());
  double best_beta = 0.0, best_omega = 0.0;
  bool have = false;
  for (long t = 0; t < g; ++t) {
    double omega = wrap_angle((theta_v + two_pi * static_cast<double>(t)) / static_cast<double>(g));
    double beta = wrap_angle(arg_r0 - j0 * omega);
    if (!have || beta < best_beta - 1e-15 ||
        (std::abs(beta - best_beta) <= 1e-15 && omega < best_omega)) {
      best_beta = beta;
      best_omega = omega;
      have = true;
    }
  }
  w.h.beta = best_beta;
  w.h.omega = best_omega;
  return w;
}

}  // namespace

std::optional<TrivialWitness> is_trivial_partner(const Signal& a, const Signal& b, const Tol& tol) {
  if (!a.is_normalized() || !b.is_normalized()) throw std::invalid_argument("signal not normalized");
  if (a.degree() != b.degree()) return std::nullopt;
  if (auto w = match_orientation(a, b, false, tol)) return w;
  return match_orientation(a, b, true, tol);
}

Signal apply_trivial(const Scalar& phase, const Scalar& step, int l, bool reflected, const Signal& a) {
  if (!a.is_normalized()) throw std::invalid_argument("signal not normalized");
  Tol unit_tol;
  if (!is_unimodular(phase, unit_tol) || !is_unimodular(step, unit_tol))
    throw std::invalid_argument("phase factors must be unimodular");
  int n = a.degree();
  Signal b;
  if (!reflected) {
    // b_j = phase step^j a_{j-l}, support l..n+l
    b.offset = l;
    b.coeffs.reserve(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i)
      b.coeffs.push_back(a.coeffs[static_cast<size_t>(i)].is_zero()
                             ? Scalar{}
                             : phase * pow_scalar(step, i + l) * a.coeffs[static_cast<size_t>(i)]);
  } else {
    // b_j = phase step^j a_{-j-l}, support -n-l..-l
    b.offset = -n - l;
    b.coeffs.reserve(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
      int j = -n - l + i;
      const Scalar& src = a.coeffs[static_cast<size_t>(n - i)];
      b.coeffs.push_back(src.is_zero() ? Scalar{} : phase * pow_scalar(step, j) * src);
    }
  }
  return normalize(b).signal;
}

Signal apply_trivial(const HeisenbergElement& h, const Signal& a) {
  Scalar phase{std::polar(1.0, h.beta)};
  Scalar step{std::polar(1.0, h.omega)};
  return apply_trivial(phase, step, h.l, h.reflected, a);
}

const Scalar& Multiplier::at(int n) const {
  auto it = std::lower_bound(support.elems.begin(), support.elems.end(), n);
  if (it == support.elems.end() || *it != n) throw std::out_of_range("index outside multiplier support");
  return values[static_cast<size_t>(it - support.elems.begin())];
}

bool check_multiplier_condition(const Multiplier& c, const Tol& tol) {
  int m = c.support.size();
  if (m > 32) throw std::invalid_argument("multiplier support too large (cap 32)");
  if (static_cast<int>(c.values.size()) != m) throw std::invalid_argument("multiplier value count mismatch");
  for (const auto& v : c.values)
    if (!is_unimodular(v, tol)) throw std::invalid_argument("multiplier values must be unimodular");

  // group ordered pairs by difference; all products c(n1) conj(c(n2)) within
  // a difference class must agree
  std::map<int, Scalar> first_product;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      int diff = c.support.elems[static_cast<size_t>(i)] - c.support.elems[static_cast<size_t>(j)];
      Scalar prod = c.values[static_cast<size_t>(i)] * c.values[static_cast<size_t>(j)].conj();
      auto [it, inserted] = first_product.try_emplace(diff, prod);
      if (!inserted && !values_equal(prod, it->second, tol)) return false;
    }
  }
  return true;
}

Signal apply_multiplier(const Multiplier& c, const Signal& a) {
  if (!a.is_normalized()) throw std::invalid_argument("signal not normalized");
  SupportSet sa = support(a);
  for (int n : sa.elems)
    if (!c.support.contains(n)) throw std::invalid_argument("signal support not contained in multiplier support");
  Signal b = a;
  for (size_t i = 0; i < b.coeffs.size(); ++i) {
    if (b.coeffs[i].is_zero()) continue;
    b.coeffs[i] = c.at(static_cast<int>(i)) * b.coeffs[i];
  }
  return b;
}

std::optional<std::vector<Scalar>> restricted_partner_check(const Signal& a, const Signal& b,
                                                            const Tol& tol) {
  if (!a.is_normalized() || !b.is_normalized()) throw std::invalid_argument("signal not normalized");
  if (a.degree() != b.degree()) return std::nullopt;
  int n = a.degree();
  std::vector<Scalar> eta;
  eta.reserve(static_cast<size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    auto la = cross_sequence(a, k);
    auto lb = cross_sequence(b, k);
    size_t j = 0;
    while (j < la.size() && la[j].is_zero() && lb[j].is_zero()) ++j;
    if (j == la.size()) {
      eta.emplace_back(1);  // both rows vanish; any unit works
      continue;
    }
    if (la[j].is_zero() || lb[j].is_zero()) return std::nullopt;
    Scalar e = la[j] / lb[j];
    if (!is_unimodular(e, tol)) return std::nullopt;
    for (size_t t = j; t < la.size(); ++t)
      if (!values_equal(la[t], e * lb[t], tol)) return std::nullopt;
    eta.push_back(e);
  }
  return eta;
}

}  // namespace ambikit
