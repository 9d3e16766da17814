#include "ambikit/hermite.hpp"

#include "ambikit/parallel.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ambikit {

Poly hermite_poly(int k) {
  if (k < 0) throw std::invalid_argument("negative Hermite index");
  Poly hk{{Scalar{1}}};
  if (k == 0) return hk;
  Poly hk1 = hk;          // H_{k-1}
  hk = Poly{{Scalar{0}, Scalar{2}}};  // H_1 = 2x
  for (int i = 1; i < k; ++i) {
    // H_{i+1} = 2x H_i - 2i H_{i-1}
    Poly shifted;
    shifted.c.assign(hk.c.size() + 1, Scalar{});
    for (size_t t = 0; t < hk.c.size(); ++t) shifted.c[t + 1] = Scalar{2} * hk.c[t];
    Poly next = sub(shifted, scale(Scalar{2 * static_cast<long>(i)}, hk1));
    hk1 = hk;
    hk = next;
  }
  return hk;
}

Poly bargmann(const std::vector<Scalar>& herm) {
  std::vector<Scalar> out;
  out.reserve(herm.size());
  Rational pow2 = 1;  // 2^{floor(k/2)}
  for (size_t k = 0; k < herm.size(); ++k) {
    Scalar factor = (k % 2 == 0) ? Scalar(pow2) : Scalar::exact_sqrt2(GaussQ{pow2, Rational(0)});
    out.push_back(factor * herm[k]);
    if (k % 2 == 1) pow2 *= 2;
  }
  return Poly::of(std::move(out));
}

BiPoly ambiguity_polynomial(const Poly& p) {
  if (p.is_zero()) return {};
  int n = p.degree();
  BiPoly out;
  out.c.assign(static_cast<size_t>(n) + 1, std::vector<Scalar>(static_cast<size_t>(n) + 1, Scalar{}));
  Poly dm = p;         // P^(m)
  Poly em = star(p);   // P*^(m) = (P^(m))*
  Rational inv_mfact = 1;
  for (int m = 0; m <= n; ++m) {
    if (m > 0) {
      dm = derivative(dm);
      em = derivative(em);
      inv_mfact /= m;
    }
    Scalar w{inv_mfact};
    for (int i = 0; i <= dm.degree(); ++i) {
      if (dm.c[static_cast<size_t>(i)].is_zero()) continue;
      Scalar left = w * dm.c[static_cast<size_t>(i)];
      for (int j = 0; j <= em.degree(); ++j) {
        if (em.c[static_cast<size_t>(j)].is_zero()) continue;
        out.c[static_cast<size_t>(i)][static_cast<size_t>(j)] += left * em.c[static_cast<size_t>(j)];
      }
    }
  }
  return out;
}

bool algebraic_partner_test(const Poly& p, const Poly& q, const Tol& tol) {
  if (p.degree() != q.degree()) return false;
  if (p.is_zero()) return true;
  BiPoly ap = ambiguity_polynomial(p);
  BiPoly aq = ambiguity_polynomial(q);
  BiPoly lhs = bipoly_mul(ap, bipoly_negate_args(ap));
  BiPoly rhs = bipoly_mul(aq, bipoly_negate_args(aq));
  return bipolys_equal(lhs, rhs, tol);
}

std::vector<std::complex<double>> poly_roots(const Poly& p) {
  int n = p.degree();
  if (n <= 0) return {};
  std::complex<double> lead = p.c.back().to_complex();
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -p.c[static_cast<size_t>(i)].to_complex() / lead;
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, /*computeEigenvectors=*/false);
  std::vector<std::complex<double>> roots(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) roots[static_cast<size_t>(i)] = solver.eigenvalues()(i);
  return roots;
}

bool is_generic(const Poly& p, double tol) {
  if (p.is_zero()) return false;
  auto roots = poly_roots(p);
  for (size_t i = 0; i < roots.size(); ++i) {
    for (size_t j = i + 1; j < roots.size(); ++j)
      if (std::abs(roots[i] - roots[j]) <= tol) return false;
    for (size_t j = i; j < roots.size(); ++j)
      if (std::abs(roots[i] + roots[j]) <= tol) return false;
  }
  return true;
}

namespace {

Poly poly_from_roots(const std::vector<std::complex<double>>& roots, unsigned long keep_mask) {
  // monic product of (Z - r_i) for kept roots and (Z + r_i) for flipped ones
  std::vector<std::complex<double>> acc{1.0};
  for (size_t i = 0; i < roots.size(); ++i) {
    std::complex<double> r = (keep_mask >> i) & 1UL ? roots[i] : -roots[i];
    std::vector<std::complex<double>> next(acc.size() + 1, {0.0, 0.0});
    for (size_t t = 0; t < acc.size(); ++t) {
      next[t + 1] += acc[t];
      next[t] -= r * acc[t];
    }
    acc = std::move(next);
  }
  std::vector<Scalar> c;
  c.reserve(acc.size());
  for (auto v : acc) c.emplace_back(v);
  return Poly{std::move(c)};
}

}  // namespace

std::vector<Poly> partner_scan(const Poly& p, double tol) {
  int n = p.degree();
  if (n < 1) throw std::invalid_argument("positive degree required");
  if (n > 12) throw std::invalid_argument("degree cap exceeded (12)");
  const Scalar& lead = p.c.back();
  bool monic = lead.is_exact() ? lead.exact() == Exact(GaussQ{Rational(1), Rational(0)})
                               : std::abs(lead.to_complex() - 1.0) <= 1e-9;
  if (!monic) throw std::invalid_argument("monic polynomial required");
  if (!is_generic(p)) throw std::invalid_argument("hypothesis violated: polynomial is not generic");

  Tol cert{tol};

  // subleading coefficient zero collapses the family to {P, P-check}
  const Scalar& p1 = p.coeff(n - 1);
  bool p1_zero = p1.is_exact() ? p1.is_zero() : std::abs(p1.to_complex()) <= tol;
  if (p1_zero) {
    std::vector<Poly> out;
    Poly pc = check_p(p);
    if (algebraic_partner_test(p, pc, cert)) out.push_back(pc);
    if (algebraic_partner_test(p, p, cert)) out.push_back(p);
    return out;
  }

  auto roots = poly_roots(p);
  Poly pf = p.to_float();
  BiPoly apf = ambiguity_polynomial(pf);
  BiPoly lhs = bipoly_mul(apf, bipoly_negate_args(apf));

  long total = 1L << n;
  std::vector<char> keep(static_cast<size_t>(total), 0);
  std::vector<Poly> candidates(static_cast<size_t>(total));
  parallel_chunks(total, [&](long lo, long hi) {
    for (long mask = lo; mask < hi; ++mask) {
      Poly q = poly_from_roots(roots, static_cast<unsigned long>(mask));
      BiPoly aq = ambiguity_polynomial(q);
      BiPoly rhs = bipoly_mul(aq, bipoly_negate_args(aq));
      if (bipolys_equal(lhs, rhs, cert)) {
        keep[static_cast<size_t>(mask)] = 1;
        candidates[static_cast<size_t>(mask)] = std::move(q);
      }
    }
  });

  std::vector<Poly> out;
  for (long mask = 0; mask < total; ++mask) {
    if (!keep[static_cast<size_t>(mask)]) continue;
    Poly& q = candidates[static_cast<size_t>(mask)];
    bool duplicate = false;
    for (const auto& seen : out)
      if (polys_equal(seen, q, cert)) {
        duplicate = true;
        break;
      }
    if (!duplicate) out.push_back(std::move(q));
  }
  return out;
}

std::complex<double> laguerre_cross(int j, int k, double x, double y) {
  if (j < 0 || k < 0) throw std::invalid_argument("negative Hermite index");
  std::complex<double> z{x, y};
  std::complex<double> zbar = std::conj(z);
  double fact_j = std::tgamma(j + 1.0), fact_k = std::tgamma(k + 1.0);
  std::complex<double> sum{0.0, 0.0};
  for (int m = 0; m <= std::min(j, k); ++m) {
    double coef = std::pow(2.0, m) /
                  (std::tgamma(m + 1.0) * std::tgamma(j - m + 1.0) * std::tgamma(k - m + 1.0));
    sum += coef * std::pow(z, j - m) * std::pow(-zbar, k - m);
  }
  double r2 = x * x + y * y;
  return std::sqrt(std::numbers::pi) * fact_j * fact_k * sum * std::exp(-r2 / 4.0) *
         std::exp(std::complex<double>{0.0, x * y / 2.0});
}

bool hermite_signal_partner_test(const std::vector<Scalar>& p, const std::vector<Scalar>& q,
                                 const Tol& tol) {
  return algebraic_partner_test(bargmann(p), bargmann(q), tol);
}

}  // namespace ambikit
