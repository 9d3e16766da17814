#include "ambikit/poly.hpp"

namespace ambikit {

Poly Poly::of(std::vector<Scalar> coeffs) {
  while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
  return Poly{std::move(coeffs)};
}

const Scalar& Poly::coeff(int k) const {
  static const Scalar zero{};
  if (k < 0 || k >= static_cast<int>(c.size())) return zero;
  return c[static_cast<size_t>(k)];
}

bool Poly::all_exact() const {
  for (const auto& v : c)
    if (!v.is_exact()) return false;
  return true;
}

Poly Poly::to_float() const {
  std::vector<Scalar> out;
  out.reserve(c.size());
  for (const auto& v : c) out.emplace_back(v.to_complex());
  return Poly{std::move(out)};
}

Poly add(const Poly& p, const Poly& q) {
  std::vector<Scalar> out(std::max(p.c.size(), q.c.size()), Scalar{});
  for (size_t i = 0; i < out.size(); ++i) out[i] = p.coeff(static_cast<int>(i)) + q.coeff(static_cast<int>(i));
  return Poly::of(std::move(out));
}

Poly sub(const Poly& p, const Poly& q) {
  std::vector<Scalar> out(std::max(p.c.size(), q.c.size()), Scalar{});
  for (size_t i = 0; i < out.size(); ++i) out[i] = p.coeff(static_cast<int>(i)) - q.coeff(static_cast<int>(i));
  return Poly::of(std::move(out));
}

Poly mul(const Poly& p, const Poly& q) {
  if (p.is_zero() || q.is_zero()) return {};
  std::vector<Scalar> out(p.c.size() + q.c.size() - 1, Scalar{});
  for (size_t i = 0; i < p.c.size(); ++i) {
    if (p.c[i].is_zero()) continue;
    for (size_t j = 0; j < q.c.size(); ++j) out[i + j] += p.c[i] * q.c[j];
  }
  return Poly::of(std::move(out));
}

Poly scale(const Scalar& s, const Poly& p) {
  std::vector<Scalar> out;
  out.reserve(p.c.size());
  for (const auto& v : p.c) out.push_back(s * v);
  return Poly::of(std::move(out));
}

Poly derivative(const Poly& p) {
  if (p.c.size() <= 1) return {};
  std::vector<Scalar> out;
  out.reserve(p.c.size() - 1);
  for (size_t i = 1; i < p.c.size(); ++i) out.push_back(Scalar(static_cast<long>(i)) * p.c[i]);
  return Poly::of(std::move(out));
}

Poly star(const Poly& p) {
  std::vector<Scalar> out;
  out.reserve(p.c.size());
  for (const auto& v : p.c) out.push_back(v.conj());
  return Poly{std::move(out)};
}

Poly check_p(const Poly& p) {
  if (p.is_zero()) return {};
  int n = p.degree();
  std::vector<Scalar> out;
  out.reserve(p.c.size());
  for (int k = 0; k <= n; ++k) {
    const Scalar& v = p.c[static_cast<size_t>(k)];
    out.push_back(((n - k) % 2 == 0) ? v : -v);
  }
  return Poly{std::move(out)};
}

std::complex<double> eval(const Poly& p, std::complex<double> z) {
  std::complex<double> acc{0.0, 0.0};
  for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) acc = acc * z + it->to_complex();
  return acc;
}

bool polys_equal(const Poly& p, const Poly& q, const Tol& tol) {
  size_t n = std::max(p.c.size(), q.c.size());
  for (size_t i = 0; i < n; ++i)
    if (!values_equal(p.coeff(static_cast<int>(i)), q.coeff(static_cast<int>(i)), tol)) return false;
  return true;
}

Poly bracket_minus(const Poly& p, const Poly& q) { return sub(mul(p, check_p(q)), mul(check_p(p), q)); }
Poly bracket_plus(const Poly& p, const Poly& q) { return add(mul(p, check_p(q)), mul(check_p(p), q)); }

const Scalar& BiPoly::coeff(int i, int j) const {
  static const Scalar zero{};
  if (i < 0 || i >= static_cast<int>(c.size())) return zero;
  const auto& row = c[static_cast<size_t>(i)];
  if (j < 0 || j >= static_cast<int>(row.size())) return zero;
  return row[static_cast<size_t>(j)];
}

BiPoly bipoly_mul(const BiPoly& x, const BiPoly& y) {
  if (x.is_zero() || y.is_zero()) return {};
  int dz = x.deg_z() + y.deg_z(), dw = x.deg_w() + y.deg_w();
  BiPoly out;
  out.c.assign(static_cast<size_t>(dz) + 1, std::vector<Scalar>(static_cast<size_t>(dw) + 1, Scalar{}));
  for (int i1 = 0; i1 <= x.deg_z(); ++i1)
    for (int j1 = 0; j1 <= x.deg_w(); ++j1) {
      const Scalar& v = x.coeff(i1, j1);
      if (v.is_zero()) continue;
      for (int i2 = 0; i2 <= y.deg_z(); ++i2)
        for (int j2 = 0; j2 <= y.deg_w(); ++j2) {
          const Scalar& w = y.coeff(i2, j2);
          if (w.is_zero()) continue;
          out.c[static_cast<size_t>(i1 + i2)][static_cast<size_t>(j1 + j2)] += v * w;
        }
    }
  return out;
}

BiPoly bipoly_negate_args(const BiPoly& x) {
  BiPoly out = x;
  for (size_t i = 0; i < out.c.size(); ++i)
    for (size_t j = 0; j < out.c[i].size(); ++j)
      if ((i + j) % 2 == 1) out.c[i][j] = -out.c[i][j];
  return out;
}

bool bipolys_equal(const BiPoly& x, const BiPoly& y, const Tol& tol) {
  int dz = std::max(x.deg_z(), y.deg_z()), dw = std::max(x.deg_w(), y.deg_w());
  for (int i = 0; i <= dz; ++i)
    for (int j = 0; j <= dw; ++j)
      if (!values_equal(x.coeff(i, j), y.coeff(i, j), tol)) return false;
  return true;
}

}  // namespace ambikit
