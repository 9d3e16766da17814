#include "ambikit/kmatrix.hpp"

#include <stdexcept>

namespace ambikit {

void SparseMatrix::set(long r, long c, Scalar v) {
  if (r < 0 || r >= rows || c < 0 || c >= cols) throw std::out_of_range("sparse index out of range");
  if (v.is_zero()) return;
  at[{r, c}] = std::move(v);
}

SparseMatrix adjoint(const SparseMatrix& m) {
  SparseMatrix out;
  out.rows = m.cols;
  out.cols = m.rows;
  for (const auto& [rc, v] : m.at) out.at[{rc.second, rc.first}] = v.conj();
  return out;
}

SparseMatrix multiply(const SparseMatrix& x, const SparseMatrix& y) {
  if (x.cols != y.rows) throw std::invalid_argument("dimension mismatch");
  SparseMatrix out;
  out.rows = x.rows;
  out.cols = y.cols;
  // bucket y's entries by row for the inner join
  std::map<long, std::vector<std::pair<long, const Scalar*>>> yrow;
  for (const auto& [rc, v] : y.at) yrow[rc.first].emplace_back(rc.second, &v);
  for (const auto& [rc, xv] : x.at) {
    auto it = yrow.find(rc.second);
    if (it == yrow.end()) continue;
    for (const auto& [c, yv] : it->second) {
      auto key = std::make_pair(rc.first, c);
      auto found = out.at.find(key);
      if (found == out.at.end())
        out.at.emplace(key, xv * (*yv));
      else
        found->second += xv * (*yv);
    }
  }
  // exact cancellations leave explicit zeros behind; drop them
  for (auto it = out.at.begin(); it != out.at.end();)
    it = it->second.is_zero() ? out.at.erase(it) : std::next(it);
  return out;
}

SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b) {
  SparseMatrix out;
  out.rows = a.rows * b.rows;
  out.cols = a.cols * b.cols;
  for (const auto& [rcb, vb] : b.at)
    for (const auto& [rca, va] : a.at)
      out.at[{rcb.first * a.rows + rca.first, rcb.second * a.cols + rca.second}] = va * vb;
  return out;
}

bool matrices_equal(const SparseMatrix& x, const SparseMatrix& y, const Tol& tol) {
  if (x.rows != y.rows || x.cols != y.cols) return false;
  // union of keys; missing entries are zero
  auto check = [&](const SparseMatrix& p, const SparseMatrix& q) {
    for (const auto& [rc, v] : p.at) {
      auto it = q.at.find(rc);
      Scalar other = (it == q.at.end()) ? Scalar{} : it->second;
      if (!values_equal(v, other, tol)) return false;
    }
    return true;
  };
  return check(x, y) && check(y, x);
}

AmbiguityMatrix build_K(const Signal& a) {
  if (!a.is_normalized()) throw std::invalid_argument("signal not normalized");
  AmbiguityMatrix k;
  k.n = a.degree();
  for (int m = 0; m <= k.n; ++m) {
    if (a.coeffs[static_cast<size_t>(m)].is_zero()) continue;
    for (int l = 0; l <= k.n; ++l) {
      if (a.coeffs[static_cast<size_t>(l)].is_zero()) continue;
      k.entries[{m, l}] = a.coeffs[static_cast<size_t>(m)] * a.coeffs[static_cast<size_t>(l)];
    }
  }
  return k;
}

SparseMatrix to_sparse(const AmbiguityMatrix& k) {
  SparseMatrix out;
  out.rows = out.cols = 2L * k.n + 1;
  for (const auto& [ml, v] : k.entries) out.at[{static_cast<long>(ml.second) - ml.first + k.n, static_cast<long>(ml.second) + ml.first}] = v;
  return out;
}

SparseMatrix gram(const AmbiguityMatrix& k) {
  // inner product over the l+m axis; the l-m axis pairing is not invariant
  SparseMatrix s = to_sparse(k);
  return multiply(s, adjoint(s));
}

bool gram_equal(const Signal& a, const Signal& b, const Tol& tol) {
  if (!a.is_normalized() || !b.is_normalized()) throw std::invalid_argument("signal not normalized");
  if (a.degree() != b.degree()) return false;
  return matrices_equal(gram(build_K(a)), gram(build_K(b)), tol);
}

AmbiguityMatrix kron_matrix(const AmbiguityMatrix& ka, const AmbiguityMatrix& kb) {
  // lattice form of the block product: spacing 2n+1 in both m and l
  int spacing = 2 * ka.n + 1;
  AmbiguityMatrix out;
  out.n = ka.n + spacing * kb.n;
  for (const auto& [mlb, vb] : kb.entries)
    for (const auto& [mla, va] : ka.entries)
      out.entries[{mla.first + spacing * mlb.first, mla.second + spacing * mlb.second}] = va * vb;
  return out;
}

namespace {

Signal product_with_spacing(const Signal& a, const Signal& b, int spacing) {
  if (!a.is_normalized() || !b.is_normalized()) throw std::invalid_argument("signal not normalized");
  int n = a.degree(), m = b.degree();
  Signal c;
  c.offset = 0;
  c.coeffs.assign(static_cast<size_t>(n + spacing * m) + 1, Scalar{});
  for (int j = 0; j <= m; ++j) {
    if (b.coeffs[static_cast<size_t>(j)].is_zero()) continue;
    for (int i = 0; i <= n; ++i) {
      if (a.coeffs[static_cast<size_t>(i)].is_zero()) continue;
      c.coeffs[static_cast<size_t>(i + spacing * j)] +=
          a.coeffs[static_cast<size_t>(i)] * b.coeffs[static_cast<size_t>(j)];
    }
  }
  return c;
}

}  // namespace

Signal kron_signal(const Signal& a, const Signal& b) {
  return product_with_spacing(a, b, 2 * a.degree() + 1);
}

Signal kron_signal_tight(const Signal& a, const Signal& b) {
  return product_with_spacing(a, b, a.degree() + 1);
}

InterleaveResult interleave(const std::vector<Scalar>& alpha, const Scalar& lambda) {
  if (alpha.empty()) throw std::invalid_argument("empty signal");
  bool have_nonzero = false;
  for (const auto& v : alpha) have_nonzero = have_nonzero || !v.is_zero();
  if (!have_nonzero) throw std::invalid_argument("empty signal");

  Signal a, b;
  a.offset = b.offset = 0;
  for (const auto& v : alpha) {
    a.coeffs.push_back(v);
    a.coeffs.push_back(lambda * v);
    b.coeffs.push_back(lambda.conj() * v);
    b.coeffs.push_back(v);
  }
  InterleaveResult out;
  out.degenerate = lambda.is_zero();
  out.a = normalize(a).signal;
  out.b = normalize(b).signal;
  return out;
}

Signal iterated_product(const std::vector<std::pair<Scalar, Scalar>>& factors,
                        const std::vector<IterFlip>& flips) {
  if (factors.empty()) throw std::invalid_argument("no factors");
  std::vector<std::pair<Scalar, Scalar>> eff = factors;
  for (const auto& f : flips) {
    if (f.j < 0 || f.j >= static_cast<int>(factors.size())) throw std::out_of_range("flip index out of range");
    if (!is_unimodular(f.c, Tol{})) throw std::invalid_argument("flip factor must be unimodular");
    auto& [al, be] = eff[static_cast<size_t>(f.j)];
    if (f.kind == IterFlip::Kind::modulate)
      be = f.c * be;
    else
      eff[static_cast<size_t>(f.j)] = {be, f.c * al};
  }
  // multiply out prod (alpha_j + beta_j z^{3^j})
  Signal acc;
  acc.offset = 0;
  acc.coeffs = {Scalar{1}};
  long spacing = 1;
  for (const auto& [al, be] : eff) {
    if (al.is_zero() || be.is_zero()) throw std::invalid_argument("factor coefficients must be nonzero");
    Signal factor;
    factor.offset = 0;
    factor.coeffs.assign(static_cast<size_t>(spacing) + 1, Scalar{});
    factor.coeffs.front() = al;
    factor.coeffs.back() = be;
    acc = product_with_spacing(acc, factor, 1);
    spacing *= 3;
  }
  return normalize(acc).signal;
}

}  // namespace ambikit
