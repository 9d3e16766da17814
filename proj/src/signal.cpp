#include "ambikit/signal.hpp"

#include <algorithm>
#include <map>

namespace ambikit {

Signal Signal::from_ints(const std::vector<long>& v, int offset) {
  Signal s;
  s.offset = offset;
  s.coeffs.reserve(v.size());
  for (long x : v) s.coeffs.emplace_back(x);
  return s;
}

bool Signal::is_zero() const {
  for (const auto& c : coeffs)
    if (!c.is_zero()) return false;
  return true;
}

bool Signal::is_normalized() const {
  if (coeffs.empty() || offset != 0) return false;
  return !coeffs.front().is_zero() && !coeffs.back().is_zero();
}

bool Signal::all_exact() const {
  for (const auto& c : coeffs)
    if (!c.is_exact()) return false;
  return true;
}

Signal Signal::to_float() const {
  Signal out;
  out.offset = offset;
  out.coeffs.reserve(coeffs.size());
  for (const auto& c : coeffs) out.coeffs.emplace_back(c.to_complex());
  return out;
}

const Scalar& Signal::at(int index) const {
  static const Scalar zero{};
  long i = static_cast<long>(index) - offset;
  if (i < 0 || i >= static_cast<long>(coeffs.size())) return zero;
  return coeffs[static_cast<size_t>(i)];
}

NormalizeResult normalize(const Signal& s) {
  size_t lo = 0, hi = s.coeffs.size();
  while (lo < hi && s.coeffs[lo].is_zero()) ++lo;
  if (lo == hi) throw std::invalid_argument("empty signal");
  while (s.coeffs[hi - 1].is_zero()) --hi;
  Signal out;
  out.offset = 0;
  out.coeffs.assign(s.coeffs.begin() + static_cast<long>(lo), s.coeffs.begin() + static_cast<long>(hi));
  return {out, s.offset + static_cast<int>(lo)};
}

Signal denormalize(const Signal& s, int shift) {
  Signal out = s;
  out.offset = s.offset + shift;
  return out;
}

bool signals_equal(const Signal& a, const Signal& b, const Tol& tol) {
  if (a.offset != b.offset || a.coeffs.size() != b.coeffs.size()) return false;
  for (size_t i = 0; i < a.coeffs.size(); ++i)
    if (!values_equal(a.coeffs[i], b.coeffs[i], tol)) return false;
  return true;
}

std::vector<Scalar> cross_sequence(const Signal& a, int k) {
  if (!a.is_normalized()) throw std::invalid_argument("signal not normalized");
  int n = a.degree();
  std::vector<Scalar> c(static_cast<size_t>(n) + 1);
  if (std::abs(k) > n) return c;
  for (int j = 0; j <= n; ++j) {
    int jm = j - k;
    if (jm < 0 || jm > n) continue;
    c[static_cast<size_t>(j)] = a.coeffs[static_cast<size_t>(j)] * a.coeffs[static_cast<size_t>(jm)].conj();
  }
  return c;
}

std::vector<Scalar> autocorrelation(const std::vector<Scalar>& c) {
  long L = static_cast<long>(c.size());
  if (L == 0) return {};
  std::vector<Scalar> s(static_cast<size_t>(2 * L - 1));
  for (long m = 0; m < L; ++m) {
    Scalar acc{};
    for (long n = m; n < L; ++n) acc += c[static_cast<size_t>(n)] * c[static_cast<size_t>(n - m)].conj();
    s[static_cast<size_t>(L - 1 + m)] = acc;
    s[static_cast<size_t>(L - 1 - m)] = acc.conj();
  }
  return s;
}

SupportSet SupportSet::of(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return SupportSet{std::move(v)};
}

bool SupportSet::contains(int n) const { return std::binary_search(elems.begin(), elems.end(), n); }

SupportSet SupportSet::translated(int m) const {
  SupportSet out;
  out.elems.reserve(elems.size());
  for (int n : elems) out.elems.push_back(n + m);
  return out;
}

SupportSet SupportSet::reflected(int m) const {
  SupportSet out;
  out.elems.reserve(elems.size());
  for (auto it = elems.rbegin(); it != elems.rend(); ++it) out.elems.push_back(m - *it);
  return out;
}

SupportSet support(const Signal& s) {
  std::vector<int> idx;
  for (size_t i = 0; i < s.coeffs.size(); ++i)
    if (!s.coeffs[i].is_zero()) idx.push_back(s.offset + static_cast<int>(i));
  return SupportSet::of(std::move(idx));
}

SupportSet difference_set(const SupportSet& L) {
  std::vector<int> d;
  d.reserve(static_cast<size_t>(L.size()) * static_cast<size_t>(L.size()));
  for (int a : L.elems)
    for (int b : L.elems) d.push_back(a - b);
  return SupportSet::of(std::move(d));
}

std::vector<long long> sum3_multiset(const SupportSet& L) {
  std::vector<long long> sums;
  const auto& e = L.elems;
  for (size_t i = 0; i < e.size(); ++i)
    for (size_t j = i; j < e.size(); ++j)
      for (size_t k = j; k < e.size(); ++k)
        sums.push_back(static_cast<long long>(e[i]) + e[j] + e[k]);
  std::sort(sums.begin(), sums.end());
  return sums;
}

}  // namespace ambikit
