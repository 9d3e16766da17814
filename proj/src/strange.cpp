#include "ambikit/strange.hpp"

#include "ambikit/parallel.hpp"
#include "ambikit/partner.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <optional>
#include <random>

namespace ambikit {

namespace {

using Cx = std::complex<double>;

// Signature residual kernel on raw complex arrays.  target holds, for each
// shift k = 0..n, the autocorrelation values s_m for m = 0..n; negative m is
// determined by symmetry and enters through the weight 2.
struct Kernel {
  int n;
  std::vector<double> target_re, target_im;

  static Kernel from(const Signal& a) {
    Kernel k;
    k.n = a.degree();
    AmbiguitySignature sig = signature(a);
    for (int s = 0; s <= k.n; ++s)
      for (int m = 0; m <= k.n; ++m) {
        Cx v = sig.rows[static_cast<size_t>(s)][static_cast<size_t>(k.n + m)].to_complex();
        k.target_re.push_back(v.real());
        k.target_im.push_back(v.imag());
      }
    return k;
  }

  double norm() const {
    double acc = 0.0;
    for (size_t i = 0; i < target_re.size(); ++i) {
      double w = (i % (static_cast<size_t>(n) + 1) == 0) ? 1.0 : 2.0;
      acc += w * (target_re[i] * target_re[i] + target_im[i] * target_im[i]);
    }
    return acc;
  }

  // F(b) = sum_k sum_m w_m |s_m(b, k) - target|^2, w_0 = 1, w_m = 2 otherwise
  double operator()(const Cx* b, Cx* cross_buf) const {
    double acc = 0.0;
    size_t t = 0;
    for (int k = 0; k <= n; ++k) {
      for (int j = 0; j <= n; ++j)
        cross_buf[j] = (j - k < 0) ? Cx{0.0, 0.0} : b[j] * std::conj(b[j - k]);
      for (int m = 0; m <= n; ++m, ++t) {
        Cx s{0.0, 0.0};
        for (int j = m; j <= n; ++j) s += cross_buf[j] * std::conj(cross_buf[j - m]);
        double dr = s.real() - target_re[t], di = s.imag() - target_im[t];
        acc += (m == 0 ? 1.0 : 2.0) * (dr * dr + di * di);
      }
    }
    return acc;
  }
};

struct RestartResult {
  std::vector<Cx> b;
  double f = std::numeric_limits<double>::infinity();
};

double minimize(const Kernel& K, std::vector<Cx>& b, double scale, double fscale, long max_evals) {
  std::vector<Cx> buf(static_cast<size_t>(K.n) + 1);
  double f = K(b.data(), buf.data());
  double step = 0.5 * scale;
  long evals = 1;
  int dims = 2 * (K.n + 1);
  while (step > 1e-14 * scale && evals < max_evals) {
    bool improved = false;
    for (int d = 0; d < dims; ++d) {
      auto& slot = b[static_cast<size_t>(d / 2)];
      bool re_part = (d % 2 == 0);
      for (double sgn : {1.0, -1.0}) {
        int moves = 0;
        while (moves < 32) {
          Cx saved = slot;
          slot += re_part ? Cx{sgn * step, 0.0} : Cx{0.0, sgn * step};
          double f2 = K(b.data(), buf.data());
          ++evals;
          if (f2 < f) {
            f = f2;
            improved = true;
            ++moves;
          } else {
            slot = saved;
            break;
          }
        }
        if (moves > 0) break;  // do not waste an eval on the opposite sign
      }
    }
    if (!improved) step *= 0.5;
    // a restart still far from zero once the step is tiny will not make the
    // residual threshold; cut it off
    if (step < 1e-4 * scale && f > 1e-6 * fscale) break;
  }
  return f;
}

// continued-fraction reconstruction of a nearby small-denominator rational
std::optional<Rational> reconstruct_rational(double v, long max_den, double eps) {
  if (std::abs(v) <= eps) return Rational(0);
  double x = v;
  long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  for (int it = 0; it < 48; ++it) {
    double fl = std::floor(x);
    if (fl > 9e17 || fl < -9e17) return std::nullopt;
    long long a = static_cast<long long>(fl);
    long long p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > max_den) return std::nullopt;
    double approx = static_cast<double>(p2) / static_cast<double>(q2);
    if (std::abs(approx - v) <= eps * std::max(1.0, std::abs(v)))
      return Rational(p2, q2);
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    double frac = x - fl;
    if (frac < 1e-15) return std::nullopt;
    x = 1.0 / frac;
  }
  return std::nullopt;
}

// multiply by e^{-i(beta + j omega)} so that b_0 and b_n end up real positive,
// then clip coefficients that converged to structural zeros
void gauge_fix(std::vector<Cx>& b, double scale) {
  size_t n = b.size() - 1;
  double beta = std::arg(b[0]);
  double omega = (n == 0) ? 0.0 : (std::arg(b[n]) - beta) / static_cast<double>(n);
  for (size_t j = 0; j < b.size(); ++j)
    b[j] *= std::polar(1.0, -(beta + omega * static_cast<double>(j)));
  for (auto& v : b)
    if (std::abs(v) <= 1e-9 * scale) v = Cx{0.0, 0.0};
}

Signal to_signal(const std::vector<Cx>& b) {
  Signal s;
  s.offset = 0;
  s.coeffs.reserve(b.size());
  for (auto v : b) s.coeffs.push_back(v == Cx{0.0, 0.0} ? Scalar{} : Scalar{v});
  return s;
}

}  // namespace

std::vector<StrangeCandidate> strange_search(const Signal& a, const StrangeOptions& opts) {
  if (!a.is_normalized()) throw std::invalid_argument("signal not normalized");
  const int n = a.degree();
  Kernel K = Kernel::from(a);
  const double fscale = K.norm() + 1.0;
  double scale = 0.0;
  for (const auto& c : a.coeffs) scale = std::max(scale, std::abs(c.to_complex()));

  long hint_count = static_cast<long>(opts.hints.size());
  long total = opts.restarts + hint_count;
  std::vector<RestartResult> results(static_cast<size_t>(total));

  parallel_chunks(total, [&](long lo, long hi) {
    for (long idx = lo; idx < hi; ++idx) {
      std::vector<Cx> b(static_cast<size_t>(n) + 1);
      if (idx < hint_count) {
        const Signal& h = opts.hints[static_cast<size_t>(idx)];
        if (h.degree() != n) continue;  // wrong length hint: skip the slot
        for (int j = 0; j <= n; ++j) b[static_cast<size_t>(j)] = h.coeffs[static_cast<size_t>(j)].to_complex();
      } else {
        // per-index generator: results do not depend on the thread layout
        std::mt19937_64 rng(opts.seed * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(idx) + 1);
        std::normal_distribution<double> gauss(0.0, 1.0);
        for (auto& v : b) v = Cx{gauss(rng) * scale, gauss(rng) * scale};
      }
      double f = minimize(K, b, scale, fscale, 4000);
      results[static_cast<size_t>(idx)] = {std::move(b), f};
    }
  });

  Signal a_float = a.to_float();
  Tol filter_tol{1e-6};
  std::vector<StrangeCandidate> out;
  for (long idx = 0; idx < total; ++idx) {
    auto& r = results[static_cast<size_t>(idx)];
    if (!(r.f >= 0.0) || std::sqrt(r.f) >= opts.tol) continue;
    gauge_fix(r.b, scale);
    if (std::abs(r.b.front()) < 1e-8 * scale || std::abs(r.b.back()) < 1e-8 * scale) continue;
    Signal cand = to_signal(r.b);
    if (is_trivial_partner(a_float, cand, filter_tol)) continue;
    bool duplicate = false;
    for (const auto& kept : out) {
      Signal kf = kept.b.to_float();
      if (signals_equal(kf, cand, filter_tol) || is_trivial_partner(kf, cand, filter_tol)) {
        duplicate = true;
        break;
      }
    }
    if (duplicate) continue;

    StrangeCandidate c{cand, std::sqrt(r.f), Certificate::numeric_only};
    if (a.all_exact()) {
      // try to exactify and certify against the exact target
      std::vector<Scalar> exact_coeffs;
      bool ok = true;
      for (auto v : r.b) {
        auto re = reconstruct_rational(v.real(), 10000, 1e-8);
        auto im = reconstruct_rational(v.imag(), 10000, 1e-8);
        if (!re || !im) {
          ok = false;
          break;
        }
        exact_coeffs.push_back(Scalar::exact_rational(*re, *im));
      }
      if (ok) {
        Signal be{0, std::move(exact_coeffs)};
        if (be.is_normalized() && is_partner(a, be) && !is_trivial_partner(a, be)) {
          c.b = std::move(be);
          c.cert = Certificate::exact;
        }
      }
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace ambikit
