// Python bindings for the float-mode surface of the library.  Exact-mode
// decisions stay on the C++/CLI side; here signals are plain complex lists.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ambikit/bset.hpp"
#include "ambikit/hermite.hpp"
#include "ambikit/kmatrix.hpp"
#include "ambikit/partner.hpp"
#include "ambikit/pulse.hpp"
#include "ambikit/quadrature.hpp"
#include "ambikit/strange.hpp"

#include <complex>
#include <optional>
#include <vector>

namespace py = pybind11;
using namespace ambikit;

namespace {

using CxList = std::vector<std::complex<double>>;

Signal to_signal(const CxList& coeffs) {
  Signal s;
  s.coeffs.reserve(coeffs.size());
  for (auto v : coeffs) s.coeffs.push_back(Scalar(v));
  return normalize(s).signal;
}

CxList from_signal(const Signal& s) {
  CxList out;
  out.reserve(s.coeffs.size());
  for (const auto& v : s.coeffs) out.push_back(v.to_complex());
  return out;
}

Poly to_poly(const CxList& coeffs) {
  std::vector<Scalar> c;
  c.reserve(coeffs.size());
  for (auto v : coeffs) c.push_back(Scalar(v));
  return Poly::of(std::move(c));
}

CxList from_poly(const Poly& p) {
  CxList out;
  out.reserve(p.c.size());
  for (const auto& v : p.c) out.push_back(v.to_complex());
  return out;
}

PulseDescriptor to_pulse(const CxList& coeffs, const std::string& eta) {
  PulseDescriptor u;
  u.a = to_signal(coeffs);
  u.eta = parse_rational(eta);
  validate_pulse(u);
  return u;
}

}  // namespace

PYBIND11_MODULE(_ambikit, m) {
  m.doc() = "ambiguity function toolkit (float-mode bindings)";

  m.def(
      "is_partner",
      [](const CxList& a, const CxList& b, double tol) {
        return is_partner(to_signal(a), to_signal(b), Tol{tol});
      },
      py::arg("a"), py::arg("b"), py::arg("tol") = 1e-9,
      "equal-modulus partner decision for two coefficient lists");

  m.def(
      "trivial_witness",
      [](const CxList& a, const CxList& b, double tol) -> py::object {
        auto w = is_trivial_partner(to_signal(a), to_signal(b), Tol{tol});
        if (!w) return py::none();
        py::dict d;
        d["beta"] = w->h.beta;
        d["omega"] = w->h.omega;
        d["l"] = w->h.l;
        d["reflected"] = w->h.reflected;
        return d;
      },
      py::arg("a"), py::arg("b"), py::arg("tol") = 1e-9,
      "phase/modulation/shift/reflection witness, or None");

  m.def(
      "apply_trivial",
      [](double beta, double omega, int l, bool reflected, const CxList& a) {
        return from_signal(apply_trivial(HeisenbergElement{beta, omega, l, reflected}, to_signal(a)));
      },
      py::arg("beta"), py::arg("omega"), py::arg("l"), py::arg("reflected"), py::arg("a"));

  m.def(
      "restricted_check",
      [](const CxList& a, const CxList& b, double tol) -> py::object {
        auto eta = restricted_partner_check(to_signal(a), to_signal(b), Tol{tol});
        if (!eta) return py::none();
        CxList out;
        for (const auto& e : *eta) out.push_back(e.to_complex());
        return py::cast(out);
      },
      py::arg("a"), py::arg("b"), py::arg("tol") = 1e-9,
      "shift-wise proportionality factors, or None");

  m.def(
      "gram_equal",
      [](const CxList& a, const CxList& b, double tol) {
        return gram_equal(to_signal(a), to_signal(b), Tol{tol});
      },
      py::arg("a"), py::arg("b"), py::arg("tol") = 1e-9,
      "Gram-matrix partner criterion");

  m.def(
      "signature",
      [](const CxList& a) {
        std::vector<CxList> rows;
        for (const auto& row : signature(to_signal(a)).rows) {
          CxList r;
          for (const auto& v : row) r.push_back(v.to_complex());
          rows.push_back(std::move(r));
        }
        return rows;
      },
      py::arg("a"), "per-shift autocorrelation lists");

  m.def(
      "kron_signal",
      [](const CxList& a, const CxList& b, bool tight) {
        return from_signal(tight ? kron_signal_tight(to_signal(a), to_signal(b))
                                 : kron_signal(to_signal(a), to_signal(b)));
      },
      py::arg("a"), py::arg("b"), py::arg("tight") = false,
      "spread product; partner pairs tensor");

  m.def(
      "interleave",
      [](const CxList& alpha, std::complex<double> lam) {
        std::vector<Scalar> al;
        for (auto v : alpha) al.push_back(Scalar(v));
        auto r = interleave(al, Scalar(lam));
        return py::make_tuple(from_signal(r.a), from_signal(r.b), r.degenerate);
      },
      py::arg("alpha"), py::arg("lam"), "interleaved partner pair (a, b, degenerate)");

  m.def(
      "is_b2", [](const std::vector<int>& s) { return is_B2(SupportSet::of(s)); }, py::arg("s"));
  m.def(
      "is_b3", [](const std::vector<int>& s) { return is_B3(SupportSet::of(s)); }, py::arg("s"));

  m.def(
      "recover_shift",
      [](const std::vector<int>& L, const std::vector<int>& Lp) -> py::object {
        auto w = recover_shift(SupportSet::of(L), SupportSet::of(Lp));
        if (!w) return py::none();
        py::dict d;
        d["orientation"] = w->orientation == ShiftOrientation::direct ? "direct" : "reflected";
        d["m"] = w->m;
        return d;
      },
      py::arg("ref"), py::arg("candidate"),
      "shift or reflection aligning two B3 difference sets, or None");

  m.def(
      "strange_search",
      [](const CxList& a, long restarts, double tol, std::uint64_t seed,
         const std::vector<CxList>& hints) {
        StrangeOptions opt;
        opt.restarts = restarts;
        opt.tol = tol;
        opt.seed = seed;
        for (const auto& h : hints) opt.hints.push_back(to_signal(h));
        std::vector<py::dict> out;
        for (const auto& cand : strange_search(to_signal(a), opt)) {
          py::dict d;
          d["signal"] = from_signal(cand.b);
          d["residual"] = cand.residual;
          d["certificate"] = cand.cert == Certificate::exact ? "exact" : "numeric-only";
          out.push_back(std::move(d));
        }
        return out;
      },
      py::arg("a"), py::arg("restarts") = 2000, py::arg("tol") = 1e-10, py::arg("seed") = 1,
      py::arg("hints") = std::vector<CxList>{}, "randomized search for non-trivial partners");

  m.def(
      "partner_scan",
      [](const CxList& p, double tol) {
        std::vector<CxList> out;
        for (const auto& q : partner_scan(to_poly(p), tol)) out.push_back(from_poly(q));
        return out;
      },
      py::arg("p"), py::arg("tol") = 1e-8,
      "monic partner candidates of a generic monic polynomial");

  m.def(
      "is_generic", [](const CxList& p, double tol) { return is_generic(to_poly(p), tol); },
      py::arg("p"), py::arg("tol") = 1e-6);

  m.def(
      "hermite_partner",
      [](const CxList& p, const CxList& q, double tol) {
        std::vector<Scalar> sp, sq;
        for (auto v : p) sp.push_back(Scalar(v));
        for (auto v : q) sq.push_back(Scalar(v));
        return hermite_signal_partner_test(sp, sq, Tol{tol});
      },
      py::arg("p"), py::arg("q"), py::arg("tol") = 1e-9,
      "partner test for two Hermite expansions");

  m.def("laguerre_cross", &laguerre_cross, py::arg("j"), py::arg("k"), py::arg("x"), py::arg("y"),
        "closed-form cross ambiguity of two Hermite basis functions");

  m.def("hermite_cross_quadrature", &hermite_cross_quadrature, py::arg("j"), py::arg("k"),
        py::arg("x"), py::arg("y"), py::arg("nodes") = 64,
        "quadrature oracle for the cross ambiguity");

  m.def(
      "pulse_ambiguity",
      [](const CxList& a, const std::string& eta, double x, double y) {
        return pulse_ambiguity(to_pulse(a, eta), x, y);
      },
      py::arg("a"), py::arg("eta"), py::arg("x"), py::arg("y"),
      "closed-form ambiguity of a pulse-type signal; eta is a rational string");

  m.def(
      "pulse_ambiguity_quadrature",
      [](const CxList& a, const std::string& eta, double x, double y, double abs_tol) {
        return pulse_ambiguity_quadrature(to_pulse(a, eta), x, y, abs_tol);
      },
      py::arg("a"), py::arg("eta"), py::arg("x"), py::arg("y"), py::arg("abs_tol") = 1e-10,
      "adaptive quadrature oracle for the pulse ambiguity");

  m.def("box_ambiguity", &box_ambiguity, py::arg("eta"), py::arg("x"), py::arg("y"),
        "ambiguity of the unit-height pulse of width eta");

#ifdef VERSION_INFO
  m.attr("__version__") = VERSION_INFO;
#else
  m.attr("__version__") = "dev";
#endif
}
