#include <doctest.h>

#include "ambikit/partner.hpp"
#include "ambikit/strange.hpp"

using namespace ambikit;

namespace {

Signal worked_a() { return Signal::from_ints({1, 2, 0, 2, 4}); }
Signal worked_b() { return Signal::from_ints({2, 4, 0, 1, 2}); }

}  // namespace

TEST_SUITE("strange") {
  TEST_CASE("zero restarts and no hints yield nothing") {
    StrangeOptions opt;
    opt.restarts = 0;
    CHECK(strange_search(worked_a(), opt).empty());
  }

  TEST_CASE("an exact hint is certified exactly") {
    StrangeOptions opt;
    opt.restarts = 0;
    opt.hints = {worked_b()};
    auto found = strange_search(worked_a(), opt);
    REQUIRE(found.size() == 1);
    CHECK(found[0].cert == Certificate::exact);
    CHECK(found[0].b.all_exact());
    CHECK(found[0].residual <= opt.tol);
    CHECK(is_partner(worked_a(), found[0].b));
    CHECK_FALSE(is_trivial_partner(worked_a(), found[0].b).has_value());
  }

  TEST_CASE("hints on the trivial orbit are filtered out") {
    StrangeOptions opt;
    opt.restarts = 0;
    Signal a = worked_a();
    opt.hints = {a, apply_trivial(circle_point(Rational(1, 3)), Scalar(1), 0, false, a)};
    CHECK(strange_search(a, opt).empty());
  }

  TEST_CASE("search is deterministic for a fixed seed") {
    StrangeOptions opt;
    opt.restarts = 40;
    opt.seed = 5;
    Signal a = worked_a();
    auto r1 = strange_search(a, opt);
    auto r2 = strange_search(a, opt);
    REQUIRE(r1.size() == r2.size());
    Tol tol{1e-12};
    for (size_t i = 0; i < r1.size(); ++i) {
      CHECK(r1[i].cert == r2[i].cert);
      CHECK(signals_equal(r1[i].b, r2[i].b, tol));
    }
  }

  TEST_CASE("candidates are gauge-fixed and genuinely strange") {
    // the worked target has a continuum of partners; restarts will hit some
    StrangeOptions opt;
    opt.restarts = 300;
    opt.seed = 2;
    Signal a = worked_a();
    auto found = strange_search(a, opt);
    Tol tol{1e-7};
    for (const auto& cand : found) {
      CHECK(cand.residual <= opt.tol);
      Signal bf = cand.b.to_float();
      CHECK(is_partner(a.to_float(), bf, tol));
      CHECK_FALSE(is_trivial_partner(a.to_float(), bf, tol).has_value());
      // gauge: both endpoints are real and nonnegative
      for (auto end : {bf.coeffs.front().to_complex(), bf.coeffs.back().to_complex()}) {
        CHECK(end.real() >= -1e-12);
        CHECK(std::abs(end.imag()) <= 1e-9);
      }
    }
  }

  TEST_CASE("a length-two signal admits no strange partner") {
    StrangeOptions opt;
    opt.restarts = 500;
    opt.seed = 7;
    CHECK(strange_search(Signal::from_ints({1, 2}), opt).empty());
  }

  TEST_CASE("a rational circle member of the continuum is exactified") {
    // b = (1, 2w, 0, 2w~, 4) with w = (3+4i)/5 lies on the partner continuum
    Signal a = worked_a();
    Scalar w = circle_point(Rational(1, 2));
    Signal hint;
    hint.coeffs = {Scalar(1), Scalar(2) * w, Scalar(0), Scalar(2) * w.conj(), Scalar(4)};
    StrangeOptions opt;
    opt.restarts = 0;
    opt.hints = {hint};
    auto found = strange_search(a, opt);
    REQUIRE(found.size() == 1);
    CHECK(found[0].cert == Certificate::exact);
    CHECK(is_partner(a, found[0].b));
  }
}
