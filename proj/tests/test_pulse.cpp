#include <doctest.h>

#include "ambikit/pulse.hpp"

#include <cmath>
#include <random>
#include <sstream>

using namespace ambikit;

namespace {

PulseDescriptor worked_pulse() {
  PulseDescriptor u;
  u.a = Signal::from_ints({1, 2, 0, 2, 4});
  u.eta = Rational(1, 3);
  return u;
}

}  // namespace

TEST_SUITE("pulse") {
  TEST_CASE("validation enforces the width window and unit phase") {
    PulseDescriptor u = worked_pulse();
    CHECK_NOTHROW(validate_pulse(u));
    u.eta = Rational(1, 2);
    CHECK_NOTHROW(validate_pulse(u));
    u.eta = Rational(2, 3);
    CHECK_THROWS_AS(validate_pulse(u), std::invalid_argument);
    u.eta = Rational(0);
    CHECK_THROWS_AS(validate_pulse(u), std::invalid_argument);
    u = worked_pulse();
    u.phase = {2.0, 0.0};
    CHECK_THROWS_AS(validate_pulse(u), std::invalid_argument);
  }

  TEST_CASE("box ambiguity vanishes off the width and peaks at the origin") {
    double eta = 1.0 / 3.0;
    CHECK(box_ambiguity(eta, 0.34, 0.5) == std::complex<double>{0.0, 0.0});
    CHECK(box_ambiguity(eta, -0.5, 0.2) == std::complex<double>{0.0, 0.0});
    CHECK(box_ambiguity(eta, 0.0, 0.0).real() == doctest::Approx(eta));
    // |A(x,y)| = |sin((eta-|x|) y/2) / (y/2)|
    for (double x : {0.0, 0.1, -0.2}) {
      for (double y : {0.3, -1.7, 2.9}) {
        double expect = std::abs(std::sin((eta - std::abs(x)) * y / 2) / (y / 2));
        CHECK(std::abs(box_ambiguity(eta, x, y)) == doctest::Approx(expect).epsilon(1e-10));
      }
    }
  }

  TEST_CASE("box ambiguity is smooth across the small-y series switch") {
    double eta = 0.4;
    for (double x : {0.0, 0.15}) {
      auto near = box_ambiguity(eta, x, 1e-9);
      auto at = box_ambiguity(eta, x, 0.0);
      CHECK(std::abs(near - at) < 1e-8);
    }
  }

  TEST_CASE("discrete factor matches a direct sum") {
    Signal a = Signal::from_ints({1, 2, 3});
    double y = 0.37;
    std::complex<double> expect = 0.0;
    // k = 1: c = (0, 2, 6)
    expect += 2.0 * std::exp(std::complex<double>(0, y));
    expect += 6.0 * std::exp(std::complex<double>(0, 2 * y));
    CHECK(std::abs(discrete_ambiguity_eval(a, 1, y) - expect) < 1e-12);
  }

  TEST_CASE("closed form agrees with adaptive quadrature") {
    PulseDescriptor u = worked_pulse();
    for (double x : {0.0, 0.2, 1.1, -2.3, 3.9}) {
      for (double y : {0.0, 0.5, -1.3, 2.7}) {
        auto closed = pulse_ambiguity(u, x, y);
        auto quad = pulse_ambiguity_quadrature(u, x, y);
        CHECK(std::abs(closed - quad) < 1e-8);
      }
    }
  }

  TEST_CASE("quadrature still agrees after decoration") {
    PulseDescriptor u = worked_pulse();
    u.phase = std::polar(1.0, 0.8);
    u.omega = 1.3;
    u.shift = -0.4;
    u.reflected = true;
    for (double x : {0.3, -1.2}) {
      for (double y : {0.9, -0.6}) {
        auto closed = pulse_ambiguity(u, x, y);
        auto quad = pulse_ambiguity_quadrature(u, x, y);
        CHECK(std::abs(closed - quad) < 1e-8);
      }
    }
  }

  TEST_CASE("the origin value is eta times the discrete energy") {
    PulseDescriptor u = worked_pulse();
    // sum |a_j|^2 = 1 + 4 + 4 + 16 = 25, eta = 1/3
    auto v = pulse_ambiguity(u, 0.0, 0.0);
    CHECK(v.real() == doctest::Approx(25.0 / 3.0));
    CHECK(v.imag() == doctest::Approx(0.0));
  }

  TEST_CASE("ambiguity modulus peaks at the origin") {
    PulseDescriptor u = worked_pulse();
    std::mt19937_64 rng(61);
    std::uniform_real_distribution<double> px(-5.0, 5.0), py(-3.0, 3.0);
    double peak = std::abs(pulse_ambiguity(u, 0.0, 0.0));
    for (int t = 0; t < 200; ++t)
      CHECK(std::abs(pulse_ambiguity(u, px(rng), py(rng))) <= peak + 1e-9);
  }

  TEST_CASE("decorations leave the modulus invariant") {
    PulseDescriptor u = worked_pulse();
    std::mt19937_64 rng(67);
    std::uniform_real_distribution<double> pr(-1.5, 1.5);
    for (int t = 0; t < 8; ++t) {
      auto v = apply_continuous_trivial(std::polar(1.0, pr(rng)), pr(rng), pr(rng),
                                        t % 2 == 1, u);
      for (double x : {0.15, -1.3, 2.4}) {
        for (double y : {0.8, -2.1}) {
          CHECK(std::abs(pulse_ambiguity(v, x, y)) ==
                doctest::Approx(std::abs(pulse_ambiguity(u, x, y))).epsilon(1e-9));
        }
      }
    }
  }

  TEST_CASE("decoration composition matches pointwise evaluation") {
    PulseDescriptor u = worked_pulse();
    std::complex<double> c = std::polar(1.0, 0.4);
    double omega = 0.9, alpha = 0.35;

    SUBCASE("direct") {
      auto v = apply_continuous_trivial(c, omega, alpha, false, u);
      for (double t : {0.1, 0.5, 1.234, 3.3}) {
        auto expect = c * std::exp(std::complex<double>(0, omega * t)) * eval_pulse(u, t - alpha);
        CHECK(std::abs(eval_pulse(v, t) - expect) < 1e-12);
      }
    }

    SUBCASE("reflected") {
      auto v = apply_continuous_trivial(c, omega, alpha, true, u);
      for (double t : {0.1, -0.5, 1.234, -3.3}) {
        auto expect = c * std::exp(std::complex<double>(0, -omega * t)) * eval_pulse(u, -t - alpha);
        CHECK(std::abs(eval_pulse(v, t) - expect) < 1e-12);
      }
    }

    SUBCASE("double reflection cancels") {
      auto v = apply_continuous_trivial(c, 0.0, 0.0, true, u);
      auto w = apply_continuous_trivial(std::conj(c), 0.0, 0.0, true, v);
      CHECK_FALSE(w.reflected);
      for (double t : {0.3, 1.7}) CHECK(std::abs(eval_pulse(w, t) - eval_pulse(u, t)) < 1e-12);
    }
  }

  TEST_CASE("eval_pulse respects half-open pulse boundaries") {
    PulseDescriptor u;
    u.a = Signal::from_ints({1, 3});
    u.eta = Rational(1, 3);
    CHECK(eval_pulse(u, 0.0) == std::complex<double>{1.0, 0.0});
    CHECK(eval_pulse(u, 1.0 / 3.0 - 1e-12) == std::complex<double>{1.0, 0.0});
    CHECK(eval_pulse(u, 1.0 / 3.0) == std::complex<double>{0.0, 0.0});
    CHECK(eval_pulse(u, 0.5) == std::complex<double>{0.0, 0.0});
    CHECK(eval_pulse(u, 1.0) == std::complex<double>{3.0, 0.0});
    CHECK(eval_pulse(u, -0.1) == std::complex<double>{0.0, 0.0});
  }

  TEST_CASE("grid export emits the documented CSV layout") {
    PulseDescriptor u = worked_pulse();
    GridRange xs{0.0, 1.0, 0.5};
    GridRange ys{-1.0, 1.0, 1.0};
    CHECK(xs.count() == 3);
    CHECK(ys.count() == 3);
    std::ostringstream out;
    export_grid(u, xs, ys, out);
    std::istringstream in(out.str());
    std::string line;
    REQUIRE(std::getline(in, line));
    CHECK(line == "x,y,abs,re,im");
    long rows = 0;
    double first_x = -1, first_y = -1;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      ++rows;
      if (rows == 1) sscanf(line.c_str(), "%lf,%lf", &first_x, &first_y);
    }
    CHECK(rows == 9);
    CHECK(first_x == 0.0);
    CHECK(first_y == -1.0);
  }

  TEST_CASE("grid values roundtrip at full precision") {
    PulseDescriptor u = worked_pulse();
    GridRange xs{0.2, 0.2, 1.0};
    GridRange ys{0.7, 0.7, 1.0};
    std::ostringstream out;
    export_grid(u, xs, ys, out);
    std::istringstream in(out.str());
    std::string header, row;
    std::getline(in, header);
    REQUIRE(std::getline(in, row));
    double x, y, m, re, im;
    REQUIRE(sscanf(row.c_str(), "%lf,%lf,%lf,%lf,%lf", &x, &y, &m, &re, &im) == 5);
    auto direct = pulse_ambiguity(u, 0.2, 0.7);
    CHECK(re == direct.real());
    CHECK(im == direct.imag());
    CHECK(m == std::abs(direct));
  }

  TEST_CASE("degenerate grid ranges are rejected") {
    PulseDescriptor u = worked_pulse();
    std::ostringstream sink;
    CHECK_THROWS(export_grid(u, GridRange{0.0, 1.0, 0.0}, GridRange{0, 1, 1}, sink));
    CHECK_THROWS(export_grid(u, GridRange{0.0, -1.0, 0.5}, GridRange{0, 1, 1}, sink));
  }
}
