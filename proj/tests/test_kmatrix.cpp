#include <doctest.h>

#include "ambikit/kmatrix.hpp"
#include "ambikit/partner.hpp"

#include <random>

using namespace ambikit;

namespace {

Signal worked_a() { return Signal::from_ints({1, 2, 0, 2, 4}); }
Signal worked_b() { return Signal::from_ints({2, 4, 0, 1, 2}); }

Signal rand_signal(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> amp(-2.0, 2.0);
  Signal s;
  for (int j = 0; j <= n; ++j) s.coeffs.push_back(Scalar::from_double(amp(rng), amp(rng)));
  if (s.coeffs.front().is_zero()) s.coeffs.front() = Scalar::from_double(1.0);
  if (s.coeffs.back().is_zero()) s.coeffs.back() = Scalar::from_double(1.0);
  return s;
}

}  // namespace

TEST_SUITE("kmatrix") {
  TEST_CASE("build_K places products on the skew lattice") {
    Signal a = Signal::from_ints({1, 2});
    AmbiguityMatrix k = build_K(a);
    CHECK(k.n == 1);
    REQUIRE(k.entries.size() == 4);
    CHECK(k.entries.at({0, 0}) == Scalar(1));
    CHECK(k.entries.at({0, 1}) == Scalar(2));
    CHECK(k.entries.at({1, 0}) == Scalar(2));
    CHECK(k.entries.at({1, 1}) == Scalar(4));
    // dense view: (m,l) lands at row l-m+n, col l+m
    SparseMatrix s = to_sparse(k);
    CHECK(s.rows == 3);
    CHECK(s.cols == 3);
    CHECK(s.at.at({1, 0}) == Scalar(1));   // (0,0)
    CHECK(s.at.at({2, 1}) == Scalar(2));   // (0,1)
    CHECK(s.at.at({0, 1}) == Scalar(2));   // (1,0)
    CHECK(s.at.at({1, 2}) == Scalar(4));   // (1,1)
  }

  TEST_CASE("zeros are omitted from the lattice") {
    AmbiguityMatrix k = build_K(Signal::from_ints({1, 0, 1}));
    // only indices 0 and 2 carry mass: 4 products
    CHECK(k.entries.size() == 4);
    CHECK(k.entries.count({0, 1}) == 0);
  }

  TEST_CASE("sparse algebra obeys the adjoint and product laws") {
    std::mt19937_64 rng(19);
    auto rand_sparse = [&](long r, long c) {
      SparseMatrix m;
      m.rows = r;
      m.cols = c;
      std::uniform_real_distribution<double> amp(-1.0, 1.0);
      std::uniform_int_distribution<long> pr(0, r - 1), pc(0, c - 1);
      for (int t = 0; t < 6; ++t) m.set(pr(rng), pc(rng), Scalar::from_double(amp(rng), amp(rng)));
      return m;
    };
    Tol tol{1e-9};
    for (int trial = 0; trial < 10; ++trial) {
      SparseMatrix A = rand_sparse(4, 3), B = rand_sparse(3, 5), C = rand_sparse(5, 2);
      // (AB)C = A(BC)
      CHECK(matrices_equal(multiply(multiply(A, B), C), multiply(A, multiply(B, C)), tol));
      // (AB)* = B* A*
      CHECK(matrices_equal(adjoint(multiply(A, B)), multiply(adjoint(B), adjoint(A)), tol));
      // adjoint is an involution
      CHECK(matrices_equal(adjoint(adjoint(A)), A, tol));
    }
  }

  TEST_CASE("kron distributes over adjoint and product") {
    std::mt19937_64 rng(23);
    auto rand_sparse = [&](long r, long c) {
      SparseMatrix m;
      m.rows = r;
      m.cols = c;
      std::uniform_real_distribution<double> amp(-1.0, 1.0);
      std::uniform_int_distribution<long> pr(0, r - 1), pc(0, c - 1);
      for (int t = 0; t < 5; ++t) m.set(pr(rng), pc(rng), Scalar::from_double(amp(rng), amp(rng)));
      return m;
    };
    Tol tol{1e-9};
    SparseMatrix A = rand_sparse(2, 3), B = rand_sparse(3, 2);
    SparseMatrix C = rand_sparse(3, 2), D = rand_sparse(2, 4);
    CHECK(matrices_equal(adjoint(kron(A, C)), kron(adjoint(A), adjoint(C)), tol));
    CHECK(matrices_equal(multiply(kron(A, C), kron(B, D)),
                         kron(multiply(A, B), multiply(C, D)), tol));
  }

  TEST_CASE("gram criterion agrees with the signature decision") {
    CHECK(gram_equal(worked_a(), worked_b()));
    CHECK_FALSE(gram_equal(worked_a(), Signal::from_ints({1, 2, 0, 2, 3})));
    std::mt19937_64 rng(29);
    Tol tol{1e-7};
    for (int trial = 0; trial < 15; ++trial) {
      Signal a = rand_signal(rng, 4), b = rand_signal(rng, 4);
      CHECK(gram_equal(a, b, tol) == is_partner(a, b, tol));
      CHECK(gram_equal(a, a, tol));
    }
  }

  TEST_CASE("gram criterion sees through trivial moves") {
    Signal a = worked_a();
    Scalar phase = circle_point(Rational(2, 9));
    Scalar step = circle_point(Rational(-1, 4));
    CHECK(gram_equal(a, apply_trivial(phase, step, 0, false, a)));
    CHECK(gram_equal(a, apply_trivial(phase, step, 1, true, a)));
  }

  TEST_CASE("lattice kron matches the product signal") {
    Signal a = Signal::from_ints({1, 2});
    Signal b = Signal::from_ints({3, 0, 5});
    Signal c = kron_signal(a, b);
    // P_c(z) = P_a(z) P_b(z^3): degree 1 + 3*2 = 7
    CHECK(c.degree() == 7);
    AmbiguityMatrix kc = build_K(c);
    AmbiguityMatrix kk = kron_matrix(build_K(a), build_K(b));
    CHECK(kk.n == kc.n);
    Tol tol{};
    CHECK(matrices_equal(to_sparse(kk), to_sparse(kc), tol));
  }

  TEST_CASE("kron transports partner pairs") {
    Signal a = worked_a(), b = worked_b();
    Signal u = Signal::from_ints({1, 3});
    Signal v = Signal::from_ints({3, 1});
    REQUIRE(is_partner(u, v));
    CHECK(is_partner(kron_signal(u, a), kron_signal(v, b)));
    CHECK(is_partner(kron_signal(a, u), kron_signal(b, v)));
  }

  TEST_CASE("tight kron spacing also transports partners") {
    Signal a = worked_a(), b = worked_b();
    Signal u = Signal::from_ints({1, 3});
    Signal v = Signal::from_ints({3, 1});
    Signal cu = kron_signal_tight(u, a);
    Signal cv = kron_signal_tight(v, b);
    // P_c(z) = P_u(z) P_a(z^2): degree 1 + 2*4 = 9
    CHECK(cu.degree() == 9);
    CHECK(is_partner(cu, cv));
    // tight spacing tiles coefficients as c_{i + (N+1) m} = u_i a_m
    for (int i = 0; i <= 1; ++i)
      for (int m = 0; m <= 4; ++m)
        CHECK(cu.at(i + 2 * m) == u.at(i) * a.at(m));
  }

  TEST_CASE("interleaving produces partners for every lambda") {
    std::vector<Scalar> alpha = {Scalar(1), Scalar(2), Scalar(-1)};
    SUBCASE("generic lambda") {
      auto r = interleave(alpha, Scalar(Rational(3, 2)));
      CHECK_FALSE(r.degenerate);
      CHECK(r.a.degree() == 5);
      CHECK(is_partner(r.a, r.b));
      CHECK_FALSE(is_trivial_partner(r.a, r.b).has_value());
    }
    SUBCASE("complex lambda") {
      auto r = interleave(alpha, Scalar::exact_rational(Rational(1, 2), Rational(1, 3)));
      CHECK(is_partner(r.a, r.b));
    }
    SUBCASE("lambda zero degenerates but still partners") {
      auto r = interleave(alpha, Scalar(0));
      CHECK(r.degenerate);
      CHECK(is_partner(r.a, r.b));
    }
  }

  TEST_CASE("interleaving the worked pair alphas") {
    // alpha = (1, 2), lambda = 2 gives exactly the worked pair
    auto r = interleave({Scalar(1), Scalar(2)}, Scalar(2));
    CHECK(signals_equal(r.a, Signal::from_ints({1, 2, 2, 4}), Tol{}));
    CHECK(signals_equal(r.b, Signal::from_ints({2, 1, 4, 2}), Tol{}));
    CHECK(is_partner(r.a, r.b));
  }

  TEST_CASE("iterated products are partners under any flip assignment") {
    std::vector<std::pair<Scalar, Scalar>> factors = {
        {Scalar(1), Scalar(2)}, {Scalar(3), Scalar(-1)}, {Scalar(2), Scalar(5)}};
    Signal base = iterated_product(factors, {});
    // degree is 1 + 3 + 9
    CHECK(base.degree() == 13);
    Scalar c = circle_point(Rational(1, 5));

    std::vector<IterFlip> flips;
    flips.push_back({1, IterFlip::Kind::swap, c});
    Signal f1 = iterated_product(factors, flips);
    CHECK(is_partner(base, f1));

    flips.push_back({2, IterFlip::Kind::modulate, circle_point(Rational(-2, 7))});
    Signal f2 = iterated_product(factors, flips);
    CHECK(is_partner(base, f2));
    CHECK(is_partner(f1, f2));

    flips.push_back({0, IterFlip::Kind::swap, Scalar(-1)});
    Signal f3 = iterated_product(factors, flips);
    CHECK(is_partner(base, f3));
  }

  TEST_CASE("iterated product rejects bad flip data") {
    std::vector<std::pair<Scalar, Scalar>> factors = {{Scalar(1), Scalar(2)}};
    CHECK_THROWS(iterated_product(factors, {{3, IterFlip::Kind::swap, Scalar(1)}}));
    CHECK_THROWS(iterated_product(factors, {{0, IterFlip::Kind::swap, Scalar(2)}}));
  }
}
