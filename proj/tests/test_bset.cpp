#include <doctest.h>

#include "ambikit/bset.hpp"

#include <random>
#include <set>

using namespace ambikit;

namespace {

SupportSet rand_set(std::mt19937_64& rng, int size, int span) {
  std::uniform_int_distribution<int> pick(-span, span);
  std::set<int> s;
  while (static_cast<int>(s.size()) < size) s.insert(pick(rng));
  return SupportSet::of({s.begin(), s.end()});
}

}  // namespace

TEST_SUITE("bset") {
  TEST_CASE("small sets classify correctly") {
    CHECK(is_B2(SupportSet::of({0, 1, 3})));
    // 0+0+3 = 1+1+1, so B2 does not give B3
    CHECK_FALSE(is_B3(SupportSet::of({0, 1, 3})));
    // 0+2 = 1+1
    CHECK_FALSE(is_B2(SupportSet::of({0, 1, 2})));
    CHECK_FALSE(is_B3(SupportSet::of({0, 1, 2})));
    // 0+4 = 2+2
    CHECK_FALSE(is_B2(SupportSet::of({0, 1, 2, 4})));
    CHECK(is_B2(SupportSet::of({0, 1, 4, 9})));
    CHECK(is_B3(SupportSet::of({0, 1, 8, 11})));
    CHECK(is_B2(SupportSet::of({})));
    CHECK(is_B3(SupportSet::of({7})));
    // every two-element set has distinct triple sums
    CHECK(is_B3(SupportSet::of({0, 5})));
  }

  TEST_CASE("powers of two form a B2 set") {
    std::vector<int> powers;
    for (int k = 0; k <= 10; ++k) powers.push_back(1 << k);
    CHECK(is_B2(SupportSet::of(powers)));
  }

  TEST_CASE("B3 implies B2") {
    std::mt19937_64 rng(3);
    int b3_seen = 0;
    for (int trial = 0; trial < 200; ++trial) {
      SupportSet L = rand_set(rng, 4, 40);
      if (is_B3(L)) {
        ++b3_seen;
        CHECK(is_B2(L));
      }
    }
    CHECK(b3_seen > 0);
  }

  TEST_CASE("shift recovery on translated and reflected copies") {
    auto L = SupportSet::of({0, 1, 8, 11});
    REQUIRE(is_B3(L));

    auto direct = recover_shift(L, L.translated(-5));  // L' = L - 5
    REQUIRE(direct.has_value());
    CHECK(direct->orientation == ShiftOrientation::direct);
    CHECK(direct->m == 5);

    auto refl = recover_shift(L, L.reflected(4));  // L' = 4 - L
    REQUIRE(refl.has_value());
    CHECK(refl->orientation == ShiftOrientation::reflected);
    CHECK(refl->m == 4);

    CHECK_FALSE(recover_shift(L, SupportSet::of({0, 1, 2, 3})).has_value());
  }

  TEST_CASE("symmetric sets resolve to the direct orientation") {
    // {0,5} = 5 - {0,5}: both readings fit, direct must win
    auto L = SupportSet::of({0, 5});
    auto w = recover_shift(L, L);
    REQUIRE(w.has_value());
    CHECK(w->orientation == ShiftOrientation::direct);
    CHECK(w->m == 0);
  }

  TEST_CASE("recover_shift refuses non-B3 hypotheses") {
    auto L = SupportSet::of({0, 1, 2});
    CHECK_THROWS_WITH_AS(recover_shift(L, L), "hypothesis violated: set is not B3",
                         std::invalid_argument);
  }

  TEST_CASE("size cap is enforced") {
    std::vector<int> big;
    for (int i = 0; i < 33; ++i) big.push_back(i * i * i);
    CHECK_THROWS_AS(is_B3(SupportSet::of(big)), std::invalid_argument);
  }

  TEST_CASE("randomized roundtrips recover every planted shift") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> shift(-30, 30);
    int done = 0, attempts = 0;
    while (done < 100 && attempts < 2000) {
      ++attempts;
      SupportSet L = rand_set(rng, 4, 40);
      if (!is_B3(L)) continue;
      ++done;
      int m = shift(rng);
      auto d = recover_shift(L, L.translated(-m));
      REQUIRE(d.has_value());
      CHECK(d->orientation == ShiftOrientation::direct);
      CHECK(d->m == m);
      auto r = recover_shift(L, L.reflected(m));
      REQUIRE(r.has_value());
      CHECK(r->orientation == ShiftOrientation::reflected);
      CHECK(r->m == m);
    }
    CHECK(done == 100);
  }
}
