// B2/B3 set tests and shift recovery from difference sets.
//
// A set is B2 (resp. B3) when all pairwise (triple) sums are distinct.  For
// a B3 set L, any L' with the same difference set is either L - m or m - L;
// recover_shift finds which.  Sizes are capped at 32 elements: the tests
// hash all sums, and larger supports are outside this library's scope.

#pragma once

#include "ambikit/signal.hpp"

#include <optional>

namespace ambikit {

bool is_B2(const SupportSet& L);
bool is_B3(const SupportSet& L);

enum class ShiftOrientation { direct, reflected };

struct ShiftWitness {
  ShiftOrientation orientation;
  long m;  // direct: L' = L - m; reflected: L' = m - L
};

// Requires L to be B3 (throws "hypothesis violated" otherwise).  Returns
// nullopt when the difference sets disagree.  When both orientations fit
// (L symmetric about a point) the direct one is returned.
std::optional<ShiftWitness> recover_shift(const SupportSet& L, const SupportSet& Lp);

}  // namespace ambikit
