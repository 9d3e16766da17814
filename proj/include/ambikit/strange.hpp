// Randomized search for partners outside the trivial orbit.
//
// This is a heuristic, not a decision procedure: absence of output is
// evidence, never proof.  Each restart minimizes the squared deviation of
// the candidate's signature from the target signature by gradient-free
// coordinate descent.  Minima below the residual threshold are gauge-fixed,
// filtered against the trivial orbit, and (for exact targets) exactified by
// rational reconstruction; only candidates whose exact form passes the exact
// partner test and fails the exact trivial test are labeled `exact`.
// Everything else that survives the float filter is `numeric_only`.

#pragma once

#include "ambikit/signal.hpp"

#include <cstdint>
#include <vector>

namespace ambikit {

struct StrangeOptions {
  long restarts = 2000;
  double tol = 1e-10;  // residual threshold, sqrt of the squared deviation
  std::uint64_t seed = 1;
  std::vector<Signal> hints;  // extra starting points tried before the random ones
};

enum class Certificate { exact, numeric_only };

struct StrangeCandidate {
  Signal b;
  double residual;
  Certificate cert;
};

// Deterministic for fixed options: restart i derives its own generator from
// (seed, i), so thread count does not affect the result.
std::vector<StrangeCandidate> strange_search(const Signal& a, const StrangeOptions& opts = {});

}  // namespace ambikit
