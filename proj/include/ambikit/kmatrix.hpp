// Ambiguity matrices, the Gram partner criterion, and Kronecker-style
// constructions that transport partner pairs to longer sequences.
//
// For a in S(N) the ambiguity matrix K_a has entries a_m a_l placed at
// row i = l - m, column j = l + m; the occupied positions form the lattice
// image of the square [0,N]^2 under (m,l) -> (l-m, l+m).  Storage is sparse
// and keyed by (m,l).  K_a K_a^* = K_b K_b^* is equivalent to a and b being
// partners, which gives a second, independent route to the decision.  The
// order matters: the inner product runs over the l+m axis, and the opposite
// pairing is not partner-invariant.

#pragma once

#include "ambikit/signal.hpp"

#include <map>
#include <utility>
#include <vector>

namespace ambikit {

// Minimal sparse complex matrix; rows and cols are 0-based dense bounds.
struct SparseMatrix {
  long rows = 0, cols = 0;
  std::map<std::pair<long, long>, Scalar> at;

  void set(long r, long c, Scalar v);
};

SparseMatrix adjoint(const SparseMatrix& m);
SparseMatrix multiply(const SparseMatrix& x, const SparseMatrix& y);
// Block convention: the (iB, jB) block of kron(A, B) is A * B[iB, jB].
SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b);
bool matrices_equal(const SparseMatrix& x, const SparseMatrix& y, const Tol& tol);

struct AmbiguityMatrix {
  int n = 0;                                  // degree of the generating sequence
  std::map<std::pair<int, int>, Scalar> entries;  // (m, l) -> a_m a_l, zeros omitted
};

AmbiguityMatrix build_K(const Signal& a);

// dense view: (2n+1) x (2n+1), row l - m + n, column l + m
SparseMatrix to_sparse(const AmbiguityMatrix& k);

// K K^* as a sparse matrix (exact zeros dropped)
SparseMatrix gram(const AmbiguityMatrix& k);

// Gram criterion: K_a K_a^* = K_b K_b^*.  Agrees with is_partner.
bool gram_equal(const Signal& a, const Signal& b, const Tol& tol = {});

// Lattice-level Kronecker product; by construction
// kron_matrix(build_K(a), build_K(b)) = build_K(kron_signal(a, b)).
AmbiguityMatrix kron_matrix(const AmbiguityMatrix& ka, const AmbiguityMatrix& kb);

// c with polynomial P_c(z) = P_a(z) P_b(z^{2N+1}), N = deg a.  Partner pairs
// tensor: partners of a and of b give partners of c.
Signal kron_signal(const Signal& a, const Signal& b);

// Tight spacing variant: P_c(z) = P_a(z) P_b(z^{N+1}).
Signal kron_signal_tight(const Signal& a, const Signal& b);

struct InterleaveResult {
  Signal a, b;
  bool degenerate = false;  // lambda == 0 shortened b; both outputs renormalized
};

// a = (alpha_0, lambda alpha_0, alpha_1, lambda alpha_1, ...),
// b = (conj(lambda) alpha_0, alpha_0, ...): partners for every lambda.
InterleaveResult interleave(const std::vector<Scalar>& alpha, const Scalar& lambda);

struct IterFlip {
  int j;
  enum class Kind { modulate, swap } kind;
  Scalar c;  // unimodular
};

// Coefficients of prod_{j=0}^{J} (alpha_j + beta_j z^{3^j}) with optional
// per-factor flips: modulate (alpha_j + c beta_j z^{3^j}) or swap
// (beta_j + c alpha_j z^{3^j}).  Any flip assignment yields a partner of
// the unflipped product.
Signal iterated_product(const std::vector<std::pair<Scalar, Scalar>>& factors,
                        const std::vector<IterFlip>& flips);

}  // namespace ambikit
