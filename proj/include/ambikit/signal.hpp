// Finite complex sequences and their combinatorial support structure.
//
// A Signal is a finitely supported sequence: coefficient i of `coeffs`
// belongs to index offset + i.  The zero signal is the empty list.
// Normalized form: offset 0, first and last coefficients nonzero.  All
// partner machinery assumes normalized inputs.

#pragma once

#include "ambikit/scalar.hpp"

#include <optional>
#include <vector>

namespace ambikit {

struct Signal {
  int offset = 0;
  std::vector<Scalar> coeffs;

  static Signal from_ints(const std::vector<long>& v, int offset = 0);

  bool is_zero() const;
  bool is_normalized() const;
  // degree N of a normalized signal in S(N)
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  // true when every coefficient is exact
  bool all_exact() const;
  Signal to_float() const;
  const Scalar& at(int index) const;  // absolute index, zero outside
};

struct NormalizeResult {
  Signal signal;  // offset 0, endpoints nonzero
  int shift;      // original absolute index of the first kept coefficient
};

// Strip zero margins and rebase to offset 0.  Errors on the zero signal.
NormalizeResult normalize(const Signal& s);

// Undo: place a normalized signal back at absolute position `shift`.
Signal denormalize(const Signal& s, int shift);

bool signals_equal(const Signal& a, const Signal& b, const Tol& tol);

// c_j = a_j * conj(a_{j-k}) for j = 0..N, as a dense length-N+1 list.
// |k| > N yields the all-zero list.  Requires a normalized.
std::vector<Scalar> cross_sequence(const Signal& a, int k);

// s_m = sum_n c_n * conj(c_{n-m}) for m = -(L-1)..L-1, returned as a dense
// list of length 2L-1; entry i holds m = i-(L-1).  Hermitian: s_{-m} = conj(s_m).
std::vector<Scalar> autocorrelation(const std::vector<Scalar>& c);

// Sorted set of integers; the support index sets of signals and multipliers.
struct SupportSet {
  std::vector<int> elems;  // sorted, unique

  static SupportSet of(std::vector<int> v);
  bool contains(int n) const;
  int size() const { return static_cast<int>(elems.size()); }
  bool empty() const { return elems.empty(); }
  int min() const { return elems.front(); }
  int max() const { return elems.back(); }
  friend bool operator==(const SupportSet& a, const SupportSet& b) { return a.elems == b.elems; }

  SupportSet translated(int m) const;  // { n + m }
  SupportSet reflected(int m) const;   // { m - n }
};

SupportSet support(const Signal& s);

// { n1 - n2 : n1, n2 in L } as a set (contains 0 whenever L is nonempty)
SupportSet difference_set(const SupportSet& L);

// all sums n1 + n2 + n3 with n1 <= n2 <= n3, with multiplicity, sorted
std::vector<long long> sum3_multiset(const SupportSet& L);

}  // namespace ambikit
