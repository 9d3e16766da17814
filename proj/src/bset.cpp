#include "ambikit/bset.hpp"

#include <algorithm>
#include <stdexcept>

namespace ambikit {

namespace {

void check_cap(const SupportSet& L) {
  if (L.size() > 32) throw std::invalid_argument("set too large (cap 32)");
}

}  // namespace

bool is_B2(const SupportSet& L) {
  check_cap(L);
  std::vector<long long> sums;
  const auto& e = L.elems;
  for (size_t i = 0; i < e.size(); ++i)
    for (size_t j = i; j < e.size(); ++j) sums.push_back(static_cast<long long>(e[i]) + e[j]);
  std::sort(sums.begin(), sums.end());
  return std::adjacent_find(sums.begin(), sums.end()) == sums.end();
}

bool is_B3(const SupportSet& L) {
  check_cap(L);
  auto sums = sum3_multiset(L);
  return std::adjacent_find(sums.begin(), sums.end()) == sums.end();
}

std::optional<ShiftWitness> recover_shift(const SupportSet& L, const SupportSet& Lp) {
  check_cap(L);
  check_cap(Lp);
  if (!is_B3(L)) throw std::invalid_argument("hypothesis violated: set is not B3");
  if (L.empty() || Lp.empty() || L.size() != Lp.size()) return std::nullopt;
  if (!(difference_set(L) == difference_set(Lp))) return std::nullopt;

  // translations are pinned by the extremes, so each orientation has exactly
  // one candidate; prefer direct
  long m_direct = static_cast<long>(L.min()) - Lp.min();
  if (Lp.translated(static_cast<int>(m_direct)) == L)
    return ShiftWitness{ShiftOrientation::direct, m_direct};
  long m_reflect = static_cast<long>(L.max()) + Lp.min();
  if (Lp.reflected(static_cast<int>(m_reflect)) == L)
    return ShiftWitness{ShiftOrientation::reflected, m_reflect};
  return std::nullopt;
}

}  // namespace ambikit
