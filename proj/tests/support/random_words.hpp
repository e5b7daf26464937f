#pragma once

// Seeded random word generation for the group families.

#include <random>

#include "ringwicket/words.hpp"

namespace ringwicket::testing {

inline GenLetter random_letter(GroupId g, std::mt19937_64& rng) {
  const int n = g.n;
  const int e = rng() % 2 ? 1 : -1;
  if (g.family == Family::PUR) {
    if (n < 2) throw DomainError("PUR_1 has no generators");
    int i = 1 + static_cast<int>(rng() % n);
    int j = 1 + static_cast<int>(rng() % n);
    while (j == i) j = 1 + static_cast<int>(rng() % n);
    return alpha(i, j, e);
  }
  const bool with_tau = family_has_tau(g.family);
  if (!with_tau && n < 2) throw DomainError("no generators for this group");
  const int kinds = (n >= 2 ? 2 : 0) + (with_tau ? 1 : 0);
  const int pick = static_cast<int>(rng() % kinds);
  if (n >= 2 && pick == 0) return rho(1 + static_cast<int>(rng() % (n - 1)), e);
  if (n >= 2 && pick == 1) return sigma(1 + static_cast<int>(rng() % (n - 1)), e);
  return tau(1 + static_cast<int>(rng() % n), e);
}

inline GroupWord random_word(GroupId g, std::size_t len, std::mt19937_64& rng) {
  GroupWord w;
  w.group = g;
  for (std::size_t k = 0; k < len; ++k) w.letters.push_back(random_letter(g, rng));
  return w;
}

}  // namespace ringwicket::testing
