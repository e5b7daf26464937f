#pragma once

// Relator sets for the ring and wicket groups, and the rewriting that puts
// a word into the shape u*t with u over {rho,sigma} and t over {tau}.
//
// Relator lists are deterministic: families are emitted in a fixed order,
// and inside a family indices ascend (sign pairs enumerate +1 before -1).

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "ringwicket/words.hpp"

namespace ringwicket {

struct RelatorSet {
  GroupId group;
  std::vector<GroupWord> relators;
};

namespace detail {

inline GroupWord make_word(GroupId g, std::initializer_list<GenLetter> ls) {
  return GroupWord(g, std::vector<GenLetter>(ls));
}

// [x, y] as a relator: x y x^-1 y^-1.
inline GroupWord commutator(GroupId g, GenLetter x, GenLetter y) {
  return make_word(g, {x, y, x.inverse(), y.inverse()});
}

// left = right as the relator left * right^-1.
inline GroupWord relation(GroupId g, std::vector<GenLetter> left, std::vector<GenLetter> right) {
  GroupWord w;
  w.group = g;
  w.letters = std::move(left);
  for (auto it = right.rbegin(); it != right.rend(); ++it) w.letters.push_back(it->inverse());
  return GroupWord(g, std::move(w.letters));
}

constexpr std::array<int, 2> kSigns = {+1, -1};

// Shared rho/sigma relations (the untwisted wicket presentation).
inline void append_untwisted_relators(GroupId g, std::vector<GroupWord>& out) {
  const int n = g.n;
  // braid relations among the rho's, then among the sigma's
  for (int i = 1; i + 1 <= n - 1; ++i)
    out.push_back(relation(g, {rho(i), rho(i + 1), rho(i)}, {rho(i + 1), rho(i), rho(i + 1)}));
  for (int i = 1; i + 1 <= n - 1; ++i)
    out.push_back(
        relation(g, {sigma(i), sigma(i + 1), sigma(i)}, {sigma(i + 1), sigma(i), sigma(i + 1)}));
  // far commutation
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 2; j <= n - 1; ++j) out.push_back(commutator(g, rho(i), rho(j)));
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 2; j <= n - 1; ++j) out.push_back(commutator(g, sigma(i), sigma(j)));
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= n - 1; ++j)
      if (j < i - 1 || j > i + 1) out.push_back(commutator(g, rho(i), sigma(j)));
  // mixed triple relations
  for (int i = 1; i + 1 <= n - 1; ++i) {
    out.push_back(relation(g, {rho(i), sigma(i + 1), sigma(i)}, {sigma(i + 1), sigma(i), rho(i + 1)}));
    out.push_back(relation(g, {sigma(i), sigma(i + 1), rho(i)}, {rho(i + 1), sigma(i), sigma(i + 1)}));
    out.push_back(relation(g, {sigma(i), rho(i + 1), rho(i)}, {rho(i + 1), rho(i), sigma(i + 1)}));
  }
}

// The tau relations added when passing from UW_n to W_n. All epsilon/eta
// instances are emitted, redundant ones included.
inline void append_tau_relators(GroupId g, std::vector<GroupWord>& out) {
  const int n = g.n;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) out.push_back(commutator(g, tau(i), tau(j)));
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= n; ++j)
      if (j != i && j != i + 1) out.push_back(commutator(g, rho(i), tau(j)));
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= n; ++j)
      if (j != i && j != i + 1) out.push_back(commutator(g, sigma(i), tau(j)));
  // tau_i^e sigma_i^h = sigma_i^h tau_{i+1}^e  and  tau_{i+1}^e sigma_i^h = sigma_i^h tau_i^e
  for (int i = 1; i <= n - 1; ++i)
    for (int e : kSigns)
      for (int h : kSigns) {
        out.push_back(relation(g, {tau(i, e), sigma(i, h)}, {sigma(i, h), tau(i + 1, e)}));
        out.push_back(relation(g, {tau(i + 1, e), sigma(i, h)}, {sigma(i, h), tau(i, e)}));
      }
  // tau_i^e rho_i = rho_i tau_{i+1}^e  and  tau_{i+1}^e rho_i = sigma_i^-e rho_i^-1 sigma_i^e tau_i^e
  for (int i = 1; i <= n - 1; ++i)
    for (int e : kSigns) {
      out.push_back(relation(g, {tau(i, e), rho(i)}, {rho(i), tau(i + 1, e)}));
      out.push_back(relation(g, {tau(i + 1, e), rho(i)},
                             {sigma(i, -e), rho(i, -1), sigma(i, e), tau(i, e)}));
    }
  // tau_i^e rho_i^-1 = sigma_i^-e rho_i sigma_i^e tau_{i+1}^e  and  tau_{i+1}^e rho_i^-1 = rho_i^-1 tau_i^e
  for (int i = 1; i <= n - 1; ++i)
    for (int e : kSigns) {
      out.push_back(relation(g, {tau(i, e), rho(i, -1)},
                             {sigma(i, -e), rho(i), sigma(i, e), tau(i + 1, e)}));
      out.push_back(relation(g, {tau(i + 1, e), rho(i, -1)}, {rho(i, -1), tau(i, e)}));
    }
}

inline void append_sigma_squares(GroupId g, std::vector<GroupWord>& out) {
  for (int i = 1; i <= g.n - 1; ++i) out.push_back(make_word(g, {sigma(i), sigma(i)}));
}

inline void append_tau_squares(GroupId g, std::vector<GroupWord>& out) {
  for (int i = 1; i <= g.n; ++i) out.push_back(make_word(g, {tau(i), tau(i)}));
}

// McCool relations on the alpha_ij generators of PUR_n.
inline void append_pur_relators(GroupId g, std::vector<GroupWord>& out) {
  const int n = g.n;
  // [alpha_ij, alpha_kl] for disjoint pairs, each unordered pair-of-pairs once
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (j == i) continue;
      for (int k = i; k <= n; ++k)
        for (int l = 1; l <= n; ++l) {
          if (l == k) continue;
          if (std::make_pair(k, l) <= std::make_pair(i, j)) continue;
          if (k == i || k == j || l == i || l == j) continue;
          out.push_back(commutator(g, alpha(i, j), alpha(k, l)));
        }
    }
  // [alpha_ik, alpha_jk] for i < j
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        if (k == i || k == j) continue;
        out.push_back(commutator(g, alpha(i, k), alpha(j, k)));
      }
  // alpha_ij alpha_ik alpha_jk = alpha_jk alpha_ik alpha_ij, all ordered triples
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (j == i) continue;
      for (int k = 1; k <= n; ++k) {
        if (k == i || k == j) continue;
        out.push_back(relation(g, {alpha(i, j), alpha(i, k), alpha(j, k)},
                               {alpha(j, k), alpha(i, k), alpha(i, j)}));
      }
    }
}

}  // namespace detail

// The relator set of the cited presentation for the group. The UR/VR/R sets
// are literally the smaller presentation plus sigma^2 (and tau^2 for R)
// relators, with no manual simplification.
inline RelatorSet relators(GroupId g) {
  if (g.n < 1) throw DomainError("group size must be >= 1");
  RelatorSet rs;
  rs.group = g;
  switch (g.family) {
    case Family::UW:
      detail::append_untwisted_relators(g, rs.relators);
      break;
    case Family::UR:
      detail::append_untwisted_relators(g, rs.relators);
      detail::append_sigma_squares(g, rs.relators);
      break;
    case Family::W:
      detail::append_untwisted_relators(g, rs.relators);
      detail::append_tau_relators(g, rs.relators);
      break;
    case Family::VR:
      detail::append_untwisted_relators(g, rs.relators);
      detail::append_tau_relators(g, rs.relators);
      detail::append_sigma_squares(g, rs.relators);
      break;
    case Family::R:
      detail::append_untwisted_relators(g, rs.relators);
      detail::append_tau_relators(g, rs.relators);
      detail::append_sigma_squares(g, rs.relators);
      detail::append_tau_squares(g, rs.relators);
      break;
    case Family::PUR:
      detail::append_pur_relators(g, rs.relators);
      break;
  }
  return rs;
}

// Result of the u*t rewriting: u over {rho,sigma}, t over {tau}, and
// u concat t equal to the input word in its group.
struct TauNormalForm {
  GroupWord u;
  GroupWord t;
};

// Rewrites w into the product u*t using only the tau relations of the W_n
// presentation. Strategy: repeatedly rewrite the rightmost adjacent pair
// (tau letter, rho/sigma letter). Reading the per-tau counts of rho/sigma
// letters to their right from the right end, each step decreases the
// sequence lexicographically, so the loop terminates; produced sigma
// letters never re-expand, so total growth is linear per input letter.
inline TauNormalForm tau_normal_form(const GroupWord& w) {
  if (!family_has_tau(w.group.family) && w.group.family != Family::UW &&
      w.group.family != Family::UR)
    throw DomainError("tau_normal_form: not defined for " + w.group.str());
  std::vector<GenLetter> ls = w.letters;
  for (;;) {
    // rightmost (tau, rho/sigma) adjacency
    std::size_t pos = ls.size();
    for (std::size_t k = ls.size(); k-- > 1;) {
      if (ls[k - 1].kind == Kind::Tau &&
          (ls[k].kind == Kind::Rho || ls[k].kind == Kind::Sigma)) {
        pos = k - 1;
        break;
      }
    }
    if (pos == ls.size()) break;
    const GenLetter t0 = ls[pos];
    const GenLetter x = ls[pos + 1];
    const int i = x.index;
    const int e = t0.exp;
    std::vector<GenLetter> repl;
    if (t0.index != i && t0.index != i + 1) {
      repl = {x, t0};  // far commutation
    } else if (x.kind == Kind::Sigma) {
      // tau_i^e sigma_i^h -> sigma_i^h tau_{i+1}^e ; tau_{i+1}^e sigma_i^h -> sigma_i^h tau_i^e
      repl = {x, tau(t0.index == i ? i + 1 : i, e)};
    } else if (x.exp == 1) {
      if (t0.index == i)
        repl = {rho(i), tau(i + 1, e)};
      else
        repl = {sigma(i, -e), rho(i, -1), sigma(i, e), tau(i, e)};
    } else {
      if (t0.index == i)
        repl = {sigma(i, -e), rho(i), sigma(i, e), tau(i + 1, e)};
      else
        repl = {rho(i, -1), tau(i, e)};
    }
    ls.erase(ls.begin() + static_cast<std::ptrdiff_t>(pos),
             ls.begin() + static_cast<std::ptrdiff_t>(pos) + 2);
    ls.insert(ls.begin() + static_cast<std::ptrdiff_t>(pos), repl.begin(), repl.end());
  }
  TauNormalForm nf;
  nf.u.group = w.group;
  nf.t.group = w.group;
  for (const auto& l : ls)
    (l.kind == Kind::Tau ? nf.t : nf.u).letters.push_back(l);
  nf.u = free_reduce(nf.u);
  // the tau's commute pairwise: canonical tail = ascending indices with
  // collected exponents
  std::map<int, long long> texp;
  for (const auto& l : nf.t.letters) texp[l.index] += l.exp;
  nf.t.letters.clear();
  for (const auto& [idx, sum] : texp)
    for (long long k = 0; k < (sum < 0 ? -sum : sum); ++k)
      nf.t.letters.push_back(tau(idx, sum < 0 ? -1 : 1));
  return nf;
}

}  // namespace ringwicket
