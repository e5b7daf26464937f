#pragma once

// Free-group words, symmetric automorphisms, the Dahm representation of the
// ring groups, and the McCool generators alpha_ij.
//
// Composition convention: compose(a, b) applies b first, so evaluating a
// group word letter by letter from the left is a homomorphism into the
// automorphism group with this product.

#include <cstdlib>
#include <string>
#include <vector>

#include "ringwicket/errors.hpp"
#include "ringwicket/presentations.hpp"
#include "ringwicket/quotients.hpp"
#include "ringwicket/words.hpp"

namespace ringwicket {

// A freely reduced word in the rank-n free group on x_1..x_n.
// Letters are (basis index, +-1), stored reduced at all times.
struct FreeWord {
  int rank = 0;
  std::vector<std::pair<int, int>> letters;  // (index 1..rank, exp +-1)

  FreeWord() = default;
  explicit FreeWord(int r) : rank(r) {}

  static FreeWord basis(int rank, int i, int e = 1) {
    FreeWord w(rank);
    w.push(i, e);
    return w;
  }

  void push(int i, int e) {
    if (i < 1 || i > rank) throw DomainError("free letter index out of range");
    if (!letters.empty() && letters.back().first == i && letters.back().second == -e)
      letters.pop_back();
    else
      letters.emplace_back(i, e);
  }

  void push_word(const FreeWord& w) {
    if (w.rank != rank) throw DomainError("rank mismatch");
    for (const auto& [i, e] : w.letters) push(i, e);
  }

  void push_inverse(const FreeWord& w) {
    if (w.rank != rank) throw DomainError("rank mismatch");
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) push(it->first, -it->second);
  }

  FreeWord inverse() const {
    FreeWord out(rank);
    out.push_inverse(*this);
    return out;
  }

  bool empty() const { return letters.empty(); }
  std::size_t size() const { return letters.size(); }

  friend bool operator==(const FreeWord& a, const FreeWord& b) {
    return a.rank == b.rank && a.letters == b.letters;
  }
  friend bool operator!=(const FreeWord& a, const FreeWord& b) { return !(a == b); }
};

inline std::string to_string(const FreeWord& w) {
  if (w.letters.empty()) return "1";
  std::string s;
  for (std::size_t k = 0; k < w.letters.size(); ++k) {
    if (k) s += ' ';
    s += "x" + std::to_string(w.letters[k].first);
    if (w.letters[k].second == -1) s += "^-1";
  }
  return s;
}

// Parses `x<i>(^<int>)?` sequences ("1" = empty word).
inline FreeWord parse_free_word(std::string_view text, int rank) {
  FreeWord out(rank);
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    if (text[pos] == '1') {
      ++pos;
      continue;
    }
    if (text[pos] != 'x') throw ParseError("expected letter x<i>", pos);
    ++pos;
    long long i = 0, e = 1;
    if (!detail::parse_int(text, pos, i) || i < 1) throw ParseError("expected basis index", pos);
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      if (!detail::parse_int(text, pos, e)) throw ParseError("expected exponent", pos);
    }
    for (long long k = 0; k < std::llabs(e); ++k) out.push(static_cast<int>(i), e < 0 ? -1 : 1);
  }
  return out;
}

// An automorphism of the rank-n free group given by the images of the basis
// letters. The ones produced here are symmetric: every image is a conjugate
// of a basis letter or of its inverse.
struct SymAuto {
  int rank = 0;
  std::vector<FreeWord> images;  // images[i-1] = image of x_i

  SymAuto() = default;

  static SymAuto identity(int rank) {
    SymAuto a;
    a.rank = rank;
    a.images.reserve(rank);
    for (int i = 1; i <= rank; ++i) a.images.push_back(FreeWord::basis(rank, i));
    return a;
  }

  friend bool operator==(const SymAuto& a, const SymAuto& b) {
    return a.rank == b.rank && a.images == b.images;
  }
  friend bool operator!=(const SymAuto& a, const SymAuto& b) { return !(a == b); }
};

// Applies a to w by substituting images (result freely reduced).
inline FreeWord apply(const SymAuto& a, const FreeWord& w) {
  if (a.rank != w.rank) throw DomainError("rank mismatch");
  FreeWord out(w.rank);
  for (const auto& [i, e] : w.letters) {
    if (e == 1)
      out.push_word(a.images[i - 1]);
    else
      out.push_inverse(a.images[i - 1]);
  }
  return out;
}

// compose(a, b) = a after b.
inline SymAuto compose(const SymAuto& a, const SymAuto& b) {
  if (a.rank != b.rank) throw DomainError("rank mismatch");
  SymAuto out;
  out.rank = a.rank;
  out.images.reserve(a.rank);
  for (int i = 1; i <= a.rank; ++i) out.images.push_back(apply(a, b.images[i - 1]));
  return out;
}

inline bool is_identity(const SymAuto& a) {
  for (int i = 1; i <= a.rank; ++i) {
    const FreeWord& w = a.images[i - 1];
    if (w.letters.size() != 1 || w.letters[0] != std::make_pair(i, 1)) return false;
  }
  return true;
}

// Checks the symmetric-automorphism shape: each image is w x_j^± w^-1 and
// i -> j is a permutation.
inline bool is_symmetric_shape(const SymAuto& a) {
  std::vector<bool> hit(static_cast<std::size_t>(a.rank), false);
  for (const FreeWord& im : a.images) {
    if (im.letters.size() % 2 == 0) return false;
    const std::size_t h = im.letters.size() / 2;
    for (std::size_t k = 0; k < h; ++k) {
      const auto& l = im.letters[k];
      const auto& r = im.letters[im.letters.size() - 1 - k];
      if (l.first != r.first || l.second != -r.second) return false;
    }
    const int j = im.letters[h].first;
    if (hit[static_cast<std::size_t>(j - 1)]) return false;
    hit[static_cast<std::size_t>(j - 1)] = true;
  }
  return true;
}

namespace detail {

// Pinned generator actions (validated by relator nullity, see tests):
//   sigma_i : x_i <-> x_{i+1}
//   rho_i   : x_i -> x_{i+1},  x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}
//   tau_i   : x_i -> x_i^-1
//   alpha_ij: x_i -> x_j^-1 x_i x_j
inline SymAuto letter_auto(const GenLetter& l, int n) {
  SymAuto a = SymAuto::identity(n);
  const int i = l.index;
  switch (l.kind) {
    case Kind::Sigma: {
      a.images[i - 1] = FreeWord::basis(n, i + 1);
      a.images[i] = FreeWord::basis(n, i);
      break;
    }
    case Kind::Rho: {
      if (l.exp == 1) {
        a.images[i - 1] = FreeWord::basis(n, i + 1);
        FreeWord w(n);
        w.push(i + 1, -1);
        w.push(i, 1);
        w.push(i + 1, 1);
        a.images[i] = w;
      } else {
        // rho_i^-1: x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i
        FreeWord w(n);
        w.push(i, 1);
        w.push(i + 1, 1);
        w.push(i, -1);
        a.images[i - 1] = w;
        a.images[i] = FreeWord::basis(n, i);
      }
      break;
    }
    case Kind::Tau: {
      a.images[i - 1] = FreeWord::basis(n, i, -1);
      break;
    }
    case Kind::Alpha: {
      const int j = l.jndex;
      FreeWord w(n);
      w.push(j, -l.exp);
      w.push(i, 1);
      w.push(j, l.exp);
      a.images[i - 1] = w;
      break;
    }
  }
  return a;
}

}  // namespace detail

// Dahm representation: homomorphic substitution of the pinned generator
// actions, letters applied left to right.
inline SymAuto dahm_rep(const GroupWord& w) {
  SymAuto acc = SymAuto::identity(w.group.n);
  for (const auto& l : w.letters) acc = compose(acc, detail::letter_auto(l, w.group.n));
  return acc;
}

// The McCool generator alpha_ij: x_i -> x_j^-1 x_i x_j, other letters fixed.
inline SymAuto mccool(int i, int j, int n) {
  if (i == j || i < 1 || j < 1 || i > n || j > n)
    throw DomainError("mccool: indices must be distinct and within 1..n");
  return detail::letter_auto(alpha(i, j), n);
}

namespace detail {

// Word in sigma letters whose permutation image (and Dahm basis action)
// realizes `perm` (one-line form, perm[k-1] = image of k). Bubble-sorting
// the one-line form with recorded adjacent swaps expresses perm as a
// product of transpositions; reversing the record gives the word.
inline std::vector<int> adjacent_transposition_word(std::vector<int> perm) {
  std::vector<int> rec;
  const int n = static_cast<int>(perm.size());
  bool moved = true;
  while (moved) {
    moved = false;
    for (int k = 0; k + 1 < n; ++k)
      if (perm[k] > perm[k + 1]) {
        std::swap(perm[k], perm[k + 1]);
        rec.push_back(k + 1);
        moved = true;
      }
  }
  std::reverse(rec.begin(), rec.end());
  return rec;
}

}  // namespace detail

// A word in UR_n (rho/sigma letters) whose Dahm representation equals
// mccool(i, j, n): a conjugate of rho_1 sigma_1^-1 by a permutation word.
// The equality is checked at construction; on failure the alternative base
// word sigma_1^-1 rho_1 is tried before giving up.
inline GroupWord alpha_word(int i, int j, int n) {
  if (i == j || i < 1 || j < 1 || i > n || j > n)
    throw DomainError("alpha_word: indices must be distinct and within 1..n");
  const GroupId g{Family::UR, n};
  // permutation sending 1 -> i, 2 -> j, rest filled ascending
  std::vector<int> perm{i, j};
  for (int v = 1; v <= n; ++v)
    if (v != i && v != j) perm.push_back(v);
  const std::vector<int> sword = detail::adjacent_transposition_word(perm);
  for (int variant = 0; variant < 2; ++variant) {
    GroupWord w;
    w.group = g;
    for (int k : sword) w.letters.push_back(sigma(k));
    if (variant == 0) {
      w.letters.push_back(rho(1));
      w.letters.push_back(sigma(1, -1));
    } else {
      w.letters.push_back(sigma(1, -1));
      w.letters.push_back(rho(1));
    }
    for (auto it = sword.rbegin(); it != sword.rend(); ++it)
      w.letters.push_back(sigma(*it, -1));
    w = GroupWord(g, std::move(w.letters));
    if (dahm_rep(w) == mccool(i, j, n)) return w;
  }
  throw DomainError("alpha_word: construction-failed for alpha_" + std::to_string(i) + "," +
                    std::to_string(j));
}

// Word problem for R_n: Dahm's identification is faithful.
inline bool word_is_trivial_R(const GroupWord& w) {
  if (w.group.family != Family::R) throw DomainError("expected an R-family word");
  return is_identity(dahm_rep(w));
}

// Word problem for UR_n via the injection UR_n -> R_n.
inline bool word_is_trivial_UR(const GroupWord& w) {
  if (w.group.family != Family::UR) throw DomainError("expected a UR-family word");
  return is_identity(dahm_rep(w));
}

// Word problem for VR_n: trivial iff the twist image vanishes and the
// rho/sigma part of the u*t normal form is trivial in UR_n.
inline bool word_is_trivial_VR(const GroupWord& w) {
  if (w.group.family != Family::VR) throw DomainError("expected a VR-family word");
  if (!twist_image(w).is_identity()) return false;
  const TauNormalForm nf = tau_normal_form(w);
  return is_identity(dahm_rep(nf.u));
}

// Word problem for PUR_n: alpha words are literal automorphisms.
inline bool word_is_trivial_PUR(const GroupWord& w) {
  if (w.group.family != Family::PUR) throw DomainError("expected a PUR-family word");
  return is_identity(dahm_rep(w));
}

}  // namespace ringwicket
