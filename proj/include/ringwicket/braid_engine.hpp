#pragma once

// Braid words in B_m, an exact word-problem decision, permutation images,
// and the endpoint homomorphism from the wicket groups into B_{2n}.
//
// The triviality decision evaluates the classical faithful action of B_m on
// the rank-m free group by substitution,
//   sigma_i   : x_i -> x_i x_{i+1} x_i^-1,  x_{i+1} -> x_i
//   sigma_i^-1: x_i -> x_{i+1},             x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}
// with words kept freely reduced: a braid word is trivial iff the induced
// automorphism is the identity. Exact by construction; cross-checked in the
// test suite against a Burau-matrix oracle over integer Laurent polynomials.
//
// Positive crossing convention: the strand with lower index passes in front.
// Relator nullity is convention independent.

#include <map>
#include <string>
#include <vector>

#include "ringwicket/errors.hpp"
#include "ringwicket/free_autos.hpp"
#include "ringwicket/presentations.hpp"
#include "ringwicket/quotients.hpp"
#include "ringwicket/words.hpp"

namespace ringwicket {

struct BraidLetter {
  int index;  // 1..m-1
  int exp;    // +-1

  BraidLetter inverse() const { return {index, -exp}; }
  friend bool operator==(const BraidLetter& a, const BraidLetter& b) {
    return a.index == b.index && a.exp == b.exp;
  }
};

struct BraidWord {
  int strands = 1;
  std::vector<BraidLetter> letters;

  BraidWord() = default;
  explicit BraidWord(int m) : strands(m) {
    if (m < 1) throw DomainError("braid strand count must be >= 1");
  }
  BraidWord(int m, std::vector<BraidLetter> ls) : strands(m), letters(std::move(ls)) {
    if (m < 1) throw DomainError("braid strand count must be >= 1");
    for (const auto& l : letters) check(l);
  }

  void check(const BraidLetter& l) const {
    if (l.index < 1 || l.index > strands - 1)
      throw DomainError("braid generator index out of range for B_" + std::to_string(strands));
    if (l.exp != 1 && l.exp != -1) throw DomainError("braid letter exponent must be +-1");
  }

  void push(int index, int exp) {
    BraidLetter l{index, exp};
    check(l);
    if (!letters.empty() && letters.back().index == index && letters.back().exp == -exp)
      letters.pop_back();
    else
      letters.push_back(l);
  }

  BraidWord inverse() const {
    BraidWord out(strands);
    for (auto it = letters.rbegin(); it != letters.rend(); ++it)
      out.letters.push_back(it->inverse());
    return out;
  }

  friend BraidWord operator*(const BraidWord& a, const BraidWord& b) {
    if (a.strands != b.strands) throw DomainError("strand count mismatch");
    BraidWord out(a.strands);
    out.letters = a.letters;
    out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
    return out;
  }

  friend bool operator==(const BraidWord& a, const BraidWord& b) {
    return a.strands == b.strands && a.letters == b.letters;
  }
};

inline BraidWord free_reduce(const BraidWord& w) {
  BraidWord out(w.strands);
  for (const auto& l : w.letters) out.push(l.index, l.exp);
  return out;
}

inline std::string to_string(const BraidWord& w) {
  if (w.letters.empty()) return "1";
  std::string s;
  for (std::size_t k = 0; k < w.letters.size(); ++k) {
    if (k) s += ' ';
    s += "b" + std::to_string(w.letters[k].index);
    if (w.letters[k].exp == -1) s += "^-1";
  }
  return s;
}

// Parses `b<index>(^<int>)?` sequences ("1" = empty braid).
inline BraidWord parse_braid(std::string_view text, int strands) {
  BraidWord out(strands);
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
    if (text[pos] != 'b') throw ParseError("expected braid letter b<i>", pos);
    ++pos;
    long long i = 0, e = 1;
    if (!detail::parse_int(text, pos, i) || i < 1) throw ParseError("expected generator index", pos);
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      if (!detail::parse_int(text, pos, e)) throw ParseError("expected exponent", pos);
    }
    BraidLetter l{static_cast<int>(i), e < 0 ? -1 : 1};
    out.check(l);
    for (long long k = 0; k < (e < 0 ? -e : e); ++k) out.letters.push_back(l);
  }
  return out;
}

// Underlying permutation of the braid (strand start -> strand end).
inline Perm braid_perm(const BraidWord& w) {
  Perm acc(w.strands);
  for (const auto& l : w.letters)
    acc = acc * Perm::transposition(w.strands, l.index, l.index + 1);
  return acc;
}

// The automorphism of the rank-m free group induced by the braid.
inline SymAuto braid_action(const BraidWord& w) {
  const int m = w.strands;
  SymAuto acc = SymAuto::identity(m);
  for (const auto& l : w.letters) {
    SymAuto g = SymAuto::identity(m);
    const int i = l.index;
    if (l.exp == 1) {
      FreeWord conj(m);
      conj.push(i, 1);
      conj.push(i + 1, 1);
      conj.push(i, -1);
      g.images[i - 1] = conj;
      g.images[i] = FreeWord::basis(m, i);
    } else {
      FreeWord conj(m);
      conj.push(i + 1, -1);
      conj.push(i, 1);
      conj.push(i + 1, 1);
      g.images[i - 1] = FreeWord::basis(m, i + 1);
      g.images[i] = conj;
    }
    acc = compose(acc, g);
  }
  return acc;
}

// Exact decision: true iff b represents the identity of B_m.
inline bool braid_is_trivial(const BraidWord& b) { return is_identity(braid_action(b)); }

// Images of the wicket-group generators as braids in B_{2n}. rho_i and
// sigma_i map to 4-crossing block transpositions of the strand pairs
// {2i-1,2i} and {2i+1,2i+2}; tau_i maps to one crossing of strands 2i-1,2i.
struct GeneratorDictionary {
  int n = 0;
  // sign parameters: rho_s1 signs the crossings with strand 2i+1, rho_s2
  // those with strand 2i+2; likewise sigma; tau is a single crossing sign
  int rho_s1 = 1, rho_s2 = -1;
  int sigma_s1 = 1, sigma_s2 = 1;
  int tau_s = 1;

  BraidWord braid_of(const GenLetter& l) const {
    const int m = 2 * n;
    BraidWord w(m);
    const int i = l.index;
    auto block = [&](int s1, int s2) {
      BraidWord b(m);
      b.letters = {{2 * i, s1}, {2 * i - 1, s1}, {2 * i + 1, s2}, {2 * i, s2}};
      return b;
    };
    switch (l.kind) {
      case Kind::Rho: w = block(rho_s1, rho_s2); break;
      case Kind::Sigma: w = block(sigma_s1, sigma_s2); break;
      case Kind::Tau:
        w.letters = {{2 * i - 1, tau_s}};
        break;
      case Kind::Alpha: throw DomainError("no braid image for alpha letters");
    }
    if (l.exp == -1) w = w.inverse();
    return w;
  }

  std::array<int, 5> signs() const { return {rho_s1, rho_s2, sigma_s1, sigma_s2, tau_s}; }
};

// Homomorphic substitution through the dictionary. Words from UW_n use only
// the rho/sigma entries.
inline BraidWord endpoint_hom(const GroupWord& w, const GeneratorDictionary& dict) {
  if (w.group.family != Family::W && w.group.family != Family::UW)
    throw DomainError("endpoint homomorphism expects a W- or UW-family word");
  if (w.group.n != dict.n) throw DomainError("dictionary size mismatch");
  BraidWord out(2 * dict.n);
  for (const auto& l : w.letters) {
    const BraidWord piece = dict.braid_of(l);
    out.letters.insert(out.letters.end(), piece.letters.begin(), piece.letters.end());
  }
  return free_reduce(out);
}

namespace detail {

// Expected permutation image: block transposition for rho/sigma, endpoint
// swap for tau.
inline bool dictionary_perms_ok(const GeneratorDictionary& d) {
  const int m = 2 * d.n;
  for (int i = 1; i <= d.n - 1; ++i) {
    Perm want(m);
    want.img[static_cast<std::size_t>(2 * i - 2)] = 2 * i + 1;
    want.img[static_cast<std::size_t>(2 * i - 1)] = 2 * i + 2;
    want.img[static_cast<std::size_t>(2 * i)] = 2 * i - 1;
    want.img[static_cast<std::size_t>(2 * i + 1)] = 2 * i;
    if (braid_perm(d.braid_of(rho(i))) != want) return false;
    if (braid_perm(d.braid_of(sigma(i))) != want) return false;
  }
  for (int i = 1; i <= d.n; ++i) {
    const Perm want = Perm::transposition(m, 2 * i - 1, 2 * i);
    if (braid_perm(d.braid_of(tau(i))) != want) return false;
  }
  return true;
}

inline bool dictionary_relators_ok(const GeneratorDictionary& d) {
  const RelatorSet rs = relators({Family::W, d.n});
  for (const GroupWord& r : rs.relators)
    if (!braid_is_trivial(endpoint_hom(r, d))) return false;
  return true;
}

}  // namespace detail

struct PinResult {
  GeneratorDictionary dictionary;            // lexicographically least winner
  std::vector<GeneratorDictionary> winners;  // all sign assignments that pass
};

// Searches the finite sign space of the 4-letter block templates (two sign
// parameters each for rho and sigma) and the 1-letter tau template, keeping
// the assignments under which (a) the permutation images are the required
// block transpositions / endpoint swaps and (b) every relator of W_n maps
// to a trivial braid. Candidates are ordered with +1 before -1 in the tuple
// (rho_s1, rho_s2, sigma_s1, sigma_s2, tau_s); the least winner is returned.
inline PinResult pin_dictionary(int n) {
  if (n < 2) throw DomainError("pin_dictionary needs n >= 2");
  PinResult res;
  const std::array<int, 2> order = {+1, -1};
  for (int rs1 : order)
    for (int rs2 : order)
      for (int ss1 : order)
        for (int ss2 : order)
          for (int ts : order) {
            GeneratorDictionary d;
            d.n = n;
            d.rho_s1 = rs1;
            d.rho_s2 = rs2;
            d.sigma_s1 = ss1;
            d.sigma_s2 = ss2;
            d.tau_s = ts;
            if (!detail::dictionary_perms_ok(d)) continue;
            if (!detail::dictionary_relators_ok(d)) continue;
            res.winners.push_back(d);
          }
  if (res.winners.empty())
    throw DomainError("pin_dictionary: no-dictionary-found (template transcription error)");
  res.dictionary = res.winners.front();
  return res;
}

// Cached pinned dictionary per n.
inline const GeneratorDictionary& pinned_dictionary(int n) {
  static std::map<int, GeneratorDictionary> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, pin_dictionary(n).dictionary).first;
  return it->second;
}

// Word problem for W_n and UW_n through the injective endpoint homomorphism.
inline bool word_is_trivial_W(const GroupWord& w) {
  if (w.group.family != Family::W && w.group.family != Family::UW)
    throw DomainError("expected a W- or UW-family word");
  if (w.group.n < 2) return free_reduce(w).empty();
  return braid_is_trivial(endpoint_hom(w, pinned_dictionary(w.group.n)));
}

}  // namespace ringwicket
