#pragma once

// Generator alphabet and words for the ring and wicket groups.
//
// A word is a sequence of letters rho_i / sigma_i / tau_i (plus the alpha_ij
// aliases of the pure untwisted ring group), tagged with the group it lives
// in. Letters are normalized to exponent +-1 eagerly; words are values and
// never mutated in place.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "ringwicket/errors.hpp"

namespace ringwicket {

enum class Family : std::uint8_t { UW, W, UR, VR, R, PUR };

inline std::string_view family_name(Family f) {
  switch (f) {
    case Family::UW: return "UW";
    case Family::W: return "W";
    case Family::UR: return "UR";
    case Family::VR: return "VR";
    case Family::R: return "R";
    case Family::PUR: return "PUR";
  }
  return "?";
}

inline std::optional<Family> family_from_name(std::string_view s) {
  if (s == "UW") return Family::UW;
  if (s == "W") return Family::W;
  if (s == "UR") return Family::UR;
  if (s == "VR") return Family::VR;
  if (s == "R") return Family::R;
  if (s == "PUR") return Family::PUR;
  return std::nullopt;
}

// Does the family admit tau letters? (UW and UR are the untwisted groups.)
inline bool family_has_tau(Family f) {
  return f == Family::W || f == Family::VR || f == Family::R;
}

struct GroupId {
  Family family = Family::R;
  int n = 1;  // number of rings / wickets, >= 1

  friend bool operator==(const GroupId& a, const GroupId& b) {
    return a.family == b.family && a.n == b.n;
  }
  friend bool operator!=(const GroupId& a, const GroupId& b) { return !(a == b); }

  std::string str() const {
    return std::string(family_name(family)) + "_" + std::to_string(n);
  }
};

enum class Kind : std::uint8_t { Rho, Sigma, Tau, Alpha };

// One normalized letter. For Rho/Sigma/Tau only `index` is used; Alpha
// (PUR only) carries the ordered pair (index, jndex).
struct GenLetter {
  Kind kind = Kind::Rho;
  int index = 1;
  int jndex = 0;  // Alpha only
  int exp = 1;    // +1 or -1

  GenLetter inverse() const { return {kind, index, jndex, -exp}; }

  bool cancels(const GenLetter& o) const {
    return kind == o.kind && index == o.index && jndex == o.jndex && exp == -o.exp;
  }

  friend bool operator==(const GenLetter& a, const GenLetter& b) {
    return a.kind == b.kind && a.index == b.index && a.jndex == b.jndex && a.exp == b.exp;
  }
  friend bool operator!=(const GenLetter& a, const GenLetter& b) { return !(a == b); }
  friend bool operator<(const GenLetter& a, const GenLetter& b) {
    return std::tuple(a.kind, a.index, a.jndex, a.exp) <
           std::tuple(b.kind, b.index, b.jndex, b.exp);
  }
};

inline GenLetter rho(int i, int e = 1) { return {Kind::Rho, i, 0, e}; }
inline GenLetter sigma(int i, int e = 1) { return {Kind::Sigma, i, 0, e}; }
inline GenLetter tau(int i, int e = 1) { return {Kind::Tau, i, 0, e}; }
inline GenLetter alpha(int i, int j, int e = 1) { return {Kind::Alpha, i, j, e}; }

// Checks that a letter is legal for the group: index ranges and the
// per-family alphabet (no tau in UW/UR, only alpha in PUR).
inline void check_letter(const GenLetter& l, const GroupId& g) {
  const int n = g.n;
  if (l.exp != 1 && l.exp != -1) throw DomainError("letter exponent must be +-1");
  if (g.family == Family::PUR) {
    if (l.kind != Kind::Alpha)
      throw DomainError("illegal-letter-for-family: " + std::string(family_name(g.family)) +
                        " admits only alpha letters");
  } else if (l.kind == Kind::Alpha) {
    throw DomainError("illegal-letter-for-family: alpha letters are PUR-only");
  }
  switch (l.kind) {
    case Kind::Rho:
    case Kind::Sigma:
      if (l.index < 1 || l.index > n - 1)
        throw DomainError("index-out-of-range: index " + std::to_string(l.index) +
                          " not in [1," + std::to_string(n - 1) + "] for " + g.str());
      break;
    case Kind::Tau:
      if (!family_has_tau(g.family))
        throw DomainError("illegal-letter-for-family: no tau letters in " +
                          std::string(family_name(g.family)));
      if (l.index < 1 || l.index > n)
        throw DomainError("index-out-of-range: index " + std::to_string(l.index) +
                          " not in [1," + std::to_string(n) + "] for " + g.str());
      break;
    case Kind::Alpha:
      if (l.index < 1 || l.index > n || l.jndex < 1 || l.jndex > n)
        throw DomainError("index-out-of-range: alpha indices not in [1," +
                          std::to_string(n) + "] for " + g.str());
      if (l.index == l.jndex)
        throw DomainError("index-out-of-range: alpha indices must be distinct");
      break;
  }
}

struct GroupWord {
  GroupId group;
  std::vector<GenLetter> letters;

  GroupWord() = default;
  GroupWord(GroupId g, std::vector<GenLetter> ls) : group(g), letters(std::move(ls)) {
    for (const auto& l : letters) check_letter(l, group);
  }

  bool empty() const { return letters.empty(); }
  std::size_t size() const { return letters.size(); }

  friend bool operator==(const GroupWord& a, const GroupWord& b) {
    return a.group == b.group && a.letters == b.letters;
  }
  friend bool operator!=(const GroupWord& a, const GroupWord& b) { return !(a == b); }
};

// Removes adjacent cancelling pairs until none remain.
inline GroupWord free_reduce(const GroupWord& w) {
  GroupWord out;
  out.group = w.group;
  out.letters.reserve(w.letters.size());
  for (const auto& l : w.letters) {
    if (!out.letters.empty() && out.letters.back().cancels(l))
      out.letters.pop_back();
    else
      out.letters.push_back(l);
  }
  return out;
}

inline GroupWord invert(const GroupWord& w) {
  GroupWord out;
  out.group = w.group;
  out.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    out.letters.push_back(it->inverse());
  return out;
}

// Appends then freely reduces. The two words must live in the same group.
inline GroupWord concat(const GroupWord& a, const GroupWord& b) {
  if (a.group != b.group)
    throw DomainError("group mismatch: " + a.group.str() + " vs " + b.group.str());
  GroupWord out;
  out.group = a.group;
  out.letters = a.letters;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return free_reduce(out);
}

struct ExponentSums {
  std::vector<long long> rho;    // size n-1
  std::vector<long long> sigma;  // size n-1
  std::vector<long long> tau;    // size n
  std::map<std::pair<int, int>, long long> alpha;

  bool all_zero() const {
    auto z = [](const std::vector<long long>& v) {
      return std::all_of(v.begin(), v.end(), [](long long x) { return x == 0; });
    };
    return z(rho) && z(sigma) && z(tau) &&
           std::all_of(alpha.begin(), alpha.end(), [](const auto& kv) { return kv.second == 0; });
  }

  friend bool operator==(const ExponentSums& a, const ExponentSums& b) {
    return a.rho == b.rho && a.sigma == b.sigma && a.tau == b.tau && a.alpha == b.alpha;
  }
};

// Per-generator exponent totals (the abelianized image of the word).
inline ExponentSums exponent_sums(const GroupWord& w) {
  const int n = w.group.n;
  ExponentSums s;
  s.rho.assign(std::max(n - 1, 0), 0);
  s.sigma.assign(std::max(n - 1, 0), 0);
  s.tau.assign(n, 0);
  for (const auto& l : w.letters) {
    switch (l.kind) {
      case Kind::Rho: s.rho[l.index - 1] += l.exp; break;
      case Kind::Sigma: s.sigma[l.index - 1] += l.exp; break;
      case Kind::Tau: s.tau[l.index - 1] += l.exp; break;
      case Kind::Alpha: s.alpha[{l.index, l.jndex}] += l.exp; break;
    }
  }
  return s;
}

inline std::string to_string(const GenLetter& l) {
  std::string s;
  switch (l.kind) {
    case Kind::Rho: s = "r" + std::to_string(l.index); break;
    case Kind::Sigma: s = "s" + std::to_string(l.index); break;
    case Kind::Tau: s = "t" + std::to_string(l.index); break;
    case Kind::Alpha:
      s = "a" + std::to_string(l.index) + "," + std::to_string(l.jndex);
      break;
  }
  if (l.exp == -1) s += "^-1";
  return s;
}

// Single-line serialization in the letter grammar; empty word prints as "1".
inline std::string to_string(const GroupWord& w) {
  if (w.letters.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) s += ' ';
    s += to_string(w.letters[i]);
  }
  return s;
}

namespace detail {

inline bool parse_int(std::string_view s, std::size_t& pos, long long& out) {
  std::size_t start = pos;
  bool neg = false;
  if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
    neg = (s[pos] == '-');
    ++pos;
  }
  if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) {
    pos = start;
    return false;
  }
  long long v = 0;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
    v = v * 10 + (s[pos] - '0');
    if (v > 1000000) throw ParseError("integer too large", start);
    ++pos;
  }
  out = neg ? -v : v;
  return true;
}

}  // namespace detail

// Parses the word grammar `letter := (r|s|t)<index>(^<int>)?` (whitespace
// separated), plus `a<i>,<j>(^<int>)?` for the PUR family. Exponents are
// expanded to +-1 letters. "1" denotes the empty word.
inline GroupWord parse_word(std::string_view text, GroupId group) {
  GroupWord out;
  out.group = group;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    const std::size_t tok = pos;
    const char c = text[pos];
    if (c == '1') {
      ++pos;
      if (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])))
        throw ParseError("syntax error: unexpected character after '1'", pos);
      continue;  // explicit identity token
    }
    Kind kind;
    switch (c) {
      case 'r': kind = Kind::Rho; break;
      case 's': kind = Kind::Sigma; break;
      case 't': kind = Kind::Tau; break;
      case 'a': kind = Kind::Alpha; break;
      default:
        throw ParseError(std::string("syntax error: expected letter r/s/t/a, got '") + c + "'",
                         tok);
    }
    ++pos;
    long long index = 0;
    if (!detail::parse_int(text, pos, index) || index < 1)
      throw ParseError("syntax error: expected positive index", pos);
    long long jndex = 0;
    if (kind == Kind::Alpha) {
      if (pos >= text.size() || text[pos] != ',')
        throw ParseError("syntax error: alpha letter needs 'a<i>,<j>'", pos);
      ++pos;
      if (!detail::parse_int(text, pos, jndex) || jndex < 1)
        throw ParseError("syntax error: expected positive second index", pos);
    }
    long long e = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      if (!detail::parse_int(text, pos, e))
        throw ParseError("syntax error: expected integer exponent after '^'", pos);
    }
    if (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])))
      throw ParseError("syntax error: unexpected character in letter", pos);
    GenLetter base{kind, static_cast<int>(index), static_cast<int>(jndex), e >= 0 ? 1 : -1};
    try {
      check_letter(base, group);
    } catch (const DomainError& err) {
      throw ParseError(err.what(), tok);
    }
    for (long long k = 0; k < (e < 0 ? -e : e); ++k) out.letters.push_back(base);
  }
  return out;
}

}  // namespace ringwicket
