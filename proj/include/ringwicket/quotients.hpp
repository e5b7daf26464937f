#pragma once

// Permutation-type quotient images of the ring and wicket groups:
// Sigma_n, the signed permutation group Sigma_n^± (semidirect product with
// Z_2^n) and its integer version Sigma_n^Z (semidirect product with Z^n).

#include <numeric>
#include <string>
#include <vector>

#include "ringwicket/errors.hpp"
#include "ringwicket/words.hpp"

namespace ringwicket {

// Permutation of 1..n, one-line form: img[k-1] = image of k.
// Product (p*q)(x) = p(q(x)).
struct Perm {
  std::vector<int> img;

  Perm() = default;
  explicit Perm(int n) : img(static_cast<std::size_t>(n)) {
    std::iota(img.begin(), img.end(), 1);
  }

  int n() const { return static_cast<int>(img.size()); }
  int operator()(int k) const { return img[static_cast<std::size_t>(k - 1)]; }

  bool is_identity() const {
    for (int k = 1; k <= n(); ++k)
      if ((*this)(k) != k) return false;
    return true;
  }

  Perm inverse() const {
    Perm p(n());
    for (int k = 1; k <= n(); ++k) p.img[static_cast<std::size_t>((*this)(k)-1)] = k;
    return p;
  }

  static Perm transposition(int n, int a, int b) {
    Perm p(n);
    std::swap(p.img[static_cast<std::size_t>(a - 1)], p.img[static_cast<std::size_t>(b - 1)]);
    return p;
  }

  friend Perm operator*(const Perm& p, const Perm& q) {
    if (p.n() != q.n()) throw DomainError("permutation size mismatch");
    Perm r(p.n());
    for (int k = 1; k <= p.n(); ++k) r.img[static_cast<std::size_t>(k - 1)] = p(q(k));
    return r;
  }
  friend bool operator==(const Perm& a, const Perm& b) { return a.img == b.img; }
  friend bool operator!=(const Perm& a, const Perm& b) { return !(a == b); }
};

// Cycle notation, e.g. "(1 2)(3 4)"; identity prints as "()".
inline std::string cycle_string(const Perm& p) {
  std::string out;
  std::vector<bool> seen(static_cast<std::size_t>(p.n()), false);
  for (int k = 1; k <= p.n(); ++k) {
    if (seen[static_cast<std::size_t>(k - 1)] || p(k) == k) continue;
    out += "(" + std::to_string(k);
    seen[static_cast<std::size_t>(k - 1)] = true;
    for (int m = p(k); m != k; m = p(m)) {
      seen[static_cast<std::size_t>(m - 1)] = true;
      out += " " + std::to_string(m);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

// Element of Sigma_n^Z: permutation plus integer twist vector, with the
// permutation acting on coordinates. Composition law matches matrices
// M(p,v) e_k = v_k-twisted e_{p(k)}: (A*B).twist[k] = B.twist[k] + A.twist[B.p(k)].
struct TwistPerm {
  Perm p;
  std::vector<long long> twist;

  TwistPerm() = default;
  explicit TwistPerm(int n) : p(n), twist(static_cast<std::size_t>(n), 0) {}

  int n() const { return p.n(); }

  bool is_identity() const {
    return p.is_identity() &&
           std::all_of(twist.begin(), twist.end(), [](long long v) { return v == 0; });
  }

  friend TwistPerm operator*(const TwistPerm& a, const TwistPerm& b) {
    if (a.n() != b.n()) throw DomainError("size mismatch");
    TwistPerm r(a.n());
    r.p = a.p * b.p;
    for (int k = 1; k <= a.n(); ++k)
      r.twist[static_cast<std::size_t>(k - 1)] =
          b.twist[static_cast<std::size_t>(k - 1)] +
          a.twist[static_cast<std::size_t>(b.p(k) - 1)];
    return r;
  }
  friend bool operator==(const TwistPerm& a, const TwistPerm& b) {
    return a.p == b.p && a.twist == b.twist;
  }
  friend bool operator!=(const TwistPerm& a, const TwistPerm& b) { return !(a == b); }
};

// Element of the signed permutation group Sigma_n^±: permutation plus sign
// vector; same semidirect law with signs multiplying.
struct SignedPerm {
  Perm p;
  std::vector<int> sign;  // +-1 per coordinate

  SignedPerm() = default;
  explicit SignedPerm(int n) : p(n), sign(static_cast<std::size_t>(n), 1) {}

  int n() const { return p.n(); }

  bool is_identity() const {
    return p.is_identity() && std::all_of(sign.begin(), sign.end(), [](int s) { return s == 1; });
  }

  bool untwisted() const {
    return std::all_of(sign.begin(), sign.end(), [](int s) { return s == 1; });
  }

  friend SignedPerm operator*(const SignedPerm& a, const SignedPerm& b) {
    if (a.n() != b.n()) throw DomainError("size mismatch");
    SignedPerm r(a.n());
    r.p = a.p * b.p;
    for (int k = 1; k <= a.n(); ++k)
      r.sign[static_cast<std::size_t>(k - 1)] = b.sign[static_cast<std::size_t>(k - 1)] *
                                                a.sign[static_cast<std::size_t>(b.p(k) - 1)];
    return r;
  }
  friend bool operator==(const SignedPerm& a, const SignedPerm& b) {
    return a.p == b.p && a.sign == b.sign;
  }
  friend bool operator!=(const SignedPerm& a, const SignedPerm& b) { return !(a == b); }
};

inline std::string to_string(const SignedPerm& g) {
  std::string s = cycle_string(g.p) + " signs=(";
  for (int k = 1; k <= g.n(); ++k) {
    if (k > 1) s += ",";
    s += g.sign[static_cast<std::size_t>(k - 1)] == 1 ? "+1" : "-1";
  }
  return s + ")";
}

inline std::string to_string(const TwistPerm& g) {
  std::string s = cycle_string(g.p) + " twists=(";
  for (int k = 1; k <= g.n(); ++k) {
    if (k > 1) s += ",";
    s += std::to_string(g.twist[static_cast<std::size_t>(k - 1)]);
  }
  return s + ")";
}

// Image in Sigma_n: rho_i, sigma_i -> (i i+1); tau and alpha letters -> id.
inline Perm perm_image(const GroupWord& w) {
  Perm acc(w.group.n);
  for (const auto& l : w.letters)
    if (l.kind == Kind::Rho || l.kind == Kind::Sigma)
      acc = acc * Perm::transposition(w.group.n, l.index, l.index + 1);
  return acc;
}

// Image in Sigma_n^Z: tau_i contributes +-1 twist at coordinate i.
inline TwistPerm twist_image(const GroupWord& w) {
  TwistPerm acc(w.group.n);
  for (const auto& l : w.letters) {
    TwistPerm g(w.group.n);
    if (l.kind == Kind::Rho || l.kind == Kind::Sigma)
      g.p = Perm::transposition(w.group.n, l.index, l.index + 1);
    else if (l.kind == Kind::Tau)
      g.twist[static_cast<std::size_t>(l.index - 1)] = l.exp;
    acc = acc * g;
  }
  return acc;
}

// Image in Sigma_n^±: tau_i flips the sign at coordinate i.
inline SignedPerm signed_image(const GroupWord& w) {
  SignedPerm acc(w.group.n);
  for (const auto& l : w.letters) {
    SignedPerm g(w.group.n);
    if (l.kind == Kind::Rho || l.kind == Kind::Sigma)
      g.p = Perm::transposition(w.group.n, l.index, l.index + 1);
    else if (l.kind == Kind::Tau)
      g.sign[static_cast<std::size_t>(l.index - 1)] = -1;
    acc = acc * g;
  }
  return acc;
}

inline bool is_pure(const GroupWord& w) { return perm_image(w).is_identity(); }

// Coset test for the index-2^n untwisted subgroup of R_n.
inline bool in_untwisted(const GroupWord& w) {
  if (w.group.family != Family::R) throw DomainError("in_untwisted expects an R-family word");
  return signed_image(w).untwisted();
}

// Canonical section of Sigma_n^± back into word letters: a sigma word
// realizing the permutation followed by tau_k for each flipped sign.
// signed_image(section_word(g)) == g.
inline GroupWord section_word(const SignedPerm& g, GroupId group) {
  if (group.n != g.n()) throw DomainError("size mismatch");
  std::vector<int> oneline(g.p.img);
  // bubble-sort record, reversed, realizes the permutation (see tests)
  std::vector<int> rec;
  {
    bool moved = true;
    while (moved) {
      moved = false;
      for (int k = 0; k + 1 < g.n(); ++k)
        if (oneline[static_cast<std::size_t>(k)] > oneline[static_cast<std::size_t>(k + 1)]) {
          std::swap(oneline[static_cast<std::size_t>(k)], oneline[static_cast<std::size_t>(k + 1)]);
          rec.push_back(k + 1);
          moved = true;
        }
    }
    std::reverse(rec.begin(), rec.end());
  }
  GroupWord w;
  w.group = group;
  for (int k : rec) w.letters.push_back(sigma(k));
  for (int k = 1; k <= g.n(); ++k)
    if (g.sign[static_cast<std::size_t>(k - 1)] == -1) w.letters.push_back(tau(k));
  return GroupWord(group, std::move(w.letters));
}

}  // namespace ringwicket
