#pragma once

// Todd-Coxeter coset enumeration over the emitted presentations, with a
// Felsch-style deduction strategy: table entries are created one at a time
// (first empty slot in (coset, column) order) and every consequence of a new
// entry is traced through the relator rotations that begin with the deduced
// edge before the next definition. Coincidences are merged with a union-find
// over coset representatives and a FIFO queue. After the table closes, a
// full verification pass re-scans every relator at every live coset, so a
// Complete result is certified independent of the deduction bookkeeping.
// Deterministic given the presentation and subgroup generators.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <string>
#include <vector>

#include "ringwicket/presentations.hpp"
#include "ringwicket/words.hpp"

namespace ringwicket {

// A finite presentation prepared for enumeration: an explicit generator
// list (base letters, exponent +1) and relator words over them.
struct TCPresentation {
  GroupId group;
  std::vector<GenLetter> generators;
  std::vector<GroupWord> relators;
};

inline TCPresentation tc_presentation(const RelatorSet& rs,
                                      const std::vector<GroupWord>& extra_relators = {}) {
  TCPresentation p;
  p.group = rs.group;
  const int n = rs.group.n;
  switch (rs.group.family) {
    case Family::UW:
    case Family::UR:
      for (int i = 1; i <= n - 1; ++i) p.generators.push_back(rho(i));
      for (int i = 1; i <= n - 1; ++i) p.generators.push_back(sigma(i));
      break;
    case Family::W:
    case Family::VR:
    case Family::R:
      for (int i = 1; i <= n - 1; ++i) p.generators.push_back(rho(i));
      for (int i = 1; i <= n - 1; ++i) p.generators.push_back(sigma(i));
      for (int i = 1; i <= n; ++i) p.generators.push_back(tau(i));
      break;
    case Family::PUR:
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
          if (i != j) p.generators.push_back(alpha(i, j));
      break;
  }
  p.relators = rs.relators;
  for (const auto& w : extra_relators) {
    if (w.group != rs.group) throw DomainError("extra relator group mismatch");
    p.relators.push_back(w);
  }
  return p;
}

// <sigma_1..sigma_{n-1} | braid relations, far commutation
// (+ sigma_i^2 when add_involutions)>; enumerating the trivial subgroup
// yields the braid-quotient or symmetric group of the sigmas.
inline TCPresentation sigma_presentation(int n, bool add_involutions) {
  TCPresentation p;
  p.group = {Family::UR, n};
  for (int i = 1; i <= n - 1; ++i) p.generators.push_back(sigma(i));
  const GroupId g = p.group;
  for (int i = 1; i + 1 <= n - 1; ++i)
    p.relators.push_back(detail::relation(g, {sigma(i), sigma(i + 1), sigma(i)},
                                          {sigma(i + 1), sigma(i), sigma(i + 1)}));
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 2; j <= n - 1; ++j)
      p.relators.push_back(detail::commutator(g, sigma(i), sigma(j)));
  if (add_involutions)
    for (int i = 1; i <= n - 1; ++i)
      p.relators.push_back(detail::make_word(g, {sigma(i), sigma(i)}));
  return p;
}

struct CosetTable {
  enum class Status { Complete, Overflow };

  TCPresentation presentation;
  std::vector<GroupWord> subgroup;
  Status status = Status::Overflow;
  std::size_t coset_count = 0;  // live cosets when complete
  std::size_t limit = 0;
  // standardized table, row per live coset (row 0 = the subgroup coset),
  // column per generator then per inverse generator
  std::vector<std::vector<std::uint32_t>> table;

  bool complete() const { return status == Status::Complete; }
};

namespace detail {

class Enumerator {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  Enumerator(const TCPresentation& pres, const std::vector<GroupWord>& subgroup,
             std::size_t limit)
      : limit_(limit) {
    ngen_ = pres.generators.size();
    ncols_ = 2 * ngen_;
    for (std::size_t g = 0; g < ngen_; ++g) col_of_[key(pres.generators[g])] = g;
    for (const auto& r : pres.relators) {
      const auto cols = word_cols(r);
      if (!cols.empty()) rel_cols_.push_back(cols);
    }
    // rotations of each relator, grouped by first column
    rot_by_col_.resize(ncols_);
    for (const auto& r : rel_cols_)
      for (std::size_t p = 0; p < r.size(); ++p) {
        std::vector<std::size_t> rot(r.begin() + static_cast<std::ptrdiff_t>(p), r.end());
        rot.insert(rot.end(), r.begin(), r.begin() + static_cast<std::ptrdiff_t>(p));
        rot_by_col_[rot[0]].push_back(rot);
      }
    for (const auto& w : subgroup) sub_cols_.push_back(word_cols(w));
    addCoset();  // coset 0 = the subgroup
  }

  bool run() {
    for (const auto& w : sub_cols_)
      if (!traceSubgroupWord(w)) return false;
    if (!processDeductions()) return false;
    for (;;) {
      std::size_t alpha = npos, col = 0;
      for (std::size_t c = scan_from_; c < table_.size() && alpha == npos; ++c) {
        if (!live(c)) continue;
        for (std::size_t x = 0; x < ncols_; ++x)
          if (entry(c, x) == npos) {
            alpha = c;
            col = x;
            break;
          }
        if (alpha == npos) scan_from_ = c + 1;
      }
      if (alpha == npos) {
        if (verifyAll()) return true;  // certified closed
        if (!processDeductions()) return false;
        scan_from_ = 0;
        continue;
      }
      const std::size_t beta = addCoset();
      if (beta == npos) return false;
      setEdge(alpha, col, beta);
      if (!processDeductions()) return false;
      scan_from_ = 0;
    }
  }

  std::size_t liveCount() const {
    std::size_t k = 0;
    for (std::size_t c = 0; c < table_.size(); ++c)
      if (live(c)) ++k;
    return k;
  }

  // BFS renumbering from coset 0 in column order; deterministic result
  // independent of the definition history.
  std::vector<std::vector<std::uint32_t>> standardized() const {
    std::vector<std::size_t> number(table_.size(), npos);
    std::vector<std::size_t> order;
    number[rep(0)] = 0;
    order.push_back(rep(0));
    for (std::size_t q = 0; q < order.size(); ++q)
      for (std::size_t x = 0; x < ncols_; ++x) {
        const std::size_t t = rep(table_[order[q]][x]);
        if (number[t] == npos) {
          number[t] = order.size();
          order.push_back(t);
        }
      }
    std::vector<std::vector<std::uint32_t>> out(order.size(),
                                                std::vector<std::uint32_t>(ncols_, 0));
    for (std::size_t q = 0; q < order.size(); ++q)
      for (std::size_t x = 0; x < ncols_; ++x)
        out[q][x] = static_cast<std::uint32_t>(number[rep(table_[order[q]][x])]);
    return out;
  }

 private:
  static std::uint64_t key(const GenLetter& l) {
    return (static_cast<std::uint64_t>(l.kind) << 40) |
           (static_cast<std::uint64_t>(static_cast<std::uint32_t>(l.index)) << 20) |
           static_cast<std::uint64_t>(static_cast<std::uint32_t>(l.jndex));
  }

  std::vector<std::size_t> word_cols(const GroupWord& w) const {
    std::vector<std::size_t> out;
    out.reserve(w.letters.size());
    for (const auto& l : w.letters) {
      const auto it = col_of_.find(key(GenLetter{l.kind, l.index, l.jndex, 1}));
      if (it == col_of_.end())
        throw DomainError("word uses a letter outside the presentation's generators");
      out.push_back(l.exp == 1 ? it->second : it->second + ngen_);
    }
    return out;
  }

  std::size_t inv_col(std::size_t x) const { return x < ngen_ ? x + ngen_ : x - ngen_; }

  bool live(std::size_t c) const { return parent_[c] == c; }

  std::size_t rep(std::size_t c) const {
    if (c == npos) return npos;
    while (parent_[c] != c) c = parent_[c];
    return c;
  }

  std::size_t entry(std::size_t c, std::size_t x) const { return rep(table_[c][x]); }

  std::size_t addCoset() {
    if (table_.size() >= limit_) return npos;
    table_.emplace_back(ncols_, npos);
    parent_.push_back(table_.size() - 1);
    return table_.size() - 1;
  }

  void setEdge(std::size_t a, std::size_t x, std::size_t b) {
    table_[a][x] = b;
    table_[b][inv_col(x)] = a;
    deductions_.emplace_back(a, x);
    ++mods_;
  }

  // Standard coincidence merge with a FIFO queue of dead cosets.
  void coincide(std::size_t a, std::size_t b) {
    mergeReps(a, b);
    while (!dead_queue_.empty()) {
      const std::size_t y = dead_queue_.front();
      dead_queue_.pop_front();
      for (std::size_t x = 0; x < ncols_; ++x) {
        const std::size_t d = table_[y][x];
        if (d == npos) continue;
        table_[y][x] = npos;
        if (table_[d][inv_col(x)] == y) table_[d][inv_col(x)] = npos;
        const std::size_t mu = rep(y);
        const std::size_t nu = rep(d);
        const std::size_t existing = entry(mu, x);
        if (existing != npos) {
          mergeReps(existing, nu);
        } else {
          const std::size_t back = entry(nu, inv_col(x));
          if (back != npos)
            mergeReps(back, mu);
          else
            setEdge(mu, x, nu);
        }
      }
    }
  }

  void mergeReps(std::size_t a, std::size_t b) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    dead_queue_.push_back(b);
    ++mods_;
  }

  // Installs a subgroup generator word as a cycle at coset 0, defining new
  // cosets as needed. Returns false on overflow.
  bool traceSubgroupWord(const std::vector<std::size_t>& w) {
    if (w.empty()) return true;
    std::size_t f = rep(0);
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      std::size_t t = entry(f, w[i]);
      if (t == npos) {
        t = addCoset();
        if (t == npos) return false;
        setEdge(f, w[i], t);
      }
      f = rep(t);
    }
    // close the cycle with the last letter
    const std::size_t last = w.back();
    const std::size_t t = entry(f, last);
    const std::size_t zero = rep(0);
    if (t == npos)
      setEdge(f, last, zero);
    else if (t != zero)
      coincide(t, zero);
    return true;
  }

  // Scans word w at coset a (as a cycle a -> a), filling a single gap or
  // merging the two ends.
  void scanAndFill(std::size_t a, const std::vector<std::size_t>& w) {
    a = rep(a);
    std::size_t f = a;
    std::size_t i = 0;
    const std::size_t len = w.size();
    std::size_t b = a;
    std::size_t j = len;
    while (i < len) {
      const std::size_t t = entry(f, w[i]);
      if (t == npos) break;
      f = t;
      ++i;
    }
    if (i == len) {
      if (f != a) coincide(f, a);
      return;
    }
    while (j > i) {
      const std::size_t t = entry(b, inv_col(w[j - 1]));
      if (t == npos) break;
      b = t;
      --j;
    }
    if (j == i)
      coincide(f, b);
    else if (j == i + 1)
      setEdge(f, w[i], b);
    // j > i + 1: incomplete, no information
  }

  bool processDeductions() {
    while (!deductions_.empty()) {
      auto [a, x] = deductions_.back();
      deductions_.pop_back();
      const std::size_t ar = rep(a);
      const std::size_t br = entry(ar, x);
      for (const auto& rot : rot_by_col_[x]) scanAndFill(ar, rot);
      if (br != npos)
        for (const auto& rot : rot_by_col_[inv_col(x)]) scanAndFill(br, rot);
    }
    return true;
  }

  // Full certification pass: every relator at every live coset plus the
  // subgroup generators at coset 0. True iff nothing changed.
  bool verifyAll() {
    const std::size_t before = mods_;
    for (const auto& w : sub_cols_) scanAndFill(0, w);
    for (std::size_t c = 0; c < table_.size(); ++c) {
      if (!live(c)) continue;
      for (const auto& r : rel_cols_) scanAndFill(c, r);
    }
    return mods_ == before && deductions_.empty();
  }

  std::size_t limit_;
  std::size_t ngen_ = 0;
  std::size_t ncols_ = 0;
  std::size_t scan_from_ = 0;
  std::size_t mods_ = 0;
  std::map<std::uint64_t, std::size_t> col_of_;
  std::vector<std::vector<std::size_t>> rel_cols_;
  std::vector<std::vector<std::vector<std::size_t>>> rot_by_col_;
  std::vector<std::vector<std::size_t>> sub_cols_;
  std::vector<std::vector<std::size_t>> table_;
  std::vector<std::size_t> parent_;
  std::vector<std::pair<std::size_t, std::size_t>> deductions_;
  std::deque<std::size_t> dead_queue_;
};

}  // namespace detail

// Enumerates cosets of the subgroup generated by `subgroup` in the group
// defined by the presentation. On completion the coset count equals the
// subgroup index; `limit` bounds the number of cosets ever allocated.
inline CosetTable todd_coxeter(const TCPresentation& pres,
                               const std::vector<GroupWord>& subgroup, std::size_t limit) {
  CosetTable out;
  out.presentation = pres;
  out.subgroup = subgroup;
  out.limit = limit;
  detail::Enumerator e(pres, subgroup, limit);
  if (!e.run()) {
    out.status = CosetTable::Status::Overflow;
    return out;
  }
  out.status = CosetTable::Status::Complete;
  out.table = e.standardized();
  out.coset_count = out.table.size();
  return out;
}

inline CosetTable todd_coxeter(const RelatorSet& rs, const std::vector<GroupWord>& extra_relators,
                               const std::vector<GroupWord>& subgroup, std::size_t limit) {
  return todd_coxeter(tc_presentation(rs, extra_relators), subgroup, limit);
}

// CSV dump of the standardized table: one row per (coset, generator-or-
// inverse, target), cosets numbered from 1.
inline std::string coset_table_csv(const CosetTable& t) {
  std::string out = "coset,generator,target\n";
  if (!t.complete()) return out;
  const std::size_t g = t.presentation.generators.size();
  for (std::size_t c = 0; c < t.table.size(); ++c)
    for (std::size_t x = 0; x < 2 * g; ++x) {
      GenLetter l = t.presentation.generators[x % g];
      if (x >= g) l.exp = -1;
      out += std::to_string(c + 1) + "," + to_string(l) + "," +
             std::to_string(t.table[c][x] + 1) + "\n";
    }
  return out;
}

}  // namespace ringwicket
