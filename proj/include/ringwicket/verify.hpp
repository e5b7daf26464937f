#pragma once

// Relator verification under the available representations, and the word
// problem solvers dispatched by group family.

#include <string>
#include <vector>

#include "ringwicket/braid_engine.hpp"
#include "ringwicket/free_autos.hpp"
#include "ringwicket/presentations.hpp"
#include "ringwicket/quotients.hpp"
#include "ringwicket/words.hpp"

namespace ringwicket {

enum class RepKind { EndpointBraid, Dahm, Signed, Twist, Perm };

inline std::string_view rep_name(RepKind r) {
  switch (r) {
    case RepKind::EndpointBraid: return "endpoint-braid";
    case RepKind::Dahm: return "dahm";
    case RepKind::Signed: return "signed";
    case RepKind::Twist: return "twist";
    case RepKind::Perm: return "perm";
  }
  return "?";
}

inline std::optional<RepKind> rep_from_name(std::string_view s) {
  if (s == "braid" || s == "endpoint-braid") return RepKind::EndpointBraid;
  if (s == "dahm" || s == "auto") return RepKind::Dahm;
  if (s == "signed") return RepKind::Signed;
  if (s == "twist") return RepKind::Twist;
  if (s == "perm") return RepKind::Perm;
  return std::nullopt;
}

// The (group family, representation) pairs that are accepted. Twist on R is
// rejected: the relator tau_i^2 maps to a nonzero twist, so the map does not
// factor through R_n. The endpoint braid needs sigma of infinite order, so
// it is wicket-side only. Dahm is the ring-side representation.
inline bool rep_defined_for(Family f, RepKind r) {
  switch (r) {
    case RepKind::EndpointBraid: return f == Family::UW || f == Family::W;
    case RepKind::Dahm:
      return f == Family::UR || f == Family::VR || f == Family::R || f == Family::PUR;
    case RepKind::Signed: return f == Family::UR || f == Family::R || f == Family::PUR;
    case RepKind::Twist:
      return f == Family::UW || f == Family::W || f == Family::UR || f == Family::VR;
    case RepKind::Perm: return true;
  }
  return false;
}

// True iff the representation maps the word to the identity of its target.
inline bool rep_is_identity(const GroupWord& w, RepKind r) {
  if (!rep_defined_for(w.group.family, r))
    throw DomainError("representation-undefined-for-group: " + std::string(rep_name(r)) +
                      " on " + w.group.str());
  switch (r) {
    case RepKind::EndpointBraid:
      return braid_is_trivial(endpoint_hom(w, pinned_dictionary(w.group.n)));
    case RepKind::Dahm: return is_identity(dahm_rep(w));
    case RepKind::Signed: return signed_image(w).is_identity();
    case RepKind::Twist: return twist_image(w).is_identity();
    case RepKind::Perm: return perm_image(w).is_identity();
  }
  return false;
}

struct RelatorReport {
  GroupId group;
  RepKind rep;
  struct Row {
    GroupWord relator;
    bool pass;
  };
  std::vector<Row> rows;

  bool all_pass() const {
    return std::all_of(rows.begin(), rows.end(), [](const Row& r) { return r.pass; });
  }
};

// Evaluates every relator of the group under the representation.
inline RelatorReport verify_relators(GroupId g, RepKind r) {
  if (!rep_defined_for(g.family, r))
    throw DomainError("representation-undefined-for-group: " + std::string(rep_name(r)) +
                      " on " + g.str());
  RelatorReport rep;
  rep.group = g;
  rep.rep = r;
  for (const GroupWord& rel : relators(g).relators)
    rep.rows.push_back({rel, rep_is_identity(rel, r)});
  return rep;
}

// Word problem, dispatched to the faithful route for the family.
// For VR the twist image and the Dahm image of the untwisted part combine.
inline bool word_is_trivial(const GroupWord& w) {
  switch (w.group.family) {
    case Family::UW:
    case Family::W: return word_is_trivial_W(w);
    case Family::UR: return word_is_trivial_UR(w);
    case Family::VR: return word_is_trivial_VR(w);
    case Family::R: return word_is_trivial_R(w);
    case Family::PUR: return word_is_trivial_PUR(w);
  }
  return false;
}

// Equality via triviality of w1 * w2^-1.
inline bool words_equal(const GroupWord& w1, const GroupWord& w2) {
  return word_is_trivial(concat(w1, invert(w2)));
}

}  // namespace ringwicket
