#pragma once

// Exact-rational mode for the linking and ball-intersection predicates, for
// circles with rational center, radius, and (unnormalized) normal.
//
// The plane-crossing points of one circle involve a single square root
// S = sqrt(Q - D^2); every decision reduces to the sign of P + s*sqrt(R)
// with P, R rational, which is settled exactly by squaring.

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <optional>

#include "ringwicket/errors.hpp"
#include "ringwicket/ring_geometry.hpp"

namespace ringwicket::geom {

using Rational = boost::multiprecision::cpp_rational;

struct RVec3 {
  Rational x = 0, y = 0, z = 0;

  friend RVec3 operator+(const RVec3& a, const RVec3& b) {
    return {a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend RVec3 operator-(const RVec3& a, const RVec3& b) {
    return {a.x - b.x, a.y - b.y, a.z - b.z};
  }
  friend RVec3 operator*(const Rational& s, const RVec3& a) {
    return {s * a.x, s * a.y, s * a.z};
  }
  friend Rational dot(const RVec3& a, const RVec3& b) {
    return a.x * b.x + a.y * b.y + a.z * b.z;
  }
  friend RVec3 cross(const RVec3& a, const RVec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
  }
  Rational norm2() const { return dot(*this, *this); }
  bool is_zero() const { return x == 0 && y == 0 && z == 0; }
};

struct ExactCircle {
  RVec3 center;
  Rational radius;  // > 0
  RVec3 normal;     // nonzero, not normalized

  ExactCircle(RVec3 c, Rational r, RVec3 n) : center(c), radius(r), normal(n) {
    if (!(r > 0)) throw DomainError("circle radius must be positive");
    if (n.is_zero()) throw DomainError("circle normal must be nonzero");
  }
};

namespace detail {

// Exact sign of P + s*sqrt(R) with R >= 0, s in {+1,-1}.
inline int sign_plus_sqrt(const Rational& p, int s, const Rational& r) {
  if (r < 0) throw DomainError("negative radicand");
  const int sp = p == 0 ? 0 : (p > 0 ? 1 : -1);
  if (r == 0) return sp;
  if (s > 0) {
    if (sp >= 0) return 1;
    // p < 0: compare p^2 with r
    if (p * p > r) return -1;
    if (p * p == r) return 0;
    return 1;
  }
  if (sp <= 0) return -1;
  if (p * p > r) return 1;
  if (p * p == r) return 0;
  return -1;
}

// Rational in-plane basis of c1, with |U|^2 and |W|^2 tracked separately.
inline std::array<RVec3, 2> exact_basis(const RVec3& n) {
  RVec3 seed;
  const Rational ax = n.x < 0 ? -n.x : n.x, ay = n.y < 0 ? -n.y : n.y,
                 az = n.z < 0 ? -n.z : n.z;
  if (ax <= ay && ax <= az)
    seed = {1, 0, 0};
  else if (ay <= az)
    seed = {0, 1, 0};
  else
    seed = {0, 0, 1};
  const RVec3 u = cross(n, seed);
  const RVec3 w = cross(n, u);  // |w|^2 = |n|^2 |u|^2
  return {u, w};
}

// Crossing count of c1 through the open disk of c2, exactly.
//  returns: number of transverse crossings strictly inside (0, 1, or 2),
//  or nullopt for a degenerate situation (point on c2, tangency inside
//  handling, coplanar intersections).
inline std::optional<int> exact_crossings(const ExactCircle& c1, const ExactCircle& c2) {
  const RVec3 d = c1.center - c2.center;
  const auto [U, W] = exact_basis(c1.normal);
  const Rational u2 = U.norm2();
  const Rational n1sq = c1.normal.norm2();
  // work with unnormalized n2; divide through by |n2| consistently:
  //   A~ = r (n2.U)/|U|, B~ = r (n2.W)/(|n1||U|), D~ = n2.d   (all times 1/|n2|)
  const Rational r = c1.radius;
  const Rational A2 = r * r * dot(c2.normal, U) * dot(c2.normal, U) / u2;
  const Rational B2 = r * r * dot(c2.normal, W) * dot(c2.normal, W) / (n1sq * u2);
  const Rational D2 = dot(c2.normal, d) * dot(c2.normal, d);
  const Rational Q = A2 + B2;  // scaled by 1/|n2|^2 like D2; consistent
  if (Q == 0) {
    // c1 parallel to plane of c2
    if (D2 != 0) return 0;  // distinct parallel planes
    // coplanar: intersecting circles are degenerate, else no crossings
    const Rational dist2 = d.norm2();
    const Rational sum = c1.radius + c2.radius;
    const Rational dif = c1.radius - c2.radius;
    if (dist2 > sum * sum) return 0;
    if (dist2 < dif * dif) return 0;
    return std::nullopt;  // touching or transversally intersecting
  }
  if (Q < D2) return 0;       // plane of c2 missed
  if (Q == D2) {              // tangent: the slice point must stay off c2
    // tangent point p: cos = -D*A/Q, sin = -D*B/Q; check |p-c2|^2 != r2^2
    // inside-ness does not matter for the crossing count (tangency crosses
    // nothing) but a point exactly on c2 is degenerate.
    // |p-c2|^2 - r2^2 = E + F cos + G sin evaluated at the tangent point.
    // E*Q - D*(F*A + G*B) == 0 iff the tangent point lies on c2.
    const Rational E = d.norm2() + c1.radius * c1.radius - c2.radius * c2.radius;
    // F*A + G*B scaled: 2 r^2 [ (U.d)(n2.U)/u2 + (W.d)(n2.W)/(n1sq*u2) ]
    const Rational FA_GB =
        2 * r * r * (dot(U, d) * dot(c2.normal, U) / u2 +
                     dot(W, d) * dot(c2.normal, W) / (n1sq * u2));
    // sign of E + (F cos + G sin) = (E*Q - D*(FA+GB))/Q  with D~^2 = D2
    // D enters linearly; use D~ = n2.d (sign carried through)
    const Rational Dlin = dot(c2.normal, d);
    if (E * Q - Dlin * FA_GB == 0) return std::nullopt;
    return 0;
  }
  // two transverse crossings
  const Rational E = d.norm2() + c1.radius * c1.radius - c2.radius * c2.radius;
  const Rational Dlin = dot(c2.normal, d);
  const Rational FA_GB = 2 * r * r *
                         (dot(U, d) * dot(c2.normal, U) / u2 +
                          dot(W, d) * dot(c2.normal, W) / (n1sq * u2));
  // K/|n1| = F*B - G*A  with K rational:
  const Rational K = 2 * r * r *
                     (dot(U, d) * dot(c2.normal, W) - dot(W, d) * dot(c2.normal, U)) / u2;
  // expression(sign) = [E*Q - Dlin*(FA_GB) + sign * sqrt(K^2 (Q - D2) / n1sq)] / Q
  const Rational P = E * Q - Dlin * FA_GB;
  const Rational R = K * K * (Q - D2) / n1sq;
  int inside = 0;
  for (int s : {+1, -1}) {
    const int sg = sign_plus_sqrt(P, s, R);
    if (sg == 0) return std::nullopt;  // crossing point exactly on c2
    if (sg < 0) ++inside;
  }
  return inside;
}

}  // namespace detail

// Exact linking predicate; symmetric in its arguments by construction
// (both directions computed and compared).
inline LinkVerdict linked_exact(const ExactCircle& c1, const ExactCircle& c2) {
  const auto ab = detail::exact_crossings(c1, c2);
  const auto ba = detail::exact_crossings(c2, c1);
  if (!ab || !ba) return LinkVerdict::Degenerate;
  const bool la = (*ab == 1), lb = (*ba == 1);
  if (la != lb) return LinkVerdict::Degenerate;
  return la ? LinkVerdict::Linked : LinkVerdict::Unlinked;
}

// Exact closed-ball intersection test for the microcosms (factor 2).
inline bool microcosms_intersect_exact(const ExactCircle& a, const ExactCircle& b) {
  const Rational rr = 2 * (a.radius + b.radius);
  return (a.center - b.center).norm2() <= rr * rr;
}

}  // namespace ringwicket::geom
