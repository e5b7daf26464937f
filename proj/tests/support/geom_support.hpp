#pragma once

// Test-side geometry helpers: a crossing-parity numeric oracle for the
// linking test and seeded generators of valid (and generic) configurations.

#include <cmath>
#include <random>

#include "ringwicket/ring_geometry.hpp"

namespace ringwicket::testing {

using geom::Circle;
using geom::RingConfig;
using geom::Vec3;

// Counts transverse crossings of c1 through the open disk of c2 by dense
// sampling; linked iff the count is odd. Independent of the closed-form
// plane-intersection route used by the implementation.
inline bool parity_oracle_linked(const Circle& c1, const Circle& c2, int samples = 10000) {
  int crossings = 0;
  Vec3 prev = c1.point_at(0.0);
  double hprev = dot(prev - c2.center, c2.normal);
  for (int k = 1; k <= samples; ++k) {
    const double th = 2.0 * 3.14159265358979323846 * k / samples;
    const Vec3 p = c1.point_at(th);
    const double h = dot(p - c2.center, c2.normal);
    if ((hprev < 0 && h > 0) || (hprev > 0 && h < 0)) {
      const double t = hprev / (hprev - h);
      const Vec3 x = prev + t * (p - prev);
      const Vec3 e = x - c2.center;
      const Vec3 inplane = e - dot(e, c2.normal) * c2.normal;
      if (inplane.norm() < c2.radius) ++crossings;
    }
    prev = p;
    hprev = h;
  }
  return crossings % 2 == 1;
}

inline double urand(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * (static_cast<double>(rng() % 1000000007) / 1000000006.0);
}

inline Vec3 random_unit(std::mt19937_64& rng) {
  for (;;) {
    Vec3 v{urand(rng, -1, 1), urand(rng, -1, 1), urand(rng, -1, 1)};
    const double n = v.norm();
    if (n > 0.1 && n <= 1.0) return (1.0 / n) * v;
  }
}

// Applies a random rigid motion plus uniform scale to a circle.
struct RigidMap {
  Vec3 axis;
  double angle;
  Vec3 shift;
  double scale;

  static RigidMap random(std::mt19937_64& rng) {
    return {random_unit(rng), urand(rng, 0, 6.28), {urand(rng, -5, 5), urand(rng, -5, 5),
            urand(rng, -5, 5)}, urand(rng, 0.5, 2.0)};
  }

  Vec3 rotate(Vec3 v) const {
    // Rodrigues rotation
    const double c = std::cos(angle), s = std::sin(angle);
    return c * v + s * cross(axis, v) + (dot(axis, v) * (1 - c)) * axis;
  }

  Circle apply(const Circle& cir) const {
    return Circle(scale * rotate(cir.center) + shift, scale * cir.radius, rotate(cir.normal));
  }
};

// Linked pair: a Hopf pair under a random rigid motion.
inline std::pair<Circle, Circle> random_linked_pair(std::mt19937_64& rng) {
  const RigidMap m = RigidMap::random(rng);
  const double r = urand(rng, 0.5, 2.0);
  const double off = urand(rng, 0.3, 1.4) * r;
  const Circle a({0, 0, 0}, r, {0, 0, 1});
  const Circle b({r, 0, 0}, urand(rng, 0.6, 1.6) * off, {0, 1, 0});
  return {m.apply(a), m.apply(b)};
}

// Unlinked pair from one of several constructions, under a random motion.
inline std::pair<Circle, Circle> random_unlinked_pair(std::mt19937_64& rng) {
  const RigidMap m = RigidMap::random(rng);
  Circle a({0, 0, 0}, 1, {0, 0, 1}), b = a;
  switch (rng() % 4) {
    case 0:  // separated balls
      a = Circle({0, 0, 0}, urand(rng, 0.5, 2), random_unit(rng));
      b = Circle({0, 0, 6.5}, urand(rng, 0.5, 2), random_unit(rng));
      break;
    case 1:  // distinct parallel planes
      a = Circle({urand(rng, -2, 2), urand(rng, -2, 2), 0}, urand(rng, 0.5, 3), {0, 0, 1});
      b = Circle({urand(rng, -2, 2), urand(rng, -2, 2), urand(rng, 0.4, 2)}, urand(rng, 0.5, 3),
                 {0, 0, 1});
      break;
    case 2:  // nested coplanar
      a = Circle({0, 0, 0}, 1, {0, 0, 1});
      b = Circle({urand(rng, -0.4, 0.4), urand(rng, -0.4, 0.4), 0}, urand(rng, 2.2, 3.5),
                 {0, 0, 1});
      break;
    default:  // key-chain: small circle near a big disk, off its plane
      a = Circle({0, 0, 0}, 4, {0, 0, 1});
      b = Circle({urand(rng, 1.0, 3.0), 0, urand(rng, 0.8, 1.6)}, urand(rng, 0.3, 0.7),
                 {1, 0, 0});
      break;
  }
  return {m.apply(a), m.apply(b)};
}

// Valid configuration of k circles in distinct parallel planes (pairwise
// unlinked and disjoint by construction, generic because every center is
// offset from every other plane).
inline RingConfig parallel_plane_config(int k, std::mt19937_64& rng) {
  RingConfig cfg;
  double z = 0;
  for (int i = 0; i < k; ++i) {
    z += urand(rng, 0.4, 1.6);
    cfg.circles.push_back(
        Circle({urand(rng, -3, 3), urand(rng, -3, 3), z}, urand(rng, 0.4, 2.5), {0, 0, 1}));
  }
  return cfg;
}

// Valid configuration with circles in separated balls, random orientations.
inline RingConfig separated_ball_config(int k, std::mt19937_64& rng) {
  RingConfig cfg;
  for (int i = 0; i < k; ++i) {
    const double r = urand(rng, 0.3, 1.2);
    cfg.circles.push_back(Circle({4.0 * i + urand(rng, -0.4, 0.4), urand(rng, -1, 1),
                                  urand(rng, -1, 1)}, r, random_unit(rng)));
  }
  return cfg;
}

// Wicket configuration (vertical circles bisected by the xy-plane) in
// distinct planes x = const.
inline RingConfig wicket_config(int k, std::mt19937_64& rng) {
  RingConfig cfg;
  double x = 0;
  for (int i = 0; i < k; ++i) {
    x += urand(rng, 1.0, 2.0);
    cfg.circles.push_back(Circle({x, urand(rng, -2, 2), 0}, urand(rng, 0.4, 2.0), {1, 0, 0}));
  }
  return cfg;
}

// A random valid configuration from one of the families, under a random
// rigid motion when it keeps validity invariants (motions preserve them).
inline RingConfig random_valid_config(int max_circles, std::mt19937_64& rng) {
  const int k = 2 + static_cast<int>(rng() % static_cast<unsigned>(max_circles - 1));
  switch (rng() % 3) {
    case 0: {
      RingConfig cfg = parallel_plane_config(k, rng);
      const RigidMap m = RigidMap::random(rng);
      for (auto& c : cfg.circles) c = m.apply(c);
      return cfg;
    }
    case 1: {
      RingConfig cfg = separated_ball_config(k, rng);
      const RigidMap m = RigidMap::random(rng);
      for (auto& c : cfg.circles) c = m.apply(c);
      return cfg;
    }
    default: return wicket_config(k, rng);
  }
}

}  // namespace ringwicket::testing
