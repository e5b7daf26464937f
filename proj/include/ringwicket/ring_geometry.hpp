#pragma once

// Round-circle configurations in 3-space: disjointness and linking tests,
// the complexity function over microcosm intersections, canonical shrinking,
// and certification of trivial links by shrinking to disjoint spanning disks.
//
// Double precision with a single global tolerance kEps for predicates;
// see exact_geometry.hpp for the exact-rational linking and ball predicates.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ringwicket/errors.hpp"

namespace ringwicket::geom {

inline constexpr double kEps = 1e-9;

// The microcosm ball has this multiple of the circle radius. Any factor
// greater than 1 works; 2 is the fixed choice here.
inline constexpr double kMicrocosmFactor = 2.0;

struct Vec3 {
  double x = 0, y = 0, z = 0;

  friend Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }
  friend double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
  friend Vec3 cross(Vec3 a, Vec3 b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
  }
  double norm2() const { return dot(*this, *this); }
  double norm() const { return std::sqrt(norm2()); }
};

struct Circle {
  Vec3 center;
  double radius = 1.0;
  Vec3 normal{0, 0, 1};  // unit within tolerance

  Circle() = default;
  Circle(Vec3 c, double r, Vec3 n) : center(c), radius(r) {
    if (!(r > 0)) throw DomainError("circle radius must be positive");
    const double len = n.norm();
    if (len < kEps) throw DomainError("circle normal must be nonzero");
    normal = (1.0 / len) * n;
  }

  // Orthonormal in-plane basis (deterministic).
  std::array<Vec3, 2> plane_basis() const {
    const Vec3 n = normal;
    Vec3 seed = std::abs(n.x) <= std::abs(n.y) && std::abs(n.x) <= std::abs(n.z)
                    ? Vec3{1, 0, 0}
                    : (std::abs(n.y) <= std::abs(n.z) ? Vec3{0, 1, 0} : Vec3{0, 0, 1});
    Vec3 u = cross(n, seed);
    u = (1.0 / u.norm()) * u;
    Vec3 v = cross(n, u);
    return {u, v};
  }

  Vec3 point_at(double theta) const {
    const auto [u, v] = plane_basis();
    return center + (radius * std::cos(theta)) * u + (radius * std::sin(theta)) * v;
  }
};

struct Microcosm {
  Vec3 center;
  double radius;  // kMicrocosmFactor * circle radius
};

inline Microcosm microcosm(const Circle& c) { return {c.center, kMicrocosmFactor * c.radius}; }

inline bool microcosms_intersect(const Circle& a, const Circle& b) {
  const double rr = microcosm(a).radius + microcosm(b).radius;
  return (a.center - b.center).norm2() <= rr * rr;  // closed balls
}

// A wicket is a vertical circle bisected by the xy-plane.
inline bool is_wicket(const Circle& c, double tol = kEps) {
  return std::abs(c.center.z) <= tol && std::abs(c.normal.z) <= tol;
}

// Distance from a point to the (closed, flat) disk spanned by the circle.
inline double point_to_disk_distance(Vec3 p, const Circle& c) {
  const Vec3 d = p - c.center;
  const double h = dot(d, c.normal);
  const Vec3 inplane = d - h * c.normal;
  const double q = inplane.norm();
  return std::hypot(std::max(q - c.radius, 0.0), h);
}

// Distance from a point to the circle itself.
inline double point_to_circle_distance(Vec3 p, const Circle& c) {
  const Vec3 d = p - c.center;
  const double h = dot(d, c.normal);
  const Vec3 inplane = d - h * c.normal;
  const double q = inplane.norm();
  return std::hypot(q - c.radius, h);
}

// Minimum distance between two circles: dense sampling of c1 with local
// golden-section refinement of the best windows.
inline double circle_circle_distance(const Circle& c1, const Circle& c2) {
  constexpr int kSamples = 512;
  auto f = [&](double th) { return point_to_circle_distance(c1.point_at(th), c2); };
  const double step = 2.0 * 3.14159265358979323846 / kSamples;
  std::array<double, kSamples> vals{};
  for (int k = 0; k < kSamples; ++k) vals[static_cast<std::size_t>(k)] = f(k * step);
  // refine around every local minimum of the coarse sample
  double best = vals[0];
  const double phi = 0.6180339887498949;
  for (int k = 0; k < kSamples; ++k) {
    const double prev = vals[static_cast<std::size_t>((k + kSamples - 1) % kSamples)];
    const double next = vals[static_cast<std::size_t>((k + 1) % kSamples)];
    const double cur = vals[static_cast<std::size_t>(k)];
    if (cur > prev || cur > next) continue;
    double lo = (k - 1) * step, hi = (k + 1) * step;
    double x1 = hi - phi * (hi - lo), x2 = lo + phi * (hi - lo);
    double f1 = f(x1), f2 = f(x2);
    for (int it = 0; it < 80; ++it) {
      if (f1 < f2) {
        hi = x2;
        x2 = x1;
        f2 = f1;
        x1 = hi - phi * (hi - lo);
        f1 = f(x1);
      } else {
        lo = x1;
        x1 = x2;
        f1 = f2;
        x2 = lo + phi * (hi - lo);
        f2 = f(x2);
      }
    }
    best = std::min({best, f1, f2, cur});
  }
  return best;
}

enum class LinkVerdict { Unlinked, Linked, Degenerate };

inline std::string_view to_string(LinkVerdict v) {
  switch (v) {
    case LinkVerdict::Unlinked: return "unlinked";
    case LinkVerdict::Linked: return "linked";
    case LinkVerdict::Degenerate: return "degenerate";
  }
  return "?";
}

namespace detail {

// One-directional test: intersections of c1 with the plane of c2, counting
// points strictly inside the open disk of c2. nullopt = degenerate.
inline std::optional<bool> linked_oneway(const Circle& c1, const Circle& c2) {
  const Vec3 d = c1.center - c2.center;
  const double scale = std::max({1.0, c1.radius, c2.radius, d.norm()});
  const double eps_len = kEps * scale;
  const auto [u, v] = c1.plane_basis();
  const double A = c1.radius * dot(c2.normal, u);
  const double B = c1.radius * dot(c2.normal, v);
  const double D = dot(c2.normal, d);
  const double Q = A * A + B * B;
  if (Q <= eps_len * eps_len) {
    // plane of c1 parallel to plane of c2
    if (std::abs(D) > eps_len) return false;  // distinct parallel planes
    // coplanar: unlinked when disjoint, degenerate when intersecting
    const double dist = d.norm();
    const double outer = c1.radius + c2.radius;
    const double inner = std::abs(c1.radius - c2.radius);
    if (std::abs(dist - outer) <= eps_len || std::abs(dist - inner) <= eps_len)
      return std::nullopt;  // touching
    if (dist > outer || dist < inner) return false;
    return std::nullopt;  // transversally intersecting circles
  }
  const double disc = Q - D * D;
  if (disc < -eps_len * eps_len * scale * scale) return false;  // no plane crossing
  if (disc <= eps_len * eps_len * scale * scale) return std::nullopt;  // near tangency
  const double S = std::sqrt(disc);
  int inside = 0;
  for (int sign : {+1, -1}) {
    const double ct = (-D * A + sign * B * S) / Q;
    const double st = (-D * B - sign * A * S) / Q;
    const Vec3 p = c1.center + (c1.radius * ct) * u + (c1.radius * st) * v;
    const Vec3 e = p - c2.center;
    const double rho = (e - dot(e, c2.normal) * c2.normal).norm();
    if (std::abs(rho - c2.radius) <= eps_len) return std::nullopt;  // on/near c2
    if (rho < c2.radius) ++inside;
  }
  return inside == 1;
}

}  // namespace detail

// Linking test for a pair of disjoint round circles; symmetric in its
// arguments (both directions are computed and must agree).
inline LinkVerdict linked(const Circle& c1, const Circle& c2) {
  const auto ab = detail::linked_oneway(c1, c2);
  const auto ba = detail::linked_oneway(c2, c1);
  if (!ab || !ba || *ab != *ba) return LinkVerdict::Degenerate;
  return *ab ? LinkVerdict::Linked : LinkVerdict::Unlinked;
}

// True iff the closed flat disks spanned by c1 and c2 do not intersect.
inline bool disks_disjoint(const Circle& c1, const Circle& c2) {
  const Vec3 d = c2.center - c1.center;
  const double scale = std::max({1.0, c1.radius, c2.radius, d.norm()});
  const double eps_len = kEps * scale;
  const Vec3 axis = cross(c1.normal, c2.normal);
  if (axis.norm() <= kEps) {
    // parallel planes
    const double off = dot(d, c1.normal);
    if (std::abs(off) > eps_len) return true;
    return d.norm() > c1.radius + c2.radius + eps_len;  // coplanar disks
  }
  // line of intersection of the two planes: p0 + t * dir
  const Vec3 dir = (1.0 / axis.norm()) * axis;
  const double c12 = dot(c1.normal, c2.normal);
  const double k = dot(c2.normal, d) / (1.0 - c12 * c12);
  const Vec3 p0 = c1.center + k * (c2.normal - c12 * c1.normal);
  auto chord = [&](const Circle& c) -> std::optional<std::pair<double, double>> {
    const Vec3 w = c.center - p0;
    const double t0 = dot(w, dir);
    const double q2 = (w - t0 * dir).norm2();
    const double h2 = c.radius * c.radius - q2;
    if (h2 <= 0) return std::nullopt;  // disk misses the line
    const double h = std::sqrt(h2);
    return std::make_pair(t0 - h, t0 + h);
  };
  const auto i1 = chord(c1);
  const auto i2 = chord(c2);
  if (!i1 || !i2) return true;
  return std::max(i1->first, i2->first) > std::min(i1->second, i2->second) + eps_len;
}

struct RingConfig {
  std::vector<Circle> circles;
  bool validated = false;

  std::size_t size() const { return circles.size(); }
};

struct ValidationIssue {
  bool linked = false;  // false = degenerate pair
  std::size_t i = 0, j = 0;  // 1-based

  std::string str() const {
    return std::string(linked ? "pair-linked(" : "pair-degenerate(") + std::to_string(i) + "," +
           std::to_string(j) + ")";
  }
};

// First offending pair, or nullopt when all pairs are disjoint and unlinked.
inline std::optional<ValidationIssue> validation_issue(const RingConfig& cfg) {
  for (std::size_t i = 0; i < cfg.circles.size(); ++i)
    for (std::size_t j = i + 1; j < cfg.circles.size(); ++j) {
      const Circle& a = cfg.circles[i];
      const Circle& b = cfg.circles[j];
      const double scale = std::max({1.0, a.radius, b.radius});
      if (circle_circle_distance(a, b) <= kEps * scale)
        return ValidationIssue{false, i + 1, j + 1};
      switch (linked(a, b)) {
        case LinkVerdict::Unlinked: break;
        case LinkVerdict::Linked: return ValidationIssue{true, i + 1, j + 1};
        case LinkVerdict::Degenerate: return ValidationIssue{false, i + 1, j + 1};
      }
    }
  return std::nullopt;
}

// Pairwise disjointness and unlinkedness check; returns the config with the
// validated flag set, or throws DomainError naming the offending pair
// (1-based indices).
inline RingConfig validate(RingConfig cfg) {
  if (const auto issue = validation_issue(cfg)) throw DomainError(issue->str());
  cfg.validated = true;
  return cfg;
}

// Complexity: max over pairs with intersecting microcosms of the radius
// ratio <= 1; zero when no microcosms intersect.
inline double complexity(const RingConfig& cfg) {
  double best = 0.0;
  for (std::size_t i = 0; i < cfg.circles.size(); ++i)
    for (std::size_t j = i + 1; j < cfg.circles.size(); ++j) {
      if (!microcosms_intersect(cfg.circles[i], cfg.circles[j])) continue;
      const double ri = cfg.circles[i].radius, rj = cfg.circles[j].radius;
      best = std::max(best, std::min(ri, rj) / std::max(ri, rj));
    }
  return best;
}

// Slice of the orthogonal-hemisphere family at height u: each circle with
// r > u shrinks in place to radius sqrt(r^2 - u^2); circles with r <= u
// have died and are removed.
inline RingConfig canonical_shrink(const RingConfig& cfg, double u) {
  if (u < 0) throw DomainError("shrink height must be >= 0");
  RingConfig out;
  out.validated = cfg.validated;
  for (const Circle& c : cfg.circles) {
    if (c.radius <= u) continue;
    out.circles.push_back(Circle(c.center, std::sqrt(c.radius * c.radius - u * u), c.normal));
  }
  return out;
}

// In-place radius scaling (keeps centers and normals).
inline RingConfig scale_radii(const RingConfig& cfg, double factor) {
  if (!(factor > 0)) throw DomainError("scale factor must be positive");
  RingConfig out = cfg;
  for (Circle& c : out.circles) c = Circle(c.center, factor * c.radius, c.normal);
  return out;
}

// Repeatedly halves all radii until the complexity drops below c.
// Requires distinct centers (guaranteed for validated configurations).
inline RingConfig reduce_complexity_below(RingConfig cfg, double c, int max_rounds = 200) {
  for (int round = 0; round < max_rounds; ++round) {
    if (complexity(cfg) < c) return cfg;
    cfg = scale_radii(cfg, 0.5);
  }
  throw InconclusiveError("reduce_complexity_below: did not reach target");
}

struct UnlinkCertificate {
  std::vector<std::pair<double, RingConfig>> trajectory;  // sampled (u, slice)
  RingConfig final_config;                                // all circles frozen
  std::vector<double> frozen_radii;                       // per input circle
  bool disks_disjoint_verified = false;
};

// Certifies that a validated, generic configuration is a trivial link by
// running the canonical shrinking and freezing each circle just before it
// dies. Generic means no circle's center lies on (within tolerance of)
// another circle's spanning disk. The freeze radius is
//   delta_i = min( 1/2 * min_j d_j , r_i / 2 )
// where d_j is the distance from center i to the spanning disk of a not yet
// frozen circle j (the closest point of any of its slice circles) or to the
// frozen circle j itself. The final configuration must have pairwise
// disjoint spanning disks; this is verified with disks_disjoint.
inline UnlinkCertificate generic_unlink_certificate(const RingConfig& cfg, int grid_samples = 8) {
  if (!cfg.validated) throw DomainError("configuration must be validated first");
  const std::size_t n = cfg.circles.size();
  if (n == 0) throw DomainError("empty configuration");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const double scale = std::max({1.0, cfg.circles[i].radius, cfg.circles[j].radius});
      if (point_to_disk_distance(cfg.circles[i].center, cfg.circles[j]) <= kEps * scale)
        throw InconclusiveError("not-generic: center of circle " + std::to_string(i + 1) +
                                " lies on the disk of circle " + std::to_string(j + 1) +
                                "; perturb the configuration");
    }

  // death order: radius ascending, ties by index (centers are distinct for
  // equal radii since the circles are disjoint)
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (cfg.circles[a].radius != cfg.circles[b].radius)
      return cfg.circles[a].radius < cfg.circles[b].radius;
    return a < b;
  });

  std::vector<double> delta(n, 0.0);
  std::vector<bool> frozen(n, false);
  for (std::size_t oi = 0; oi < n; ++oi) {
    const std::size_t i = order[oi];
    const Circle& ci = cfg.circles[i];
    double dmin = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const Circle& cj = cfg.circles[j];
      double dj;
      if (frozen[j])
        dj = point_to_circle_distance(ci.center, Circle(cj.center, delta[j], cj.normal));
      else
        dj = point_to_disk_distance(ci.center, cj);
      dmin = std::min(dmin, dj);
    }
    delta[i] = std::min(0.5 * dmin, 0.5 * ci.radius);
    frozen[i] = true;
  }

  // radius of circle i at slice height u, with freezing
  auto radius_at = [&](std::size_t i, double u) {
    const double r = cfg.circles[i].radius;
    const double live = r * r - u * u;
    const double shrunk = live > 0 ? std::sqrt(live) : 0.0;
    return std::max(shrunk, delta[i]);
  };
  auto config_at = [&](double u) {
    RingConfig out;
    for (std::size_t i = 0; i < n; ++i)
      out.circles.push_back(
          Circle(cfg.circles[i].center, radius_at(i, u), cfg.circles[i].normal));
    return out;
  };

  UnlinkCertificate cert;
  double umax = 0.0;
  std::vector<double> sample_times = {0.0};
  for (std::size_t i = 0; i < n; ++i) {
    sample_times.push_back(cfg.circles[i].radius);
    umax = std::max(umax, cfg.circles[i].radius);
  }
  for (int k = 1; k <= grid_samples; ++k)
    sample_times.push_back(umax * static_cast<double>(k) / grid_samples);
  std::sort(sample_times.begin(), sample_times.end());
  sample_times.erase(std::unique(sample_times.begin(), sample_times.end()), sample_times.end());
  for (double u : sample_times) cert.trajectory.emplace_back(u, config_at(u));

  cert.final_config = config_at(umax);
  cert.final_config.validated = true;
  cert.frozen_radii = delta;
  cert.disks_disjoint_verified = true;
  for (std::size_t i = 0; i < n && cert.disks_disjoint_verified; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!disks_disjoint(cert.final_config.circles[i], cert.final_config.circles[j])) {
        cert.disks_disjoint_verified = false;
        break;
      }
  return cert;
}

// --- text I/O -------------------------------------------------------------

// One circle per line: cx cy cz r nx ny nz. '#' starts a comment.
inline RingConfig parse_ring_config(const std::string& text) {
  RingConfig cfg;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    double cx, cy, cz, r, nx, ny, nz;
    if (!(ls >> cx)) continue;  // blank
    if (!(ls >> cy >> cz >> r >> nx >> ny >> nz))
      throw ParseError("ring config line " + std::to_string(lineno) +
                       ": expected 'cx cy cz r nx ny nz'");
    double extra;
    if (ls >> extra)
      throw ParseError("ring config line " + std::to_string(lineno) + ": trailing fields");
    try {
      cfg.circles.push_back(Circle({cx, cy, cz}, r, {nx, ny, nz}));
    } catch (const DomainError& e) {
      throw ParseError("ring config line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return cfg;
}

inline std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

inline std::string to_string(const Circle& c) {
  return format_double(c.center.x) + " " + format_double(c.center.y) + " " +
         format_double(c.center.z) + " " + format_double(c.radius) + " " +
         format_double(c.normal.x) + " " + format_double(c.normal.y) + " " +
         format_double(c.normal.z);
}

inline std::string to_string(const RingConfig& cfg) {
  std::string out;
  for (const Circle& c : cfg.circles) out += to_string(c) + "\n";
  return out;
}

// Trajectory dump: blocks prefixed by u=<value>, blank line separated.
inline std::string to_string(const UnlinkCertificate& cert) {
  std::string out;
  for (const auto& [u, cfg] : cert.trajectory) {
    out += "u=" + format_double(u) + "\n";
    out += to_string(cfg);
    out += "\n";
  }
  return out;
}

}  // namespace ringwicket::geom
