// Copyright 2026 The Origon Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file euclid.hpp
 * @brief Small 2D kernel that simulates ruler-and-compass steps in doubles.
 *
 * Every predicate ("intersection exists", "point on arc") uses one absolute
 * tolerance, kGeomTol, stated at unit ridge length. Functions that work on a
 * scaled drawing take the tolerance as a trailing argument.
 *
 * Angles are radians. signed_angle() with Orientation::ccw is the rotation
 * angle measured counterclockwise, Orientation::cw the clockwise one, and the
 * two are exact negatives of each other.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <vector>

#include "origon/errors.hpp"

namespace origon {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kGeomTol = 1e-9;

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Point2 operator+(const Point2& o) const { return {x + o.x, y + o.y}; }
  constexpr Point2 operator-(const Point2& o) const { return {x - o.x, y - o.y}; }
  constexpr Point2 operator-() const { return {-x, -y}; }
  constexpr Point2 operator*(double s) const { return {x * s, y * s}; }
  constexpr Point2 operator/(double s) const { return {x / s, y / s}; }
  constexpr bool operator==(const Point2&) const = default;
};

/// Points double as displacement vectors.
using Vec2 = Point2;

constexpr Point2 operator*(double s, const Point2& p) { return p * s; }

constexpr double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline double norm(const Vec2& v) { return std::hypot(v.x, v.y); }
inline double distance(const Point2& a, const Point2& b) { return norm(b - a); }
inline bool is_finite(const Point2& p) { return std::isfinite(p.x) && std::isfinite(p.y); }

inline Vec2 normalized(const Vec2& v) {
  const double n = norm(v);
  if (!(n > 0.0) || !std::isfinite(n)) throw DegeneratePoint("cannot normalize a zero vector");
  return v / n;
}

/// Counterclockwise rotation by `angle`.
inline Vec2 rotate(const Vec2& v, double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return {c * v.x - s * v.y, s * v.x + c * v.y};
}

inline Point2 rotate_about(const Point2& p, const Point2& center, double angle) {
  return center + rotate(p - center, angle);
}

/// Left-hand normal.
constexpr Vec2 perp(const Vec2& v) { return {-v.y, v.x}; }

inline Point2 midpoint(const Point2& a, const Point2& b) { return (a + b) * 0.5; }

/// Mirror across the y axis.
constexpr Point2 mirror_x(const Point2& p) { return {-p.x, p.y}; }

enum class Orientation { ccw, cw };

constexpr Orientation flip(Orientation o) {
  return o == Orientation::ccw ? Orientation::cw : Orientation::ccw;
}

/// Angle in (−π, π] for ccw; the cw value is its negation.
inline double signed_angle(const Point2& vertex, const Point2& from, const Point2& to,
                           Orientation orientation, double tol = kGeomTol) {
  const Vec2 a = from - vertex;
  const Vec2 b = to - vertex;
  if (norm(a) <= tol || norm(b) <= tol) {
    throw DegeneratePoint("signed_angle: leg shorter than tolerance");
  }
  // atan2 of (cross, dot) avoids the cancellation of subtracting two atan2s.
  const double ccw = std::atan2(cross(a, b), dot(a, b));
  return orientation == Orientation::ccw ? ccw : -ccw;
}

/// Unsigned angle in [0, π] between two directions.
inline double angle_between(const Vec2& a, const Vec2& b) {
  return std::abs(std::atan2(cross(a, b), dot(a, b)));
}

/// Reduce into (−π, π].
inline double wrap_pi(double a) {
  a = std::remainder(a, 2.0 * kPi);
  if (a <= -kPi) a += 2.0 * kPi;
  return a;
}

struct Ray {
  Point2 origin;
  Vec2 direction;  // unit

  Ray() = default;
  Ray(Point2 o, Vec2 d) : origin(o), direction(normalized(d)) {}

  static Ray through(Point2 from, Point2 to) { return Ray(from, to - from); }
  Point2 at(double t) const { return origin + direction * t; }
};

struct Circle {
  Point2 center;
  double radius = 1.0;

  Circle() = default;
  Circle(Point2 c, double r) : center(c), radius(r) {
    if (!(r > 0.0) || !std::isfinite(r)) throw DegeneratePoint("circle radius must be positive");
  }
};

/// Parameter values of a line–line crossing.
struct LineHit {
  Point2 point;
  double t = 0.0;  // along the first line
  double s = 0.0;  // along the second line
};

/// Crossing of the lines p + t·d and q + s·e; nullopt when (nearly) parallel.
inline std::optional<LineHit> line_line_intersection(const Point2& p, const Vec2& d,
                                                     const Point2& q, const Vec2& e) {
  const double den = cross(d, e);
  if (std::abs(den) <= 1e-14 * norm(d) * norm(e)) return std::nullopt;
  const Vec2 w = q - p;
  const double t = cross(w, e) / den;
  const double s = cross(w, d) / den;
  return LineHit{p + d * t, t, s};
}

inline std::optional<LineHit> line_line_intersection(const Ray& a, const Ray& b) {
  return line_line_intersection(a.origin, a.direction, b.origin, b.direction);
}

/// Parameters of the crossings of the full line through `r` with `c`, ascending.
/// One value on tangency (half chord ≤ tol).
inline std::vector<double> line_circle_parameters(const Ray& r, const Circle& c,
                                                  double tol = kGeomTol) {
  const Vec2 w = r.origin - c.center;
  const double along = dot(w, r.direction);
  const double h = cross(r.direction, w);  // signed distance from the center
  const double disc = (c.radius - h) * (c.radius + h);
  if (disc < -tol * tol) return {};
  if (disc <= tol * tol) return {-along};
  const double half = std::sqrt(disc);
  return {-along - half, -along + half};
}

/// Points where the ray meets the circle, ordered by ray parameter.
inline std::vector<Point2> ray_circle_intersections(const Ray& r, const Circle& c,
                                                    double tol = kGeomTol) {
  std::vector<Point2> out;
  for (double t : line_circle_parameters(r, c, tol)) {
    if (t >= -tol) out.push_back(r.at(std::max(t, 0.0)));
  }
  return out;
}

/// Points where segment ab meets the circle, ordered from a.
inline std::vector<Point2> segment_circle_intersections(const Point2& a, const Point2& b,
                                                        const Circle& c,
                                                        double tol = kGeomTol) {
  const double len = distance(a, b);
  if (len <= tol) throw DegeneratePoint("segment_circle_intersections: zero-length segment");
  const Ray r = Ray::through(a, b);
  std::vector<Point2> out;
  for (double t : line_circle_parameters(r, c, tol)) {
    if (t >= -tol && t <= len + tol) out.push_back(r.at(std::clamp(t, 0.0, len)));
  }
  return out;
}

enum class Turn { left, right };

/// Ray through p perpendicular to `base`, pointing to the chosen side of it.
inline Ray perpendicular_through(const Point2& p, const Ray& base, Turn side = Turn::left) {
  const Vec2 n = perp(base.direction);
  return Ray(p, side == Turn::left ? n : -n);
}

/// Bisector of the non-reflex angle ∠a·vertex·b.
inline Ray angle_bisector(const Point2& vertex, const Point2& a, const Point2& b,
                          double tol = kGeomTol) {
  const Vec2 da = a - vertex;
  const Vec2 db = b - vertex;
  if (norm(da) <= tol || norm(db) <= tol) {
    throw DegeneratePoint("angle_bisector: leg shorter than tolerance");
  }
  const Vec2 ua = normalized(da);
  const Vec2 ub = normalized(db);
  const Vec2 sum = ua + ub;
  // Straight angle: either normal bisects it; take the left one of the first leg.
  if (norm(sum) <= 1e-15) return Ray(vertex, perp(ua));
  return Ray(vertex, sum);
}

/// Perpendicular bisector of ab as a ray from the midpoint, left of a→b.
inline Ray perpendicular_bisector(const Point2& a, const Point2& b, double tol = kGeomTol) {
  if (distance(a, b) <= tol) throw DegeneratePoint("perpendicular_bisector: coincident points");
  return Ray(midpoint(a, b), perp(b - a));
}

/// Distance from p to the full line through r.
inline double line_distance(const Point2& p, const Ray& r) {
  return std::abs(cross(r.direction, p - r.origin));
}

}  // namespace origon
