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
 * @file frame.hpp
 * @brief The net embedded in the plane, with the pleat construction applied.
 *
 * Embedding: A at the origin, the bisector of ∠B_LAB_R pointing down the −y
 * axis, B_L on the −x side. The minor arc runs counterclockwise from B_L to
 * B_R. Swapping the L and R parameters mirrors everything across the y axis.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <utility>

#include "origon/euclid.hpp"
#include "origon/params.hpp"

namespace origon {

struct Frame {
  GadgetParams params;
  Point2 A;
  PerSide<Point2> B;
  Point2 C;
  Point2 P;
  PerSide<Ray> j;  // from A, boundary of top face and side face σ
  PerSide<Ray> k;  // from B_σ, parallel to j_σ
  PerSide<Ray> l;  // pleat fold from B_σ
  PerSide<Ray> m;  // perpendicular bisector of B_σC, from P along ℓ_σ
  Circle circle;   // c_A

  /// Geometric tolerance at this frame's scale.
  double tol() const { return kGeomTol * params.ridge_length; }

  /// Rotation sense that carries A→B_σ into the side face σ (clockwise for L).
  static constexpr Orientation outward(Side s) {
    return s == Side::L ? Orientation::cw : Orientation::ccw;
  }

  /// Largest pairwise distance among A, B_L, B_R, C, P.
  double diameter() const {
    const Point2 pts[] = {A, B.L, B.R, C, P};
    double d = 0.0;
    for (const auto& a : pts) {
      for (const auto& b : pts) d = std::max(d, distance(a, b));
    }
    return d;
  }
};

/// Rotation by `angle` in the given sense.
inline Vec2 rotate(const Vec2& v, double angle, Orientation o) {
  return rotate(v, o == Orientation::ccw ? angle : -angle);
}

/// Point on c_A at angle φ_L counterclockwise from B_L.
inline Point2 arc_point(const Frame& f, double phi_L) {
  return rotate_about(f.B.L, f.A, phi_L);
}

inline Frame build_frame(const GadgetParams& p) {
  Frame f;
  f.params = p;
  const double L = p.ridge_length;
  const double h = p.gamma / 2;
  f.A = {0.0, 0.0};
  f.B.L = Point2{-std::sin(h), -std::cos(h)} * L;
  f.B.R = mirror_x(f.B.L);
  f.circle = Circle(f.A, L);

  for (Side s : kSides) {
    const Vec2 ab = f.B[s] - f.A;
    const Orientation out = Frame::outward(s);
    const Vec2 u = rotate(ab, p.beta(s), out);
    f.j[s] = Ray(f.A, u);
    f.k[s] = Ray(f.B[s], u);
    f.l[s] = Ray(f.B[s], rotate(ab, p.delta(s), out));
  }

  const auto c = line_line_intersection(f.B.L, perp(f.l.L.direction), f.B.R,
                                        perp(f.l.R.direction));
  if (!c) throw InternalInconsistency("build_frame: perpendiculars to the pleats are parallel");
  f.C = c->point;

  const auto pc = line_line_intersection(midpoint(f.B.L, f.C), f.l.L.direction,
                                         midpoint(f.B.R, f.C), f.l.R.direction);
  if (!pc) throw InternalInconsistency("build_frame: pleat bisectors are parallel");
  f.P = pc->point;
  for (Side s : kSides) f.m[s] = Ray(f.P, f.l[s].direction);

  const double gl = signed_angle(f.A, f.B.L, f.C, Orientation::ccw, f.tol());
  const double gr = signed_angle(f.A, f.B.R, f.C, Orientation::cw, f.tol());
  if (std::abs(wrap_pi(gl - p.gamma_L)) > kGeomTol || std::abs(wrap_pi(gr - p.gamma_R)) > kGeomTol) {
    throw InternalInconsistency("build_frame: measured angle at A differs from gamma_sides");
  }
  return f;
}

inline std::pair<Ray, Ray> k_rays(const Frame& f) { return {f.k.L, f.k.R}; }

}  // namespace origon
