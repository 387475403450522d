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
 * @file negative.hpp
 * @brief Crease pattern of the canonical negative gadget.
 *
 * The development is seen from the back, and assignments are as seen from
 * there. D_c carries no crease of its own; it is kept as a vertex because
 * E_LE_R is the perpendicular bisector of CD_c and G′_LG′_R runs through it.
 */

#pragma once

#include <string>
#include <tuple>

#include "origon/canonical_point.hpp"
#include "origon/crease_pattern.hpp"
#include "origon/critical.hpp"
#include "origon/frame.hpp"

namespace origon {

/// Points of the negative construction, exposed for verification.
struct NegativePoints {
  Point2 D_c;
  Point2 B_prime;
  PerSide<Point2> E;
  PerSide<Point2> Gp;  // G′_σ
  PerSide<Point2> P;   // P_σ
};

inline NegativePoints negative_points(const Frame& f) {
  NegativePoints n;
  std::tie(n.D_c, n.B_prime) = canonical_geometric(f);
  for (Side s : kSides) n.E[s] = pleat_corner(f, s, n.D_c);
  const Vec2 e = n.E.R - n.E.L;
  for (Side s : kSides) {
    const auto g = line_line_intersection(n.D_c, e, f.A, n.E[s] - f.A);
    const auto q = line_line_intersection(f.C, e, n.E[s], f.l[s].direction);
    if (!g || !q) throw InternalInconsistency("negative_points: parallel to E_LE_R");
    if (q->s < -f.tol()) throw InternalInconsistency("negative_points: P_σ behind E_σ on m_σ");
    n.Gp[s] = g->point;
    n.P[s] = q->point;
  }
  return n;
}

inline CreasePattern negative_pattern(const Frame& f) {
  const NegativePoints n = negative_points(f);
  CreasePattern cp;
  cp.meta.params = f.params;
  cp.meta.kind = GadgetKind::negative;
  cp.meta.dividing = "canonical";
  cp.meta.phi_L = phi_L_of(f, n.D_c);
  cp.meta.viewed_from = ViewedFrom::back;
  cp.meta.diameter = f.diameter();

  const bool bp_is_a = distance(n.B_prime, f.A) <= f.tol();
  cp.add_vertex("A", f.A, bp_is_a ? "A=B'" : "A");
  if (!bp_is_a) cp.add_vertex("B'", n.B_prime);
  cp.add_vertex("B_L", f.B.L);
  cp.add_vertex("B_R", f.B.R);
  cp.add_vertex("D_c", n.D_c);

  const Assignment M = Assignment::mountain;
  const Assignment V = Assignment::valley;
  for (Side s : kSides) {
    const std::string t = to_string(s);
    const std::string b = "B_" + t, e = "E_" + t, g = "G'_" + t, q = "P_" + t;
    cp.add_vertex(e, n.E[s]);
    cp.add_vertex(g, n.Gp[s]);
    cp.add_vertex(q, n.P[s]);
    cp.add_ray("j_" + t, "A", f.j[s].direction, M);
    cp.add_ray("k_" + t, b, f.k[s].direction, V);
    cp.add_ray("l_" + t, b, f.l[s].direction, V);
    cp.add_ray("m_" + t, e, f.l[s].direction, M);
    cp.add_segment("A" + e, "A", e, M);
    cp.add_segment(b + g, b, g, M);
    cp.add_segment(b + q, b, q, M);
    cp.add_segment("A" + b, "A", b, V);
    cp.add_segment(b + e, b, e, V);
  }
  cp.add_segment("E_LE_R", "E_L", "E_R", M);
  cp.add_segment("G'_LG'_R", "G'_L", "G'_R", V);
  cp.add_segment("P_LP_R", "P_L", "P_R", V);
  cp.validate();
  return cp;
}

}  // namespace origon
