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
 * @file positive.hpp
 * @brief Crease pattern of a positive gadget for a chosen dividing point.
 *
 * Side σ is critical when |φ_σ − 2ζ_σ| ≤ 1e-9. On a critical side G_σ
 * coincides with E_σ (δ_σ = 0) or H_σ (δ_σ > 0) and the coincident creases
 * are emitted once under a merged label such as "B_LE_L=B_LG_L".
 */

#pragma once

#include <cmath>
#include <cstdio>
#include <string>
#include <variant>

#include "origon/canonical_point.hpp"
#include "origon/crease_pattern.hpp"
#include "origon/critical.hpp"
#include "origon/frame.hpp"

namespace origon {

struct ExplicitPhiL {
  double value = 0.0;  // radians
};
struct CriticalL {};
struct CriticalR {};
struct Canonical {};

using DividingChoice = std::variant<ExplicitPhiL, CriticalL, CriticalR, Canonical>;

inline std::string describe(const DividingChoice& c) {
  if (const auto* e = std::get_if<ExplicitPhiL>(&c)) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "phi_L=%.12g", e->value);
    return buf;
  }
  if (std::holds_alternative<CriticalL>(c)) return "critical_L";
  if (std::holds_alternative<CriticalR>(c)) return "critical_R";
  return "canonical";
}

class NotConstructible : public Error {
 public:
  NotConstructible(Side s, const std::string& detail)
      : Error(std::string("side ") + to_string(s) + " not constructible: " + detail), side_(s) {}
  Side side() const { return side_; }

 private:
  Side side_;
};

/// Admissible φ_L. An end is open when the corresponding ζ is γ/2, because
/// the interval is then cut by (0, γ).
struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool lo_closed = true;
  bool hi_closed = true;

  bool contains(double x, double tol = 0.0) const {
    const bool above = lo_closed ? x >= lo - tol : x > lo + tol;
    const bool below = hi_closed ? x <= hi + tol : x < hi - tol;
    return above && below;
  }
};

inline Interval admissible_interval(const GadgetParams& p, const CriticalData& crit) {
  Interval in;
  in.lo = p.gamma - 2 * crit.zeta.R;
  in.hi = 2 * crit.zeta.L;
  if (in.lo <= 0.0) {
    in.lo = 0.0;
    in.lo_closed = false;
  }
  if (in.hi >= p.gamma) {
    in.hi = p.gamma;
    in.hi_closed = false;
  }
  return in;
}

inline double resolve_phi_L(const Frame& f, const DividingChoice& choice) {
  if (const auto* e = std::get_if<ExplicitPhiL>(&choice)) return e->value;
  if (std::holds_alternative<Canonical>(choice)) {
    return phi_L_of(f, canonical_geometric(f).first);
  }
  const CriticalData crit = critical_geometric(f);
  return std::holds_alternative<CriticalL>(choice) ? crit.phi_L.L : crit.phi_L.R;
}

namespace detail {

inline std::string sub(const std::string& name, Side s) { return name + "_" + to_string(s); }

/// Crossing of the ray from `origin` along `dir` with line AE.
inline Point2 onto_AE(const Frame& f, const Point2& origin, const Vec2& dir, const Point2& E) {
  const auto h = line_line_intersection(origin, dir, f.A, E - f.A);
  if (!h) throw InternalInconsistency("positive_pattern: crease parallel to AE");
  return h->point;
}

}  // namespace detail

inline CreasePattern positive_pattern(const Frame& f, const DividingChoice& choice) {
  using detail::sub;
  const GadgetParams& p = f.params;
  const double phi_L = resolve_phi_L(f, choice);
  if (!(phi_L > kGeomTol && phi_L < p.gamma - kGeomTol)) {
    throw DegenerateDividing("dividing point must lie inside the minor arc");
  }
  const Point2 D = arc_point(f, phi_L);
  const PerSide<double> zeta = critical_numeric(p);
  const PerSide<double> phi{phi_L, p.gamma - phi_L};
  for (Side s : kSides) {
    if (phi[s] > 2 * zeta[s] + kGeomTol) {
      throw NotConstructible(s, "phi exceeds twice the critical angle");
    }
  }

  CreasePattern cp;
  cp.meta.params = p;
  cp.meta.kind = GadgetKind::positive;
  cp.meta.dividing = describe(choice);
  cp.meta.phi_L = phi_L;
  cp.meta.diameter = f.diameter();

  cp.add_vertex("A", f.A);
  cp.add_vertex("B_L", f.B.L);
  cp.add_vertex("B_R", f.B.R);
  cp.add_vertex("D", D);
  cp.add_segment("AD", "A", "D", Assignment::mountain);

  PerSide<Point2> E;
  for (Side s : kSides) E[s] = pleat_corner(f, s, D);

  for (Side s : kSides) {
    const Assignment M = Assignment::mountain;
    const Assignment V = Assignment::valley;
    const Point2 B = f.B[s];
    const std::string b = sub("B", s), e = sub("E", s), g = sub("G", s), h = sub("H", s);
    const bool critical = std::abs(phi[s] - 2 * zeta[s]) <= kGeomTol;
    const bool pleated = p.delta(s) > 0.0;

    const Point2 G =
        detail::onto_AE(f, B, rotate(f.A - B, kPi - p.beta(s), Frame::outward(s)), E[s]);

    cp.add_ray(sub("j", s), "A", f.j[s].direction, M);
    cp.add_ray(sub("k", s), b, f.k[s].direction, V);
    cp.add_ray(sub("l", s), b, f.l[s].direction, M);
    cp.add_ray(sub("m", s), e, f.l[s].direction, V);
    cp.add_segment("A" + b, "A", b, M);
    cp.add_segment("A" + e, "A", e, V);

    if (!pleated) {
      if (critical) {
        cp.add_vertex(e, E[s], e + "=" + g);
        cp.add_segment(b + e + "=" + b + g, b, e, M);
        cp.add_segment("D" + e + "=D" + g, "D", e, M);
      } else {
        cp.add_vertex(e, E[s]);
        cp.add_vertex(g, G);
        cp.add_segment(b + g, b, g, M);
        cp.add_segment("D" + e, "D", e, M);
        cp.add_segment("D" + g, "D", g, V);
      }
      continue;
    }

    cp.add_vertex(e, E[s]);
    cp.add_segment(b + e, b, e, M);
    if (critical) {
      cp.add_vertex(g, G, g + "=" + h);
      cp.add_segment("D" + g + "=D" + h, "D", g, M);
      cp.add_segment(b + g + "=" + b + h, b, g, V);
    } else {
      const Point2 H = detail::onto_AE(
          f, B, rotate(E[s] - B, p.delta(s), flip(Frame::outward(s))), E[s]);
      cp.add_vertex(g, G);
      cp.add_vertex(h, H);
      cp.add_segment(b + g, b, g, M);
      cp.add_segment("D" + h, "D", h, M);
      cp.add_segment("D" + g, "D", g, V);
      cp.add_segment(b + h, b, h, V);
    }
  }
  cp.add_segment("E_LE_R", "E_L", "E_R", Assignment::valley);
  cp.validate();
  return cp;
}

}  // namespace origon
