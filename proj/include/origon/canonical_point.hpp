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
 * @file canonical_point.hpp
 * @brief The canonical dividing point D_c, by ruler and compass and by the
 * two closed-form routes.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <utility>

#include "origon/critical.hpp"
#include "origon/euclid.hpp"
#include "origon/frame.hpp"
#include "origon/params.hpp"

namespace origon {

struct CanonicalSolution {
  double rho_L = 0.0;
  double psi_L = 0.0;
  double phi_L = 0.0;
  Point2 D_c;
  Point2 B_prime;
  double V1 = 0.0;
  double V2 = 0.0;
  double W = 0.0;

  /// (V1 − rV2)·sin ρ_L − W·cos ρ_L over hypot(W, V1 − rV2): the linear
  /// equation for tan ρ_L, scaled so it stays O(1) when r is large.
  double residual = 0.0;
};

/// B′: the perpendiculars to k_L through B_L and to k_R through B_R meet here.
inline Point2 b_prime_point(const Frame& f) {
  const auto h = line_line_intersection(f.B.L, perp(f.k.L.direction), f.B.R,
                                        perp(f.k.R.direction));
  if (!h) throw InternalInconsistency("b_prime_point: perpendiculars to k are parallel");
  return h->point;
}

/// D_c = segment B′C ∩ minor arc; returns (D_c, B′).
inline std::pair<Point2, Point2> canonical_geometric(const Frame& f) {
  const Point2 bp = b_prime_point(f);
  const auto hits = segment_circle_intersections(f.C, bp, f.circle, f.tol());
  if (hits.empty()) throw InternalInconsistency("canonical_geometric: B'C misses c_A");
  const Point2 dc = hits.front();
  const double phi = phi_L_of(f, dc);
  if (!(phi > kGeomTol && phi < f.params.gamma - kGeomTol)) {
    throw InternalInconsistency("canonical_geometric: D_c is not inside the minor arc");
  }
  return {dc, bp};
}

namespace detail {

inline PerSide<Point2> ridge_ends(const GadgetParams& p) {
  const double h = p.gamma / 2;
  const Point2 bl = Point2{-std::sin(h), -std::cos(h)} * p.ridge_length;
  return {bl, mirror_x(bl)};
}

}  // namespace detail

/// ρ_L from the linear equation (V1 − rV2)·tan ρ_L = W, reduced into
/// (γ_R + δ_R − π/2, π/2 − γ_L − δ_L), then ψ_L = asin(r sin ρ_L) − ρ_L.
inline CanonicalSolution canonical_numeric(const GadgetParams& p) {
  const double bl = p.beta_L, br = p.beta_R, gl = p.gamma_L, gr = p.gamma_R;
  CanonicalSolution s;
  s.V1 = std::sin(bl + gl) * std::cos(br) + std::sin(br + gr) * std::cos(bl);
  s.V2 = std::sin(bl + br + p.gamma);
  s.W = std::cos(bl + gl) * std::cos(br) - std::cos(br + gr) * std::cos(bl);
  const double den = s.V1 - p.r * s.V2;
  if (std::abs(den) < 1e-12) {
    throw SolutionOutOfRange("canonical_numeric: V1 - r V2 vanishes");
  }
  const double lo = gr + p.delta_R - kPi / 2;
  const double hi = kPi / 2 - gl - p.delta_L;
  double rho = std::atan2(s.W, den);
  if (!(rho > lo && rho < hi)) rho += rho <= lo ? kPi : -kPi;
  if (rho <= lo - kGeomTol || rho >= hi + kGeomTol) {
    throw SolutionOutOfRange("canonical_numeric: rho_L outside its interval");
  }
  s.rho_L = rho;
  const double x = std::clamp(p.r * std::sin(rho), -1.0, 1.0);
  s.psi_L = std::asin(x) - rho;
  s.phi_L = gl - s.psi_L;
  if (!(s.psi_L > -gr - kGeomTol && s.psi_L < gl + kGeomTol)) {
    throw SolutionOutOfRange("canonical_numeric: psi_L outside (-gamma_R, gamma_L)");
  }
  s.residual = (den * std::sin(rho) - s.W * std::cos(rho)) / std::hypot(s.W, den);

  const auto b = detail::ridge_ends(p);
  s.D_c = rotate(b.L, s.phi_L);
  PerSide<Vec2> u;
  u.L = rotate(b.L, -bl);
  u.R = rotate(b.R, br);
  const auto h = line_line_intersection(b.L, perp(u.L), b.R, perp(u.R));
  if (!h) throw InternalInconsistency("canonical_numeric: perpendiculars to k are parallel");
  s.B_prime = h->point;
  return s;
}

struct BcdAngles {
  double angle_BL_C_Dc = 0.0;
  double angle_BR_C_Dc = 0.0;
  double rho_L = 0.0;
  double rho_R = 0.0;
};

/// ∠B_σCD_c in closed form, and ρ_σ from it.
///
/// ρ_R = π/2 − (γ_R + δ_R + ∠B_RCD_c), the mirror of the L formula, so that
/// ρ_R = ∠₋ACD_c = −ρ_L.
inline BcdAngles bcd_angles(const GadgetParams& p) {
  const double g = p.gamma;
  auto angle = [&](Side s) {
    const Side o = other(s);
    const double c_over_b = std::sin(p.alpha) / std::sin(p.beta(o) + g / 2) *
                            std::sin(g / 2 + p.delta(o)) /
                            std::sin(g + p.delta_L + p.delta_R);
    const double e = p.beta(s) - p.delta(s);
    return std::atan2(std::sin(e), c_over_b + std::cos(e));
  };
  BcdAngles a;
  a.angle_BL_C_Dc = angle(Side::L);
  a.angle_BR_C_Dc = angle(Side::R);
  a.rho_L = kPi / 2 - (p.gamma_L + p.delta_L + a.angle_BL_C_Dc);
  a.rho_R = kPi / 2 - (p.gamma_R + p.delta_R + a.angle_BR_C_Dc);
  return a;
}

}  // namespace origon
