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
 * @file critical.hpp
 * @brief Angle functions on c_A, the critical angles ζ_σ and their dividing
 * points, and the constructibility test for a positive gadget.
 *
 * ζ_σ is computed three ways: critical_numeric (closed form),
 * critical_geometric (chords through D′_σ) and critical_original (the ray
 * n_σ against the chain A → P → m_σ). They must agree.
 */

#pragma once

#include <cmath>
#include <optional>
#include <string>

#include "origon/euclid.hpp"
#include "origon/frame.hpp"
#include "origon/params.hpp"

namespace origon {

/// Angle bundle of a point D on the minor arc.
struct ArcAngles {
  double phi_L = 0.0;  // ∠₊B_LAD
  double phi_R = 0.0;  // ∠₋B_RAD
  double psi_L = 0.0;  // ∠₋CAD
  double psi_R = 0.0;
  double rho_L = 0.0;  // ∠₊ACD
  double rho_R = 0.0;

  double phi(Side s) const { return s == Side::L ? phi_L : phi_R; }
  double psi(Side s) const { return s == Side::L ? psi_L : psi_R; }
  double rho(Side s) const { return s == Side::L ? rho_L : rho_R; }
};

/// Counterclockwise angle from B_L to X about A, in (−π, π].
inline double phi_L_of(const Frame& f, const Point2& X) {
  return signed_angle(f.A, f.B.L, X, Orientation::ccw, f.tol());
}

/// φ′_σ(X) for X on the major arc: clockwise from B_L for L, counterclockwise
/// from B_R for R, in [0, 2π − γ].
inline double major_phi(const Frame& f, Side s, const Point2& X) {
  double a = signed_angle(f.A, f.B[s], X, Frame::outward(s), f.tol());
  if (a < -f.params.gamma / 2) a += 2.0 * kPi;
  return a;
}

/// ρ as a function of ψ on c_A: tan ρ = sin ψ / (r − cos ψ), in angle form.
inline double rho_of_psi(double psi, double r) {
  return std::atan2(std::sin(psi), r - std::cos(psi));
}

inline ArcAngles arc_angles(const Frame& f, const Point2& D) {
  const GadgetParams& p = f.params;
  if (std::abs(distance(f.A, D) - p.ridge_length) > f.tol()) {
    throw NotOnArc("arc_angles: point is not on c_A");
  }
  const double phi = phi_L_of(f, D);
  if (phi < -kGeomTol || phi > p.gamma + kGeomTol) {
    throw NotOnArc("arc_angles: point lies on the major arc");
  }
  ArcAngles a;
  a.phi_L = phi;
  a.phi_R = p.gamma - phi;
  a.psi_L = signed_angle(f.A, f.C, D, Orientation::cw, f.tol());
  a.psi_R = -a.psi_L;
  a.rho_L = signed_angle(f.C, f.A, D, Orientation::ccw, f.tol());
  a.rho_R = -a.rho_L;
  if (std::abs(wrap_pi(a.phi_L + a.psi_L - p.gamma_L)) > kGeomTol) {
    throw InternalInconsistency("arc_angles: phi_L + psi_L differs from gamma_L");
  }
  if (std::abs(a.rho_L - rho_of_psi(a.psi_L, p.r)) > kGeomTol) {
    throw InternalInconsistency("arc_angles: rho and psi disagree on c_A");
  }
  return a;
}

/// Sign of β_σ + γ/2 + δ_σ′ − π: where D′_σ sits on the major arc.
enum class Trichotomy { interior, boundary, saturated };

constexpr const char* to_string(Trichotomy t) {
  switch (t) {
    case Trichotomy::interior: return "interior";
    case Trichotomy::boundary: return "boundary";
    case Trichotomy::saturated: return "saturated";
  }
  return "?";
}

inline double trichotomy_margin(const GadgetParams& p, Side s) {
  return p.beta(s) + p.gamma / 2 + p.delta(other(s)) - kPi;
}

inline Trichotomy classify(double margin) {
  if (std::abs(margin) <= kGeomTol) return Trichotomy::boundary;
  return margin < 0 ? Trichotomy::interior : Trichotomy::saturated;
}

/// Closed-form ζ_σ. The reciprocal of b_σ = tan(β_σ − δ_σ) is taken as
/// cot(β_σ − δ_σ), which is 0 when b_σ is infinite.
inline PerSide<double> critical_numeric(const GadgetParams& p) {
  PerSide<double> z;
  const double g = p.gamma;
  for (Side s : kSides) {
    const double b = p.beta(s);
    const double d = p.delta(s);
    const double dp = p.delta(other(s));
    if (b + g / 2 + dp >= kPi) {
      z[s] = g / 2;
      continue;
    }
    const double k = std::cos(g / 2) / std::sin(g / 2);
    const double kp = std::cos(g / 2 + d + dp) / std::sin(g / 2 + d + dp);
    const double kb = std::cos(b - d) / std::sin(b - d);
    const double num = std::cos(d) - std::sin(d) * kp;
    const double den = std::cos(d) * (k + kp) + (std::cos(d) + std::sin(d) * k) * kb;
    z[s] = std::atan2(num, den);
  }
  return z;
}

struct CriticalData {
  PerSide<double> zeta;
  PerSide<Point2> D;         // critical dividing points, on the minor arc
  PerSide<Point2> Dp;        // D′_σ, at φ′_σ = 2β_σ
  PerSide<Point2> Bp;        // B′_σ, at φ′_σ = 2δ_σ
  PerSide<Trichotomy> tag;   // from the parameter inequality
  PerSide<double> margin;    // β_σ + γ/2 + δ_σ′ − π
  PerSide<double> phi_L;     // φ_L(D_σ)
};

/// Farthest point where a ray starting on the circle leaves it again.
inline Point2 far_hit(const Ray& ray, const Circle& c, double tol) {
  const auto hits = ray_circle_intersections(ray, c, tol);
  if (hits.empty()) throw InternalInconsistency("far_hit: ray misses the circle");
  return hits.back();
}

/// D′_σ: second intersection of c_A with the perpendicular to k_σ through B_σ.
inline Point2 d_prime(const Frame& f, Side s) {
  Ray n = perpendicular_through(f.B[s], f.k[s]);
  if (dot(n.direction, f.B[s] - f.A) > 0) n = perpendicular_through(f.B[s], f.k[s], Turn::right);
  return far_hit(n, f.circle, f.tol());
}

/// B′_σ: second intersection of c_A with the extension of CB_σ beyond B_σ.
inline Point2 b_prime(const Frame& f, Side s) {
  return far_hit(Ray(f.B[s], f.B[s] - f.C), f.circle, f.tol());
}

inline CriticalData critical_geometric(const Frame& f) {
  const GadgetParams& p = f.params;
  const double tol = f.tol();
  CriticalData out;
  for (Side s : kSides) {
    const Side o = other(s);
    out.Dp[s] = d_prime(f, s);
    out.Bp[s] = b_prime(f, s);
    out.margin[s] = trichotomy_margin(p, s);
    out.tag[s] = classify(out.margin[s]);

    const Point2 endpoint = f.B[o];
    const double endpoint_phi = s == Side::L ? p.gamma : 0.0;
    std::optional<double> hit_phi;
    const auto hits = segment_circle_intersections(f.C, out.Dp[s], f.circle, tol);
    if (!hits.empty()) {
      const double a = phi_L_of(f, hits.front());
      if (a >= -kGeomTol && a <= p.gamma + kGeomTol) hit_phi = a;
    }
    // Strictly inside the arc: more than ε away from both endpoints.
    const bool inside =
        hit_phi && *hit_phi > kGeomTol && *hit_phi < p.gamma - kGeomTol;

    switch (out.tag[s]) {
      case Trichotomy::interior:
        if (!hit_phi) {
          throw InternalInconsistency(std::string("critical_geometric: segment CD'_") +
                                      to_string(s) + " misses the minor arc");
        }
        if (inside) {
          out.D[s] = hits.front();
          out.phi_L[s] = *hit_phi;
        } else {
          out.D[s] = std::abs(*hit_phi) <= kGeomTol ? f.B.L : f.B.R;
          out.phi_L[s] = std::abs(*hit_phi) <= kGeomTol ? 0.0 : p.gamma;
        }
        break;
      case Trichotomy::boundary:
        out.D[s] = endpoint;
        out.phi_L[s] = endpoint_phi;
        break;
      case Trichotomy::saturated:
        if (inside) {
          throw InternalInconsistency(std::string("critical_geometric: saturated side ") +
                                      to_string(s) + " meets the arc interior");
        }
        out.D[s] = endpoint;
        out.phi_L[s] = endpoint_phi;
        break;
    }
    const double phi = s == Side::L ? out.phi_L[s] : p.gamma - out.phi_L[s];
    out.zeta[s] = phi / 2;
  }
  return out;
}

/// ζ_σ from the ray n_σ, which leaves B_σ at interior angle π − β_σ + δ_σ to
/// B_σA, and its first hit Q_σ on segment AP or on m_σ beyond P.
inline PerSide<double> critical_original(const Frame& f) {
  const GadgetParams& p = f.params;
  const double tol = f.tol();
  PerSide<double> z;
  for (Side s : kSides) {
    const Point2 B = f.B[s];
    const Ray n(B, rotate(f.A - B, kPi - p.beta(s) + p.delta(s), Frame::outward(s)));
    std::optional<LineHit> best;
    const double ap = distance(f.A, f.P);
    if (auto h = line_line_intersection(n, Ray::through(f.A, f.P))) {
      if (h->t > tol && h->s >= -tol && h->s <= ap + tol) best = h;
    }
    if (auto h = line_line_intersection(n, f.m[s])) {
      if (h->t > tol && h->s >= -tol && (!best || h->t < best->t)) best = h;
    }
    if (!best) {
      throw NoIntersection(std::string("critical_original: n_") + to_string(s) +
                           " misses the chain A-P-m");
    }
    z[s] = signed_angle(f.A, B, best->point, flip(Frame::outward(s)), tol);
  }
  return z;
}

/// E_σ: m_σ (as the perpendicular bisector of B_σC) meets the bisector of ∠B_σAD.
inline Point2 pleat_corner(const Frame& f, Side s, const Point2& D) {
  const Ray bis = angle_bisector(f.A, f.B[s], D, f.tol());
  const auto h = line_line_intersection(bis.origin, bis.direction, midpoint(f.B[s], f.C),
                                        f.l[s].direction);
  if (!h) throw InternalInconsistency("pleat_corner: bisector parallel to m");
  return h->point;
}

struct Constructibility {
  bool by_angle = false;  // π − ∠AB_σE_σ ≤ β_σ − δ_σ
  bool by_phi = false;    // φ_σ ≤ 2ζ_σ
  bool by_psi = false;    // β_σ + γ_σ/2 + ψ_σ/2 + ρ_σ ≥ π/2

  bool all() const { return by_angle && by_phi && by_psi; }
  bool agree() const { return by_angle == by_phi && by_phi == by_psi; }
};

/// The three equivalent constructibility conditions per side, inclusive to ε.
inline PerSide<Constructibility> constructible(const GadgetParams& p, const Frame& f,
                                               const Point2& D) {
  const ArcAngles a = arc_angles(f, D);
  const PerSide<double> zeta = critical_numeric(p);
  PerSide<Constructibility> out;
  for (Side s : kSides) {
    const Point2 E = pleat_corner(f, s, D);
    const double theta = signed_angle(f.B[s], f.A, E, Frame::outward(s), f.tol());
    out[s].by_angle = kPi - theta <= p.beta(s) - p.delta(s) + kGeomTol;
    out[s].by_phi = a.phi(s) <= 2 * zeta[s] + kGeomTol;
    out[s].by_psi =
        p.beta(s) + p.gamma_side(s) / 2 + a.psi(s) / 2 + a.rho(s) >= kPi / 2 - kGeomTol;
  }
  return out;
}

}  // namespace origon
