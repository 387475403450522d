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

#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <tuple>
#include <utility>

#include "origon/euclid.hpp"

namespace origon {

enum class Side { L, R };

constexpr Side other(Side s) { return s == Side::L ? Side::R : Side::L; }
constexpr const char* to_string(Side s) { return s == Side::L ? "L" : "R"; }

/// One value per side of the gadget.
template <typename T>
struct PerSide {
  T L{};
  T R{};

  constexpr T& operator[](Side s) { return s == Side::L ? L : R; }
  constexpr const T& operator[](Side s) const { return s == Side::L ? L : R; }
};

inline constexpr Side kSides[] = {Side::L, Side::R};

/// Strictness margin for the parameter conditions, in radians.
inline constexpr double kAngleTol = 1e-12;

/// The five input angles (radians) and the ridge length.
struct RawParams {
  double alpha = 0.0;
  double beta_L = 0.0;
  double beta_R = 0.0;
  double delta_L = 0.0;
  double delta_R = 0.0;
  double ridge_length = 1.0;

  double beta(Side s) const { return s == Side::L ? beta_L : beta_R; }
  double delta(Side s) const { return s == Side::L ? delta_L : delta_R; }

  static RawParams from_degrees(double alpha, double beta_L, double beta_R, double delta_L,
                                double delta_R, double ridge_length = 1.0) {
    const double k = kPi / 180.0;
    return {alpha * k, beta_L * k, beta_R * k, delta_L * k, delta_R * k, ridge_length};
  }
};

/// Validated parameters with the derived scalars.
struct GadgetParams : RawParams {
  double gamma = 0.0;
  double gamma_L = 0.0;
  double gamma_R = 0.0;
  double r = 0.0;  // |AC| / |AB|

  double gamma_side(Side s) const { return s == Side::L ? gamma_L : gamma_R; }
};

enum class Condition { i, ii, iii_a, iii_b, iii_c };

constexpr const char* to_string(Condition c) {
  switch (c) {
    case Condition::i: return "i";
    case Condition::ii: return "ii";
    case Condition::iii_a: return "iii.a";
    case Condition::iii_b: return "iii.b";
    case Condition::iii_c: return "iii.c";
  }
  return "?";
}

class ConditionViolation : public Error {
 public:
  ConditionViolation(Condition tag, const std::string& detail)
      : Error(std::string("condition ") + to_string(tag) + " violated: " + detail), tag_(tag) {}
  Condition tag() const { return tag_; }

 private:
  Condition tag_;
};

/// Input outside the declared domain (non-finite, angle outside (0, π), ridge ≤ 0).
class InvalidParams : public Error {
 public:
  using Error::Error;
};

/// (γ_L, γ_R) with γ_L = ∠₊B_LAC and γ_R = γ − γ_L.
///
/// Evaluates tan γ_L as a fraction whose numerator and denominator were both
/// multiplied by cos δ_L cos δ_R. The pair is a positive multiple of
/// (sin γ_L, cos γ_L), so atan2 picks the branch and no special case is needed
/// at δ_σ = π/2.
inline std::pair<double, double> gamma_sides(double gamma, double delta_L, double delta_R) {
  const double n = std::cos(delta_L) * (std::cos(delta_R) - std::cos(gamma + delta_R));
  const double d = std::cos(delta_L) * std::sin(gamma + delta_R) +
                   std::sin(delta_L) * std::cos(delta_R);
  const double gl = std::atan2(n, d);
  return {gl, gamma - gl};
}

namespace detail {

inline double radius_ratio_side(double gamma, double gamma_s, double delta_s, double delta_o) {
  if (std::abs(delta_s - kPi / 2) < 1e-8) {
    return 1.0 / (std::cos(gamma) - std::sin(gamma) * std::tan(delta_o));
  }
  return std::cos(delta_s) / std::cos(gamma_s + delta_s);
}

}  // namespace detail

/// r = |AC|/|AB|, evaluated from both sides; throws if they disagree.
inline double radius_ratio(double gamma, double gamma_L, double gamma_R, double delta_L,
                           double delta_R) {
  const double rl = detail::radius_ratio_side(gamma, gamma_L, delta_L, delta_R);
  const double rr = detail::radius_ratio_side(gamma, gamma_R, delta_R, delta_L);
  // r grows without bound as γ + δ_L + δ_R → π, so compare relatively.
  if (!(std::abs(rl - rr) <= kGeomTol * std::max(1.0, std::abs(rl))) || !(rl > 0.0)) {
    throw InternalInconsistency("radius_ratio: side evaluations disagree");
  }
  return rl;
}

inline double radius_ratio(const GadgetParams& p) {
  return radius_ratio(p.gamma, p.gamma_L, p.gamma_R, p.delta_L, p.delta_R);
}

/// Checks the conditions in order (i), (ii), (iii.a), (iii.b), (iii.c).
inline GadgetParams validate(const RawParams& raw) {
  const double angles[] = {raw.alpha, raw.beta_L, raw.beta_R, raw.delta_L, raw.delta_R};
  for (double a : angles) {
    if (!std::isfinite(a)) throw InvalidParams("angles must be finite");
  }
  if (!(raw.ridge_length > 0.0) || !std::isfinite(raw.ridge_length)) {
    throw InvalidParams("ridge_length must be positive");
  }
  for (double a : {raw.alpha, raw.beta_L, raw.beta_R}) {
    if (!(a > 0.0 && a < kPi)) throw InvalidParams("alpha and beta must lie in (0, pi)");
  }

  const double g = 2.0 * kPi - raw.alpha - raw.beta_L - raw.beta_R;
  const double e = kAngleTol;
  if (!(raw.beta_L + g / 2 < kPi - e)) throw ConditionViolation(Condition::i, "beta_L + gamma/2 < pi");
  if (!(raw.beta_R + g / 2 < kPi - e)) throw ConditionViolation(Condition::i, "beta_R + gamma/2 < pi");
  if (!(raw.beta_L + raw.beta_R + g / 2 > kPi + e)) {
    throw ConditionViolation(Condition::i, "beta_L + beta_R + gamma/2 > pi");
  }
  if (!(g > e)) throw ConditionViolation(Condition::ii, "gamma > 0");
  if (raw.delta_L < 0.0 || raw.delta_R < 0.0) {
    throw ConditionViolation(Condition::iii_a, "delta_L >= 0 and delta_R >= 0");
  }
  if (!(raw.delta_L < raw.beta_L - e)) throw ConditionViolation(Condition::iii_b, "delta_L < beta_L");
  if (!(raw.delta_R < raw.beta_R - e)) throw ConditionViolation(Condition::iii_b, "delta_R < beta_R");
  if (!(g + raw.delta_L + raw.delta_R < kPi - e)) {
    throw ConditionViolation(Condition::iii_c, "gamma + delta_L + delta_R < pi");
  }

  GadgetParams p;
  static_cast<RawParams&>(p) = raw;
  p.gamma = g;
  std::tie(p.gamma_L, p.gamma_R) = gamma_sides(g, raw.delta_L, raw.delta_R);
  p.r = radius_ratio(p);
  return p;
}

}  // namespace origon
