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
 * @file verify.hpp
 * @brief Seeded random sweeps that check the geometric identities and
 * inequalities on many parameter sets.
 *
 * Equality checks pass when their residual is at most the tolerance;
 * inequality checks pass when their margin is positive. A check that throws
 * counts as failed with an infinite residual.
 */

#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <limits>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "origon/canonical.hpp"
#include "origon/canonical_point.hpp"
#include "origon/critical.hpp"
#include "origon/frame.hpp"
#include "origon/negative.hpp"
#include "origon/params.hpp"
#include "origon/positive.hpp"

namespace origon {

/// Uniform in [0, 1) from the top 53 bits, identical on every platform.
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline constexpr double kSampleMargin = 1e-6;
inline constexpr long kMaxRejections = 1000000;

inline bool within_margin(const RawParams& q, double m = kSampleMargin) {
  const double g = 2 * kPi - q.alpha - q.beta_L - q.beta_R;
  return q.alpha > m && q.alpha < kPi - m && q.beta_L > m && q.beta_L < kPi - m &&
         q.beta_R > m && q.beta_R < kPi - m && g > m && q.beta_L + g / 2 < kPi - m &&
         q.beta_R + g / 2 < kPi - m && q.beta_L + q.beta_R + g / 2 > kPi + m &&
         q.delta_L < q.beta_L - m && q.delta_R < q.beta_R - m && g + q.delta_L + q.delta_R < kPi - m;
}

/// α, β_σ uniform in (0, π) and δ_σ uniform in [0, β_σ), rejected until every
/// condition holds with margin 1e-6.
inline GadgetParams sample_params(std::mt19937_64& rng) {
  for (long i = 0; i < kMaxRejections; ++i) {
    RawParams q;
    q.alpha = kPi * uniform01(rng);
    q.beta_L = kPi * uniform01(rng);
    q.beta_R = kPi * uniform01(rng);
    q.delta_L = q.beta_L * uniform01(rng);
    q.delta_R = q.beta_R * uniform01(rng);
    if (within_margin(q)) return validate(q);
  }
  throw SamplingExhausted("sample_params: no valid parameters after 1e6 draws");
}

/// As sample_params with β_L = β_R = π/2.
inline GadgetParams sample_right_params(std::mt19937_64& rng) {
  for (long i = 0; i < kMaxRejections; ++i) {
    RawParams q;
    q.alpha = kPi * uniform01(rng);
    q.beta_L = q.beta_R = kPi / 2;
    q.delta_L = q.beta_L * uniform01(rng);
    q.delta_R = q.beta_R * uniform01(rng);
    if (within_margin(q)) return validate(q);
  }
  throw SamplingExhausted("sample_right_params: no valid parameters after 1e6 draws");
}

enum class CheckKind { equality, inequality };

struct CheckResult {
  std::string name;
  CheckKind kind = CheckKind::equality;
  long attempted = 0;
  long passed = 0;
  /// Largest residual (equality) or smallest margin (inequality).
  double worst = 0.0;
  RawParams worst_params;
  long worst_sample = -1;
};

struct SweepConfig {
  long samples = 10000;
  std::uint64_t seed = 42;
  double tolerance = kGeomTol;
  std::set<std::string> checks;  // empty: all
};

struct SweepReport {
  std::vector<CheckResult> checks;

  bool pass() const {
    for (const auto& c : checks) {
      if (c.passed != c.attempted) return false;
    }
    return true;
  }
  const CheckResult* find(const std::string& name) const {
    for (const auto& c : checks) {
      if (c.name == name) return &c;
    }
    return nullptr;
  }
  /// One line per check: `name attempted passed worst`.
  std::string to_text() const {
    std::string out;
    char buf[160];
    for (const auto& c : checks) {
      std::snprintf(buf, sizeof buf, "%s %ld %ld %.6e\n", c.name.c_str(), c.attempted, c.passed,
                    c.worst);
      out += buf;
    }
    out += pass() ? "overall pass\n" : "overall fail\n";
    return out;
  }
};

/// Everything a check needs about one sample, computed once.
struct SampleContext {
  GadgetParams p;
  Frame f;
  CriticalData geo;
  PerSide<double> numeric;
  PerSide<double> original;
  Point2 D_c;
  Point2 B_prime;
  CanonicalSolution canon;
  std::mt19937_64* rng = nullptr;
};

struct NamedCheck {
  const char* name;
  CheckKind kind;
  std::function<double(SampleContext&)> eval;
};

namespace detail {

/// |a − b| reduced modulo π.
inline double mod_pi_distance(double a, double b) {
  const double d = std::remainder(a - b, kPi);
  return std::abs(d);
}

inline double critical_equivalence(SampleContext& c) {
  double w = 0.0;
  for (Side s : kSides) {
    const double a = c.original[s], b = c.numeric[s], g = c.geo.zeta[s];
    w = std::max({w, std::abs(a - b), std::abs(b - g), std::abs(a - g)});
  }
  return w;
}

inline double existence_margin(SampleContext& c) {
  return c.numeric.L + c.numeric.R - c.p.gamma / 2;
}

inline double rho_preservation(SampleContext& c) {
  double w = 0.0;
  for (Side s : kSides) {
    if (!(2 * c.geo.zeta[s] < c.p.gamma - kGeomTol)) continue;
    const ArcAngles a = arc_angles(c.f, c.geo.D[s]);
    const Orientation o = s == Side::L ? Orientation::ccw : Orientation::cw;
    const double rho_dp = signed_angle(c.f.C, c.f.A, c.geo.Dp[s], o, c.f.tol());
    w = std::max(w, std::abs(a.rho(s) - rho_dp));
  }
  return w;
}

inline double major_arc_positions(SampleContext& c) {
  double w = 0.0;
  for (Side s : kSides) {
    const double bp = major_phi(c.f, s, c.geo.Bp[s]);
    const double dp = major_phi(c.f, s, c.geo.Dp[s]);
    w = std::max({w, std::abs(bp - 2 * c.p.delta(s)), std::abs(dp - 2 * c.p.beta(s))});
    // Position of D′_σ relative to B′_σ′ must match the parameter tag.
    const double other_bp = major_phi(c.f, s, c.geo.Bp[other(s)]);
    const Trichotomy t = std::abs(dp - other_bp) <= 2 * kGeomTol ? Trichotomy::boundary
                         : dp < other_bp                      ? Trichotomy::interior
                                                              : Trichotomy::saturated;
    if (t != c.geo.tag[s]) return std::numeric_limits<double>::infinity();
  }
  return w;
}

inline double canonical_coincidence(SampleContext& c) {
  const double geo = phi_L_of(c.f, c.D_c);
  return std::max(std::abs(geo - c.canon.phi_L), std::abs(c.canon.residual));
}

inline double bcd_rho_agreement(SampleContext& c) {
  const BcdAngles b = bcd_angles(c.p);
  const ArcAngles a = arc_angles(c.f, c.D_c);
  return std::max({std::abs(b.rho_L - c.canon.rho_L), std::abs(b.rho_L - a.rho_L),
                   std::abs(b.rho_R - a.rho_R)});
}

inline double canonical_bracket(SampleContext& c) {
  const double dc = phi_L_of(c.f, c.D_c);
  return std::min(dc - c.geo.phi_L.R, c.geo.phi_L.L - dc);
}

inline double perpendicularity(SampleContext& c) {
  const NegativePoints n = negative_points(c.f);
  const Vec2 g = normalized(n.Gp.R - n.Gp.L);
  const Vec2 b = normalized(c.f.C - n.B_prime);
  const Vec2 e = normalized(n.E.R - n.E.L);
  const Vec2 cd = normalized(n.D_c - c.f.C);
  // E_LE_R is also the perpendicular bisector of CD_c.
  const double mid = line_distance(midpoint(c.f.C, n.D_c), Ray(n.E.L, e)) / c.p.ridge_length;
  return std::max({std::abs(dot(g, b)), std::abs(dot(e, cd)), mid});
}

inline double arc_identity(SampleContext& c) {
  const double phi = c.p.gamma * uniform01(*c.rng);
  const ArcAngles a = arc_angles(c.f, arc_point(c.f, phi));
  double w = 0.0;
  for (Side s : kSides) {
    const double psi = a.psi(s), rho = a.rho(s), r = c.p.r;
    const double rhs = std::atan2((r + 1) * std::sin(psi / 2), (r - 1) * std::cos(psi / 2));
    w = std::max(w, mod_pi_distance(psi / 2 + rho, rhs));
  }
  return w;
}

/// Returns 0 when the three conditions agree everywhere, 1 otherwise.
inline double constructibility_equivalence(SampleContext& c) {
  std::vector<double> phis{c.p.gamma * uniform01(*c.rng)};
  for (Side s : kSides) {
    for (double e : {1e-6, -1e-6}) {
      const double v = 2 * c.numeric[s] + e;
      if (v > 0 && v < c.p.gamma) phis.push_back(s == Side::L ? v : c.p.gamma - v);
    }
  }
  for (double phi : phis) {
    if (!(phi > 0.0 && phi < c.p.gamma)) continue;
    const auto flags = constructible(c.p, c.f, arc_point(c.f, phi));
    if (!flags.L.agree() || !flags.R.agree()) return 1.0;
  }
  return 0.0;
}

}  // namespace detail

inline const std::vector<NamedCheck>& named_checks() {
  static const std::vector<NamedCheck> all = {
      {"critical_equivalence", CheckKind::equality, detail::critical_equivalence},
      {"existence_inequality", CheckKind::inequality, detail::existence_margin},
      {"rho_preservation", CheckKind::equality, detail::rho_preservation},
      {"major_arc_positions", CheckKind::equality, detail::major_arc_positions},
      {"canonical_coincidence", CheckKind::equality, detail::canonical_coincidence},
      {"bcd_rho_agreement", CheckKind::equality, detail::bcd_rho_agreement},
      {"canonical_bracket", CheckKind::inequality, detail::canonical_bracket},
      {"perpendicularity", CheckKind::equality, detail::perpendicularity},
      {"arc_identity", CheckKind::equality, detail::arc_identity},
      {"constructibility_equivalence", CheckKind::equality,
       detail::constructibility_equivalence},
  };
  return all;
}

inline SampleContext make_context(const GadgetParams& p) {
  SampleContext c;
  c.p = p;
  c.f = build_frame(p);
  c.geo = critical_geometric(c.f);
  c.numeric = critical_numeric(p);
  c.original = critical_original(c.f);
  std::tie(c.D_c, c.B_prime) = canonical_geometric(c.f);
  c.canon = canonical_numeric(p);
  return c;
}

inline SweepReport run_sweep(const SweepConfig& cfg) {
  if (cfg.samples < 1) throw std::invalid_argument("run_sweep: samples must be >= 1");
  std::vector<const NamedCheck*> enabled;
  SweepReport report;
  for (const auto& nc : named_checks()) {
    if (!cfg.checks.empty() && !cfg.checks.count(nc.name)) continue;
    enabled.push_back(&nc);
    CheckResult r;
    r.name = nc.name;
    r.kind = nc.kind;
    r.worst = nc.kind == CheckKind::equality ? 0.0 : std::numeric_limits<double>::infinity();
    report.checks.push_back(r);
  }
  for (const auto& name : cfg.checks) {
    if (!report.find(name)) throw std::invalid_argument("run_sweep: unknown check " + name);
  }

  std::mt19937_64 rng(cfg.seed);
  const double fail_eq = std::numeric_limits<double>::infinity();
  for (long i = 0; i < cfg.samples; ++i) {
    const GadgetParams p = sample_params(rng);
    std::optional<SampleContext> ctx;
    try {
      ctx = make_context(p);
    } catch (const Error&) {
      ctx.reset();
    }
    for (std::size_t k = 0; k < enabled.size(); ++k) {
      CheckResult& r = report.checks[k];
      const bool eq = r.kind == CheckKind::equality;
      double v = eq ? fail_eq : -fail_eq;
      if (ctx) {
        // Each check draws its own points, so enabling or disabling checks
        // does not change what the others see.
        const auto index = static_cast<std::uint64_t>(enabled[k] - named_checks().data());
        std::mt19937_64 draw(cfg.seed ^ (0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(i) + 1)) ^
                             (index << 56));
        ctx->rng = &draw;
        try {
          v = enabled[k]->eval(*ctx);
        } catch (const Error&) {
        }
        ctx->rng = nullptr;
      }
      ++r.attempted;
      if (eq ? v <= cfg.tolerance : v > 0.0) ++r.passed;
      if (r.worst_sample < 0 || (eq ? v > r.worst : v < r.worst)) {
        r.worst = v;
        r.worst_params = p;
        r.worst_sample = i;
      }
    }
  }
  return report;
}

}  // namespace origon
