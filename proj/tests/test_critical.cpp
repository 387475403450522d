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


#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "frozen.hpp"
#include "oracles.hpp"
#include "origon/critical.hpp"
#include "origon/verify.hpp"
#include "support.hpp"

using namespace origon;

namespace {

void expect_zeta(const GadgetParams& p, double zl, double zr, double tol) {
  const Frame f = build_frame(p);
  const PerSide<double> n = critical_numeric(p);
  const CriticalData g = critical_geometric(f);
  const PerSide<double> o = critical_original(f);
  EXPECT_NEAR(n.L, zl, tol);
  EXPECT_NEAR(n.R, zr, tol);
  EXPECT_NEAR(g.zeta.L, zl, tol);
  EXPECT_NEAR(g.zeta.R, zr, tol);
  EXPECT_NEAR(o.L, zl, tol);
  EXPECT_NEAR(o.R, zr, tol);
}

}  // namespace

TEST(Critical, RightAngledCase) {
  const double z = std::atan(0.5);
  expect_zeta(support::case_s(), z, z, 1e-12);
  const CriticalData c = critical_geometric(build_frame(support::case_s()));
  EXPECT_EQ(c.tag.L, Trichotomy::interior);
  EXPECT_EQ(c.tag.R, Trichotomy::interior);
  EXPECT_NEAR(c.phi_L.L, 2 * z, 1e-12);
  EXPECT_NEAR(c.phi_L.R, kPi / 2 - 2 * z, 1e-12);
}

TEST(Critical, AsymmetricFrozen) {
  expect_zeta(support::deg(100, 80, 70, 10, 0), frozen::asym::zeta_L, frozen::asym::zeta_R,
              1e-10);
  const auto net = oracle::Net::degrees(100, 80, 70, 10, 0);
  EXPECT_NEAR(static_cast<double>(net.zeta(true)), frozen::asym::zeta_L, 1e-12);
  EXPECT_NEAR(static_cast<double>(net.zeta(false)), frozen::asym::zeta_R, 1e-12);
}

TEST(Critical, PleatedFrozen) {
  const GadgetParams p = support::deg(95, 100, 85, 30, 25);
  EXPECT_NEAR(p.gamma_L, frozen::pleated::gamma_L, 1e-12);
  EXPECT_NEAR(p.r, frozen::pleated::r, 1e-12);
  expect_zeta(p, frozen::pleated::zeta_L, frozen::pleated::zeta_R, 1e-10);
}

TEST(Critical, SaturatedSide) {
  const GadgetParams p = support::deg(90, 120, 70, 0, 60);
  EXPECT_NEAR(p.gamma_L, frozen::saturated::gamma_L, 1e-12);
  expect_zeta(p, frozen::saturated::zeta_L, frozen::saturated::zeta_R, 1e-10);
  EXPECT_NEAR(frozen::saturated::zeta_L, 40 * kPi / 180, 1e-15);
  const Frame f = build_frame(p);
  const CriticalData c = critical_geometric(f);
  EXPECT_EQ(c.tag.L, Trichotomy::saturated);
  EXPECT_EQ(c.tag.R, Trichotomy::interior);
  EXPECT_NEAR(c.D.L.x, f.B.R.x, 1e-12);
  EXPECT_NEAR(c.D.L.y, f.B.R.y, 1e-12);
  EXPECT_GT(c.margin.L, 0);
}

TEST(Critical, BoundarySide) {
  const GadgetParams p = support::deg(90, 120, 70, 0, 20);
  expect_zeta(p, frozen::boundary::zeta_L, frozen::boundary::zeta_R, 1e-10);
  const CriticalData c = critical_geometric(build_frame(p));
  EXPECT_EQ(c.tag.L, Trichotomy::boundary);
  EXPECT_NEAR(c.phi_L.L, p.gamma, 1e-15);
  EXPECT_NEAR(c.margin.L, 0, 1e-14);
}

TEST(Critical, Classify) {
  EXPECT_EQ(classify(0), Trichotomy::boundary);
  EXPECT_EQ(classify(1e-10), Trichotomy::boundary);
  EXPECT_EQ(classify(-1e-6), Trichotomy::interior);
  EXPECT_EQ(classify(1e-6), Trichotomy::saturated);
}

TEST(Critical, ThreeRoutesAgreeWithOracle) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 3000; ++i) {
    const GadgetParams p = sample_params(rng);
    const oracle::Net net(p.alpha, p.beta_L, p.beta_R, p.delta_L, p.delta_R);
    const Frame f = build_frame(p);
    const PerSide<double> n = critical_numeric(p);
    const PerSide<double> o = critical_original(f);
    const CriticalData g = critical_geometric(f);
    for (Side s : kSides) {
      const double z = static_cast<double>(net.zeta(s == Side::L));
      EXPECT_NEAR(n[s], z, 1e-9);
      EXPECT_NEAR(o[s], z, 1e-9);
      EXPECT_NEAR(g.zeta[s], z, 1e-9);
      EXPECT_GT(n[s], 0);
      EXPECT_LE(n[s], p.gamma / 2 + 1e-12);
    }
  }
}

TEST(Critical, CriticalAnglesCoverTheArc) {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 3000; ++i) {
    const GadgetParams p = sample_params(rng);
    const PerSide<double> z = critical_numeric(p);
    EXPECT_GT(z.L + z.R, p.gamma / 2);
  }
}

TEST(ArcAngles, Identities) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 3000; ++i) {
    const GadgetParams p = sample_params(rng);
    const Frame f = build_frame(p);
    const double phi = support::uniform(rng, 0, p.gamma);
    const ArcAngles a = arc_angles(f, arc_point(f, phi));
    EXPECT_NEAR(a.phi_L, phi, 1e-12);
    EXPECT_NEAR(a.phi_L + a.phi_R, p.gamma, 1e-12);
    EXPECT_NEAR(a.psi_L + a.psi_R, 0, 1e-12);
    EXPECT_NEAR(a.phi_L + a.psi_L, p.gamma_L, 1e-12);
    EXPECT_NEAR(a.rho_L, rho_of_psi(a.psi_L, p.r), 1e-9);
    EXPECT_NEAR(a.rho_L, static_cast<double>(oracle::Net(p.alpha, p.beta_L, p.beta_R, p.delta_L,
                                                         p.delta_R)
                                                 .rho_of(a.psi_L)),
                1e-9);
  }
}

TEST(ArcAngles, RejectsPointsOffTheMinorArc) {
  const Frame f = build_frame(support::case_s());
  EXPECT_THROW(arc_angles(f, Point2{0, -0.5}), NotOnArc);
  EXPECT_THROW(arc_angles(f, arc_point(f, kPi)), NotOnArc);
  EXPECT_NO_THROW(arc_angles(f, f.B.L));
  EXPECT_NO_THROW(arc_angles(f, f.B.R));
}

TEST(Constructible, RightAngledCase) {
  const GadgetParams p = support::case_s();
  const Frame f = build_frame(p);
  const auto mid = constructible(p, f, arc_point(f, kPi / 4));
  EXPECT_TRUE(mid.L.all());
  EXPECT_TRUE(mid.R.all());
  const auto far = constructible(p, f, arc_point(f, 1.2));
  EXPECT_FALSE(far.L.by_angle);
  EXPECT_FALSE(far.L.by_phi);
  EXPECT_FALSE(far.L.by_psi);
  EXPECT_TRUE(far.R.all());
  const CriticalData c = critical_geometric(f);
  const auto edge = constructible(p, f, c.D.L);
  EXPECT_TRUE(edge.L.all());
}

TEST(Constructible, ConditionsAgreeOnRandomPoints) {
  std::mt19937_64 rng(24);
  for (int i = 0; i < 3000; ++i) {
    const GadgetParams p = sample_params(rng);
    const Frame f = build_frame(p);
    const PerSide<double> z = critical_numeric(p);
    const double phi = support::uniform(rng, 0, p.gamma);
    if (std::abs(phi - 2 * z.L) < 1e-6 || std::abs(p.gamma - phi - 2 * z.R) < 1e-6) continue;
    const auto c = constructible(p, f, arc_point(f, phi));
    EXPECT_TRUE(c.L.agree());
    EXPECT_TRUE(c.R.agree());
  }
}
