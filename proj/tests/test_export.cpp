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
#include <fstream>
#include <regex>
#include <sstream>
#include <string>

#include <json.hpp>

#include "origon/canonical.hpp"
#include "origon/export.hpp"
#include "support.hpp"

using namespace origon;

namespace {

int count(const std::string& text, const std::string& needle) {
  int n = 0;
  for (auto i = text.find(needle); i != std::string::npos; i = text.find(needle, i + 1)) ++n;
  return n;
}

/// Structural equality with numbers compared to `tol`.
bool same_json(const nlohmann::json& a, const nlohmann::json& b, double tol, std::string path,
               std::string& where) {
  if (a.is_number() && b.is_number()) {
    if (std::abs(a.get<double>() - b.get<double>()) <= tol) return true;
    where = path;
    return false;
  }
  if (a.type() != b.type() || a.size() != b.size()) {
    where = path;
    return false;
  }
  if (a.is_object()) {
    for (auto it = a.begin(); it != a.end(); ++it) {
      if (!b.contains(it.key()) || !same_json(*it, b.at(it.key()), tol, path + "/" + it.key(), where)) {
        if (where.empty()) where = path + "/" + it.key();
        return false;
      }
    }
    return true;
  }
  if (a.is_array()) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!same_json(a[i], b[i], tol, path + "/" + std::to_string(i), where)) return false;
    }
    return true;
  }
  if (a != b) where = path;
  return a == b;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

}  // namespace

TEST(Round12, SnapsAndRounds) {
  EXPECT_EQ(round12(1e-13), 0.0);
  EXPECT_EQ(round12(-3e-13), 0.0);
  EXPECT_EQ(round12(0.1 + 0.2), 0.3);
  EXPECT_EQ(format_number(-0.70710678118654752), "-0.707106781187");
  EXPECT_EQ(format_number(2.0), "2");
}

TEST(Fold, RoundTripPreservesGeometry) {
  const GadgetParams p = support::deg(100, 80, 70, 10, 0);
  const Frame f = build_frame(p);
  const CreasePattern cp = positive_pattern(f, Canonical{});
  const auto frames = parse_fold(to_fold(cp));
  ASSERT_EQ(frames.size(), 1u);
  const FoldFrame& fr = frames[0];
  EXPECT_EQ(fr.kind, "positive");
  EXPECT_EQ(fr.viewed_from, "front");
  ASSERT_EQ(fr.edges_vertices.size(), cp.edges.size());
  ASSERT_EQ(fr.edge_roles.size(), cp.edges.size());
  int rays = 0;
  for (std::size_t i = 0; i < fr.edge_roles.size(); ++i) {
    const Edge* e = cp.find_edge(fr.edge_roles[i]);
    ASSERT_TRUE(e) << fr.edge_roles[i];
    EXPECT_EQ(fr.edges_assignment[i], fold_letter(e->assignment));
    const Point2 a = fr.vertices_coords[fr.edges_vertices[i].first];
    const Point2 from = cp.find_vertex(e->from)->point;
    EXPECT_LE(distance(a, from), 1e-11);
    const Point2 b = fr.vertices_coords[fr.edges_vertices[i].second];
    if (e->is_ray()) {
      ++rays;
      EXPECT_NEAR(distance(a, b), 1.5 * f.diameter(), 1e-10);
      const Vec2 d = std::get<Vec2>(e->to);
      EXPECT_LE(std::abs(cross(d, b - a)), 1e-10);
      EXPECT_GT(dot(d, b - a), 0);
    } else {
      EXPECT_LE(distance(b, cp.find_vertex(std::get<std::string>(e->to))->point), 1e-11);
    }
  }
  EXPECT_EQ(rays, 8);
  EXPECT_EQ(fr.truncated_vertices.size(), 8u);
  EXPECT_EQ(fr.vertices_coords.size(), cp.vertices.size() + 8);
}

TEST(Fold, AssignmentCounts) {
  const CreasePattern cp = negative_pattern(build_frame(support::deg(100, 80, 70, 10, 0)));
  const FoldFrame fr = parse_fold(to_fold(cp)).front();
  EXPECT_EQ(std::count(fr.edges_assignment.begin(), fr.edges_assignment.end(), 'M'),
            static_cast<long>(cp.labels(Assignment::mountain).size()));
  EXPECT_EQ(std::count(fr.edges_assignment.begin(), fr.edges_assignment.end(), 'V'),
            static_cast<long>(cp.labels(Assignment::valley).size()));
  EXPECT_EQ(fr.viewed_from, "back");
}

TEST(Fold, PairDocument) {
  const CanonicalPair pr = build_pair(support::case_s());
  const std::string text = to_fold({&pr.positive, &pr.negative, &pr.hybrid});
  const auto frames = parse_fold(text);
  ASSERT_EQ(frames.size(), 3u);
  EXPECT_EQ(frames[0].kind, "positive");
  EXPECT_EQ(frames[1].kind, "negative");
  EXPECT_EQ(frames[2].kind, "hybrid");
  for (char c : frames[2].edges_assignment) EXPECT_EQ(c, 'F');
  const auto doc = nlohmann::json::parse(text);
  EXPECT_EQ(doc.at("file_spec"), 1.1);
  EXPECT_EQ(doc.at("file_creator"), "origon");
  const auto& hyb = doc.at("file_frames").at(1);
  EXPECT_EQ(hyb.at("frame_parent"), 0);
  EXPECT_EQ(hyb.at("frame_inherit"), false);
  EXPECT_EQ(hyb.at("origon:edge_groups").size(), pr.hybrid.edges.size());
  EXPECT_EQ(hyb.at("origon:edges_assignment_positive").size(), pr.hybrid.edges.size());
  EXPECT_EQ(doc.at("origon:params").at("alpha"), round12(kPi / 2));
}

TEST(Fold, Deterministic) {
  const CanonicalPair a = build_pair(support::deg(95, 100, 85, 30, 25));
  const CanonicalPair b = build_pair(support::deg(95, 100, 85, 30, 25));
  EXPECT_EQ(to_fold({&a.positive, &a.negative, &a.hybrid}),
            to_fold({&b.positive, &b.negative, &b.hybrid}));
  EXPECT_EQ(to_svg(a.hybrid), to_svg(b.hybrid));
}

TEST(Fold, FrontViewMirrorsTheNegative) {
  const CreasePattern cp = negative_pattern(build_frame(support::deg(100, 80, 70, 10, 0)));
  RenderOptions opt;
  opt.front_view = true;
  const FoldFrame back = parse_fold(to_fold(cp)).front();
  const FoldFrame front = parse_fold(to_fold(cp, opt)).front();
  EXPECT_EQ(front.viewed_from, "front");
  ASSERT_EQ(back.vertices_coords.size(), front.vertices_coords.size());
  for (std::size_t i = 0; i < back.vertices_coords.size(); ++i) {
    EXPECT_EQ(front.vertices_coords[i].x, -back.vertices_coords[i].x);
    EXPECT_EQ(front.vertices_coords[i].y, back.vertices_coords[i].y);
  }
  for (std::size_t i = 0; i < back.edges_assignment.size(); ++i) {
    const char b = back.edges_assignment[i];
    EXPECT_EQ(front.edges_assignment[i], b == 'M' ? 'V' : b == 'V' ? 'M' : b);
  }
}

TEST(Fold, BoundaryMargin) {
  const CreasePattern cp = positive_pattern(build_frame(support::case_s()), Canonical{});
  RenderOptions opt;
  opt.boundary_margin = 0.25;
  const FoldFrame fr = parse_fold(to_fold(cp, opt)).front();
  for (std::size_t i = 0; i < fr.edge_roles.size(); ++i) {
    if (!cp.find_edge(fr.edge_roles[i])->is_ray()) continue;
    const auto [a, b] = fr.edges_vertices[i];
    EXPECT_NEAR(distance(fr.vertices_coords[a], fr.vertices_coords[b]), 0.25, 1e-11);
  }
  opt.boundary_margin = 0.0;
  EXPECT_THROW(to_fold(cp, opt), InvalidPattern);
}

TEST(Fold, InvalidPatterns) {
  CreasePattern empty;
  EXPECT_THROW(to_fold(empty), InvalidPattern);
  EXPECT_THROW(to_svg(empty), InvalidPattern);
  EXPECT_THROW(to_fold(std::vector<const CreasePattern*>{}), InvalidPattern);
  CreasePattern dangling;
  dangling.add_vertex("A", {0, 0});
  dangling.add_segment("AB", "A", "B", Assignment::mountain);
  EXPECT_THROW(dangling.validate(), InvalidPattern);
  CreasePattern dup;
  dup.add_vertex("A", {0, 0});
  dup.add_vertex("B", {1, 0});
  dup.add_segment("AB", "A", "B", Assignment::mountain);
  dup.add_segment("AB", "B", "A", Assignment::valley);
  EXPECT_THROW(dup.validate(), InvalidPattern);
  CreasePattern zero;
  zero.add_vertex("A", {0, 0});
  zero.add_vertex("B", {0, 0});
  zero.add_segment("AB", "A", "B", Assignment::mountain);
  EXPECT_THROW(zero.validate(), InvalidPattern);
}

TEST(Fold, MatchesGoldenDocument) {
  const std::string golden = read_file(ORIGON_GOLDEN_DIR "/pair_100_80_70_10_0.fold");
  ASSERT_FALSE(golden.empty());
  const CanonicalPair pr = build_pair(support::deg(100, 80, 70, 10, 0));
  const std::string text = to_fold({&pr.positive, &pr.negative, &pr.hybrid});
  std::string where;
  EXPECT_TRUE(same_json(nlohmann::json::parse(golden), nlohmann::json::parse(text), 1e-10, "",
                        where))
      << "first difference at " << where;
}

TEST(Svg, OnePathPerCrease) {
  const CreasePattern cp = positive_pattern(build_frame(support::deg(95, 100, 85, 30, 25)),
                                            Canonical{});
  const std::string svg = to_svg(cp);
  EXPECT_EQ(count(svg, "<path "), static_cast<int>(cp.edges.size()));
  EXPECT_EQ(count(svg, "class=\"mountain\""),
            static_cast<int>(cp.labels(Assignment::mountain).size()));
  EXPECT_EQ(count(svg, "class=\"valley\""), static_cast<int>(cp.labels(Assignment::valley).size()));
  for (const auto& e : cp.edges) {
    EXPECT_EQ(count(svg, "data-role=\"" + e.label + "\""), 1) << e.label;
  }
  EXPECT_EQ(count(svg, "<text "), static_cast<int>(cp.vertices.size()));
}

TEST(Svg, ViewBoxIsSymmetric) {
  const CreasePattern cp = negative_pattern(build_frame(support::deg(100, 80, 70, 10, 0)));
  const std::string svg = to_svg(cp);
  std::smatch m;
  ASSERT_TRUE(std::regex_search(svg, m, std::regex("viewBox=\"([-0-9.e]+) ([-0-9.e]+) ([-0-9.e]+) ([-0-9.e]+)\"")));
  EXPECT_NEAR(std::stod(m[1]), -std::stod(m[3]) / 2, 1e-9);
  EXPECT_GT(std::stod(m[4]), 0);
}

TEST(Svg, Options) {
  const CanonicalPair pr = build_pair(support::case_s());
  RenderOptions opt;
  opt.label_points = false;
  EXPECT_EQ(count(to_svg(pr.hybrid, opt), "<text "), 0);
  EXPECT_EQ(count(to_svg(pr.hybrid), "class=\"flat\""), static_cast<int>(pr.hybrid.edges.size()));
  opt.front_view = true;
  const std::string front = to_svg(pr.negative, opt);
  EXPECT_NE(front.find("front view"), std::string::npos);
  EXPECT_EQ(count(front, "class=\"valley\""),
            static_cast<int>(pr.negative.labels(Assignment::mountain).size()));
  opt.units_per_ridge = 0;
  EXPECT_THROW(to_svg(pr.negative, opt), InvalidPattern);
}
