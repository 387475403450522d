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
 * @file canonical.hpp
 * @brief Canonical pairs: the positive and negative gadget on one frame at
 * D = D_c, and the hybrid crease set from which either can be folded.
 *
 * Hybrid creases carry Assignment::flat; the fold each one takes in the
 * positive and in the negative gadget is in for_positive / for_negative,
 * each as that gadget's own pattern assigns it (the negative one as seen
 * from the back).
 */

#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>

#include "origon/crease_pattern.hpp"
#include "origon/critical.hpp"
#include "origon/frame.hpp"
#include "origon/negative.hpp"
#include "origon/positive.hpp"

namespace origon {

struct Bracket {
  double phi_L_DR = 0.0;
  double phi_L_Dc = 0.0;
  double phi_L_DL = 0.0;
};

struct CanonicalPair {
  CreasePattern positive;
  CreasePattern negative;
  CreasePattern hybrid;
  Bracket bracket;
};

namespace detail {

/// Positive labels use "D" for the dividing point; the hybrid names it D_c.
inline std::string dividing_as_dc(const std::string& label) {
  std::string out;
  for (std::size_t i = 0; i < label.size(); ++i) {
    out += label[i];
    if (label[i] == 'D' && (i + 1 == label.size() || label[i + 1] != '_')) out += "_c";
  }
  return out;
}

inline std::set<std::string> common_labels(const GadgetParams& p) {
  std::set<std::string> c{"E_LE_R"};
  for (Side s : kSides) {
    const std::string t = to_string(s);
    for (const char* r : {"j_", "k_", "l_", "m_"}) c.insert(r + t);
    c.insert("AB_" + t);
    c.insert("AE_" + t);
    if (p.delta(s) > 0.0) c.insert("B_" + t + "E_" + t);
  }
  return c;
}

inline std::pair<std::string, std::string> endpoints(const Edge& e) {
  const auto& to = std::get<std::string>(e.to);
  return e.from < to ? std::make_pair(e.from, to) : std::make_pair(to, e.from);
}

inline CreasePattern hybrid_of(const CreasePattern& pos, const CreasePattern& neg,
                               const Frame& f) {
  CreasePattern h;
  h.meta = pos.meta;
  h.meta.kind = GadgetKind::hybrid;
  const double tol = f.tol();

  // Vertices: positive ones (D renamed D_c), then negative ones not already
  // present by id; a negative vertex coinciding with a positive one is unified.
  std::map<std::string, std::string> neg_id;
  for (const auto& v : pos.vertices) {
    const std::string id = v.id == "D" ? "D_c" : v.id;
    h.add_vertex(id, v.point, v.label == "D" ? "D_c" : v.label);
  }
  for (const auto& v : neg.vertices) {
    if (h.find_vertex(v.id)) {
      neg_id[v.id] = v.id;
      continue;
    }
    Vertex* same = nullptr;
    for (auto& w : h.vertices) {
      if (distance(w.point, v.point) <= tol) {
        same = &w;
        break;
      }
    }
    if (same) {
      same->label += "=" + v.label;
      neg_id[v.id] = same->id;
    } else {
      h.add_vertex(v.id, v.point, v.label);
      neg_id[v.id] = v.id;
    }
  }
  // Labels such as "A=B'" on the shared A vertex come from the negative side.
  for (const auto& v : neg.vertices) {
    Vertex* w = nullptr;
    for (auto& x : h.vertices) {
      if (x.id == neg_id[v.id]) w = &x;
    }
    if (w && v.label != v.id && w->label.find(v.label) == std::string::npos) w->label = v.label;
  }

  const std::set<std::string> common = common_labels(f.params);
  for (const auto& e : pos.edges) {
    Edge x = e;
    x.label = dividing_as_dc(e.label);
    x.from = e.from == "D" ? "D_c" : e.from;
    if (auto* to = std::get_if<std::string>(&x.to); to && *to == "D") *to = "D_c";
    x.assignment = Assignment::flat;
    x.for_positive = e.assignment;
    if (common.count(x.label)) {
      const Edge* n = neg.find_edge(x.label);
      if (!n) throw InternalInconsistency("hybrid: common crease missing from negative: " + x.label);
      x.group = "common";
      x.for_negative = n->assignment;
    } else {
      x.group = "positive";
    }
    h.edges.push_back(std::move(x));
  }
  for (const auto& e : neg.edges) {
    if (common.count(e.label)) continue;
    Edge x = e;
    x.from = neg_id.at(e.from);
    if (auto* to = std::get_if<std::string>(&x.to)) *to = neg_id.at(*to);
    x.assignment = Assignment::flat;
    x.group = "negative";
    x.for_negative = e.assignment;

    // Same endpoints as a positive-only crease with the same fold: one crease.
    Edge* twin = nullptr;
    if (!x.is_ray()) {
      for (auto& y : h.edges) {
        if (y.group == "positive" && !y.is_ray() && endpoints(y) == endpoints(x) &&
            y.for_positive == x.for_negative) {
          twin = &y;
          break;
        }
      }
    }
    if (twin) {
      twin->label += "=" + x.label;
      twin->group = "positive+negative";
      twin->for_negative = x.for_negative;
    } else {
      h.edges.push_back(std::move(x));
    }
  }
  h.validate();
  return h;
}

}  // namespace detail

inline CanonicalPair build_pair(const GadgetParams& p) {
  const Frame f = build_frame(p);
  const CriticalData crit = critical_geometric(f);
  CanonicalPair out;
  out.negative = negative_pattern(f);
  out.positive = positive_pattern(f, Canonical{});
  out.bracket = {crit.phi_L.R, out.negative.meta.phi_L, crit.phi_L.L};
  const Bracket& b = out.bracket;
  if (b.phi_L_DR - b.phi_L_Dc > kGeomTol || b.phi_L_Dc - b.phi_L_DL > kGeomTol) {
    throw BracketViolation("build_pair: D_c is not between D_R and D_L");
  }
  out.hybrid = detail::hybrid_of(out.positive, out.negative, f);
  return out;
}

}  // namespace origon
