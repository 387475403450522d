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
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "origon/euclid.hpp"
#include "origon/params.hpp"

namespace origon {

enum class Assignment { mountain, valley, border, flat };

constexpr char fold_letter(Assignment a) {
  switch (a) {
    case Assignment::mountain: return 'M';
    case Assignment::valley: return 'V';
    case Assignment::border: return 'B';
    case Assignment::flat: return 'F';
  }
  return 'F';
}

constexpr Assignment swap_mv(Assignment a) {
  if (a == Assignment::mountain) return Assignment::valley;
  if (a == Assignment::valley) return Assignment::mountain;
  return a;
}

enum class GadgetKind { positive, negative, hybrid };

constexpr const char* to_string(GadgetKind k) {
  switch (k) {
    case GadgetKind::positive: return "positive";
    case GadgetKind::negative: return "negative";
    case GadgetKind::hybrid: return "hybrid";
  }
  return "?";
}

enum class ViewedFrom { front, back };

struct Vertex {
  std::string id;     // stable key, e.g. "E_L"
  Point2 point;
  std::string label;  // display name; merged points read "G_L=G'_L"
};

/// A segment to another vertex, or a semi-infinite ray from `from`.
struct Edge {
  std::string label;  // crease name built from its endpoints, e.g. "B_LG_L"
  std::string from;
  std::variant<std::string, Vec2> to;
  Assignment assignment = Assignment::flat;
  // Hybrid patterns only: which gadgets use the crease ("common", "positive",
  // "negative", "positive+negative") and its fold in each of them.
  std::string group;
  std::optional<Assignment> for_positive;
  std::optional<Assignment> for_negative;

  bool is_ray() const { return std::holds_alternative<Vec2>(to); }
};

struct Metadata {
  GadgetParams params;
  GadgetKind kind = GadgetKind::positive;
  std::string dividing;  // "phi_L=<rad>", "critical_L", "critical_R", "canonical"
  double phi_L = 0.0;    // φ_L of the dividing point
  ViewedFrom viewed_from = ViewedFrom::front;
  double diameter = 1.0;  // of the underlying frame; sets ray truncation
};

struct CreasePattern {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  Metadata meta;

  void add_vertex(const std::string& id, const Point2& p, std::string label = {}) {
    vertices.push_back({id, p, label.empty() ? id : std::move(label)});
  }
  void add_segment(const std::string& label, const std::string& from, const std::string& to,
                   Assignment a) {
    edges.push_back({label, from, to, a, {}, {}, {}});
  }
  void add_ray(const std::string& label, const std::string& from, const Vec2& dir,
               Assignment a) {
    edges.push_back({label, from, normalized(dir), a, {}, {}, {}});
  }

  const Vertex* find_vertex(const std::string& id) const {
    for (const auto& v : vertices) {
      if (v.id == id) return &v;
    }
    return nullptr;
  }
  const Edge* find_edge(const std::string& label) const {
    for (const auto& e : edges) {
      if (e.label == label) return &e;
    }
    return nullptr;
  }

  std::vector<std::string> labels(Assignment a) const {
    std::vector<std::string> out;
    for (const auto& e : edges) {
      if (e.assignment == a) out.push_back(e.label);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Throws InvalidPattern on the first broken invariant.
  void validate() const {
    if (edges.empty()) throw InvalidPattern("pattern has no creases");
    const double tol = kGeomTol * meta.params.ridge_length;
    std::set<std::string> ids;
    for (const auto& v : vertices) {
      if (!ids.insert(v.id).second) throw InvalidPattern("duplicate vertex id " + v.id);
      if (!is_finite(v.point)) throw InvalidPattern("non-finite vertex " + v.id);
    }
    std::set<std::string> labels_seen;
    for (const auto& e : edges) {
      if (!labels_seen.insert(e.label).second) throw InvalidPattern("duplicate crease " + e.label);
      const Vertex* a = find_vertex(e.from);
      if (!a) throw InvalidPattern("crease " + e.label + " starts at unknown vertex");
      if (const auto* id = std::get_if<std::string>(&e.to)) {
        const Vertex* b = find_vertex(*id);
        if (!b) throw InvalidPattern("crease " + e.label + " ends at unknown vertex");
        if (distance(a->point, b->point) <= tol) {
          throw InvalidPattern("crease " + e.label + " has zero length");
        }
      } else {
        const Vec2 d = std::get<Vec2>(e.to);
        if (std::abs(norm(d) - 1.0) > 1e-9) throw InvalidPattern("ray " + e.label + " not unit");
      }
    }
  }
};

}  // namespace origon
