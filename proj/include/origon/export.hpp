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
 * @file export.hpp
 * @brief FOLD and SVG output of crease patterns.
 *
 * Numbers are rounded to 12 significant digits before serialization, and
 * values below 1e-12 in magnitude are written as 0. Vertices are sorted by
 * id and creases by label; ray creases end at a synthetic vertex at distance
 * boundary_margin from their origin.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "origon/crease_pattern.hpp"

namespace origon {

struct RenderOptions {
  std::string mountain_style = "stroke:#c0392b;stroke-width:1.5;stroke-dasharray:9,3,2,3";
  std::string valley_style = "stroke:#2471a3;stroke-width:1.5;stroke-dasharray:6,4";
  std::string border_style = "stroke:#000000;stroke-width:2";
  std::string flat_style = "stroke:#7f8c8d;stroke-width:1";
  std::optional<double> boundary_margin;  // default 1.5 × frame diameter
  bool label_points = true;
  double units_per_ridge = 100.0;
  /// Mirror back-side developments to the front (x → −x, M ↔ V).
  bool front_view = false;
};

/// 12 significant digits, tiny values and −0 written as 0.
inline double round12(double v) {
  if (std::abs(v) < 1e-12) return 0.0;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::strtod(buf, nullptr);
}

inline std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", round12(v));
  return buf;
}

namespace detail {

struct FlatPattern {
  std::vector<std::string> ids;
  std::vector<std::string> labels;
  std::vector<Point2> coords;
  std::vector<int> truncated;
  std::vector<std::pair<int, int>> edges;
  std::vector<const Edge*> source;
  std::vector<Assignment> assignment;
  ViewedFrom viewed_from = ViewedFrom::front;
};

/// Sorted, ray-truncated, optionally mirrored view of a pattern.
inline FlatPattern flatten(const CreasePattern& cp, const RenderOptions& opt) {
  cp.validate();
  const double margin = opt.boundary_margin.value_or(1.5 * cp.meta.diameter);
  if (!(margin > 0.0)) throw InvalidPattern("boundary margin must be positive");
  const bool mirror = opt.front_view && cp.meta.viewed_from == ViewedFrom::back;

  FlatPattern fp;
  fp.viewed_from = mirror ? ViewedFrom::front : cp.meta.viewed_from;
  std::vector<const Vertex*> vs;
  for (const auto& v : cp.vertices) vs.push_back(&v);
  std::sort(vs.begin(), vs.end(), [](auto* a, auto* b) { return a->id < b->id; });
  std::map<std::string, int> index;
  for (const auto* v : vs) {
    index[v->id] = static_cast<int>(fp.ids.size());
    fp.ids.push_back(v->id);
    fp.labels.push_back(v->label);
    fp.coords.push_back(mirror ? mirror_x(v->point) : v->point);
  }

  std::vector<const Edge*> es;
  for (const auto& e : cp.edges) es.push_back(&e);
  std::sort(es.begin(), es.end(), [](auto* a, auto* b) { return a->label < b->label; });
  for (const auto* e : es) {
    const int a = index.at(e->from);
    int b;
    if (const auto* d = std::get_if<Vec2>(&e->to)) {
      const Vertex* o = cp.find_vertex(e->from);
      const Point2 end = o->point + *d * margin;
      b = static_cast<int>(fp.ids.size());
      fp.ids.push_back(e->label + "^");
      fp.labels.push_back("");
      fp.coords.push_back(mirror ? mirror_x(end) : end);
      fp.truncated.push_back(b);
    } else {
      b = index.at(std::get<std::string>(e->to));
    }
    fp.edges.emplace_back(a, b);
    fp.source.push_back(e);
    fp.assignment.push_back(mirror ? swap_mv(e->assignment) : e->assignment);
  }
  return fp;
}

inline std::string letters(Assignment a) { return std::string(1, fold_letter(a)); }

inline nlohmann::ordered_json fold_frame(const CreasePattern& cp, const RenderOptions& opt) {
  using nlohmann::ordered_json;
  const FlatPattern fp = flatten(cp, opt);
  const bool mirror = opt.front_view && cp.meta.viewed_from == ViewedFrom::back;
  ordered_json j;
  j["frame_title"] = std::string(to_string(cp.meta.kind)) + " origon gadget";
  j["frame_classes"] = {"creasePattern"};
  j["frame_attributes"] = {"2D"};
  ordered_json coords = ordered_json::array();
  for (const auto& p : fp.coords) coords.push_back({round12(p.x), round12(p.y)});
  j["vertices_coords"] = coords;
  ordered_json ev = ordered_json::array(), ea = ordered_json::array();
  ordered_json roles = ordered_json::array();
  for (std::size_t i = 0; i < fp.edges.size(); ++i) {
    ev.push_back({fp.edges[i].first, fp.edges[i].second});
    ea.push_back(letters(fp.assignment[i]));
    roles.push_back(fp.source[i]->label);
  }
  j["edges_vertices"] = ev;
  j["edges_assignment"] = ea;
  j["origon:edge_roles"] = roles;
  j["origon:vertex_ids"] = fp.ids;
  j["origon:vertex_labels"] = fp.labels;
  j["origon:truncated_vertices"] = fp.truncated;
  if (cp.meta.kind == GadgetKind::hybrid) {
    ordered_json groups = ordered_json::array(), pos = ordered_json::array(),
                 neg = ordered_json::array();
    for (const Edge* e : fp.source) {
      groups.push_back(e->group);
      pos.push_back(e->for_positive ? letters(*e->for_positive) : "");
      neg.push_back(e->for_negative ? letters(mirror ? swap_mv(*e->for_negative) : *e->for_negative)
                                    : "");
    }
    j["origon:edge_groups"] = groups;
    j["origon:edges_assignment_positive"] = pos;
    j["origon:edges_assignment_negative"] = neg;
  }
  j["origon:kind"] = to_string(cp.meta.kind);
  j["origon:viewed_from"] = fp.viewed_from == ViewedFrom::back ? "back" : "front";
  j["origon:dividing"] = cp.meta.dividing;
  j["origon:phi_L"] = round12(cp.meta.phi_L);
  const GadgetParams& p = cp.meta.params;
  j["origon:params"] = {{"alpha", round12(p.alpha)},     {"beta_L", round12(p.beta_L)},
                        {"beta_R", round12(p.beta_R)},   {"delta_L", round12(p.delta_L)},
                        {"delta_R", round12(p.delta_R)}, {"ridge_length", round12(p.ridge_length)}};
  return j;
}

}  // namespace detail

/// One FOLD document; the first pattern is the key frame, the rest go to
/// file_frames.
inline std::string to_fold(const std::vector<const CreasePattern*>& patterns,
                           const RenderOptions& opt = {}) {
  using nlohmann::ordered_json;
  if (patterns.empty()) throw InvalidPattern("to_fold: no patterns");
  ordered_json doc;
  doc["file_spec"] = 1.1;
  doc["file_creator"] = "origon";
  doc["file_classes"] = {"singleModel"};
  const ordered_json key = detail::fold_frame(*patterns.front(), opt);
  for (const auto& [k, v] : key.items()) doc[k] = v;
  if (patterns.size() > 1) {
    ordered_json frames = ordered_json::array();
    for (std::size_t i = 1; i < patterns.size(); ++i) {
      ordered_json fr = detail::fold_frame(*patterns[i], opt);
      fr["frame_parent"] = 0;
      fr["frame_inherit"] = false;
      frames.push_back(fr);
    }
    doc["file_frames"] = frames;
  }
  return doc.dump(1) + "\n";
}

inline std::string to_fold(const CreasePattern& cp, const RenderOptions& opt = {}) {
  return to_fold(std::vector<const CreasePattern*>{&cp}, opt);
}

/// The parts of a FOLD frame this library writes.
struct FoldFrame {
  std::vector<Point2> vertices_coords;
  std::vector<std::pair<int, int>> edges_vertices;
  std::vector<char> edges_assignment;
  std::vector<std::string> edge_roles;
  std::vector<int> truncated_vertices;
  std::string kind;
  std::string viewed_from;
};

/// Key frame first, then file_frames in order.
inline std::vector<FoldFrame> parse_fold(const std::string& text) {
  const auto doc = nlohmann::json::parse(text);
  auto read = [](const nlohmann::json& j) {
    FoldFrame f;
    for (const auto& c : j.at("vertices_coords")) {
      f.vertices_coords.push_back({c.at(0).get<double>(), c.at(1).get<double>()});
    }
    for (const auto& e : j.at("edges_vertices")) {
      f.edges_vertices.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    }
    for (const auto& a : j.at("edges_assignment")) {
      const auto s = a.get<std::string>();
      if (s.size() != 1) throw InvalidPattern("parse_fold: bad assignment");
      f.edges_assignment.push_back(s[0]);
    }
    if (j.contains("origon:edge_roles")) {
      f.edge_roles = j.at("origon:edge_roles").get<std::vector<std::string>>();
    }
    if (j.contains("origon:truncated_vertices")) {
      f.truncated_vertices = j.at("origon:truncated_vertices").get<std::vector<int>>();
    }
    f.kind = j.value("origon:kind", "");
    f.viewed_from = j.value("origon:viewed_from", "");
    return f;
  };
  std::vector<FoldFrame> out{read(doc)};
  if (doc.contains("file_frames")) {
    for (const auto& fr : doc.at("file_frames")) out.push_back(read(fr));
  }
  return out;
}

/// SVG 1.1 drawing with one path per crease. The y axis is flipped so the
/// drawing matches the plane embedding; the view box is symmetric about x = 0.
inline std::string to_svg(const CreasePattern& cp, const RenderOptions& opt = {}) {
  if (!(opt.units_per_ridge > 0.0)) throw InvalidPattern("to_svg: scale must be positive");
  const detail::FlatPattern fp = detail::flatten(cp, opt);
  const double k = opt.units_per_ridge / cp.meta.params.ridge_length;
  double xmax = 0.0, ymin = 0.0, ymax = 0.0;
  for (const auto& p : fp.coords) {
    xmax = std::max(xmax, std::abs(p.x) * k);
    ymin = std::min(ymin, -p.y * k);
    ymax = std::max(ymax, -p.y * k);
  }
  const double pad = 0.1 * opt.units_per_ridge;
  auto num = [](double v) { return format_number(v); };

  std::ostringstream s;
  s << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\""
    << num(-xmax - pad) << ' ' << num(ymin - pad) << ' ' << num(2 * (xmax + pad)) << ' '
    << num(ymax - ymin + 2 * pad) << "\">\n";
  s << "<title>" << to_string(cp.meta.kind) << " origon gadget ("
    << (fp.viewed_from == ViewedFrom::back ? "back" : "front") << " view)</title>\n";
  s << "<g fill=\"none\" stroke-linecap=\"round\">\n";
  for (std::size_t i = 0; i < fp.edges.size(); ++i) {
    const Point2 a = fp.coords[fp.edges[i].first];
    const Point2 b = fp.coords[fp.edges[i].second];
    const Assignment as = fp.assignment[i];
    const char* cls = as == Assignment::mountain ? "mountain"
                      : as == Assignment::valley ? "valley"
                      : as == Assignment::border ? "border"
                                                 : "flat";
    const std::string& style = as == Assignment::mountain ? opt.mountain_style
                               : as == Assignment::valley ? opt.valley_style
                               : as == Assignment::border ? opt.border_style
                                                          : opt.flat_style;
    s << "<path class=\"" << cls << "\" data-role=\"" << fp.source[i]->label << "\" style=\""
      << style << "\" d=\"M " << num(a.x * k) << ' ' << num(-a.y * k) << " L " << num(b.x * k)
      << ' ' << num(-b.y * k) << "\"/>\n";
  }
  s << "</g>\n";
  if (opt.label_points) {
    s << "<g font-family=\"sans-serif\" font-size=\"" << num(0.08 * opt.units_per_ridge)
      << "\" fill=\"#000000\">\n";
    for (std::size_t i = 0; i < fp.coords.size(); ++i) {
      if (fp.labels[i].empty()) continue;
      s << "<text x=\"" << num(fp.coords[i].x * k) << "\" y=\"" << num(-fp.coords[i].y * k)
        << "\">" << fp.labels[i] << "</text>\n";
    }
    s << "</g>\n";
  }
  s << "</svg>\n";
  return s.str();
}

}  // namespace origon
