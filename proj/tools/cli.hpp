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

// Command-line front end. Angles are degrees here and radians everywhere else.
//
// Exit status: 0 success, 1 internal inconsistency or failed sweep,
// 2 parameter condition violated, 3 not constructible, 64 usage error.

#pragma once

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "origon/origon.hpp"

namespace origon::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitCondition = 2;
inline constexpr int kExitNotConstructible = 3;
inline constexpr int kExitUsage = 64;

inline double deg(double rad) { return rad * 180.0 / kPi; }
inline double rad(double deg) { return deg * kPi / 180.0; }

inline std::string fixed10(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10f", std::abs(v) < 5e-11 ? 0.0 : v);
  return buf;
}

struct AngleFlags {
  double alpha = 0, beta_l = 0, beta_r = 0, delta_l = 0, delta_r = 0;

  void attach(CLI::App* app) {
    app->add_option("--alpha", alpha, "alpha in degrees")->required();
    app->add_option("--beta-l", beta_l, "beta_L in degrees")->required();
    app->add_option("--beta-r", beta_r, "beta_R in degrees")->required();
    app->add_option("--delta-l", delta_l, "delta_L in degrees")->default_val(0.0);
    app->add_option("--delta-r", delta_r, "delta_R in degrees")->default_val(0.0);
  }
  GadgetParams params() const {
    for (double v : {alpha, beta_l, beta_r, delta_l, delta_r}) {
      if (!std::isfinite(v)) throw InvalidParams("angles must be finite");
    }
    return validate(RawParams::from_degrees(alpha, beta_l, beta_r, delta_l, delta_r));
  }
};

inline DividingChoice parse_dividing(const std::string& s) {
  if (s == "canonical") return Canonical{};
  if (s == "critical-l") return CriticalL{};
  if (s == "critical-r") return CriticalR{};
  if (s.rfind("phi-l=", 0) == 0) {
    std::size_t used = 0;
    const std::string v = s.substr(6);
    double d = 0;
    try {
      d = std::stod(v, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == v.size() && used > 0 && std::isfinite(d)) return ExplicitPhiL{rad(d)};
  }
  throw CLI::ValidationError("--dividing", "expected phi-l=<deg>, critical-l, critical-r or canonical");
}

/// Writes to --out when given, else to `out`.
inline void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open " + path + " for writing");
  f << text;
}

inline std::string render(const CreasePattern& cp, const std::string& format) {
  return format == "svg" ? to_svg(cp) : to_fold(cp);
}

inline std::string pair_report(const CanonicalPair& pr) {
  std::string s;
  s += "phi_L(D_R) " + fixed10(deg(pr.bracket.phi_L_DR)) + "\n";
  s += "phi_L(D_c) " + fixed10(deg(pr.bracket.phi_L_Dc)) + "\n";
  s += "phi_L(D_L) " + fixed10(deg(pr.bracket.phi_L_DL)) + "\n";
  for (const auto* cp : {&pr.positive, &pr.negative, &pr.hybrid}) {
    s += std::string(to_string(cp->meta.kind)) + " creases " + std::to_string(cp->edges.size()) +
         "\n";
  }
  for (const auto& e : pr.hybrid.edges) s += "  " + e.group + " " + e.label + "\n";
  return s;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Crease patterns for positive and negative origon gadgets", "origon"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  AngleFlags angles;
  std::string kind = "positive", dividing = "canonical", format = "fold", out_path;
  long samples = 10000;
  std::uint64_t seed = 42;
  double tol = kGeomTol;

  auto* validate_cmd = app.add_subcommand("validate", "check the parameter conditions");
  auto* critical_cmd = app.add_subcommand("critical", "critical angles and dividing points");
  auto* construct_cmd = app.add_subcommand("construct", "write one gadget's crease pattern");
  auto* pair_cmd = app.add_subcommand("pair", "write the canonical pair");
  auto* verify_cmd = app.add_subcommand("verify", "randomized identity sweep");
  auto* demo_cmd = app.add_subcommand("export-demo", "write the symmetric demo documents");

  for (auto* c : {validate_cmd, critical_cmd, construct_cmd, pair_cmd}) angles.attach(c);
  construct_cmd->add_option("--kind", kind)->check(CLI::IsMember({"positive", "negative", "pair"}));
  construct_cmd->add_option("--dividing", dividing);
  construct_cmd->add_option("--format", format)->check(CLI::IsMember({"fold", "svg"}));
  construct_cmd->add_option("--out", out_path);
  pair_cmd->add_option("--format", format)->check(CLI::IsMember({"fold", "svg", "report"}));
  pair_cmd->add_option("--out", out_path);
  verify_cmd->add_option("--samples", samples)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", seed);
  verify_cmd->add_option("--tol", tol)->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--format", format)->check(CLI::IsMember({"report"}));
  demo_cmd->add_option("--format", format)->check(CLI::IsMember({"fold", "svg"}));
  demo_cmd->add_option("--out", out_path, "output directory");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (validate_cmd->parsed()) {
      const GadgetParams p = angles.params();
      out << "valid\n";
      out << "gamma " << fixed10(deg(p.gamma)) << "\n";
      out << "gamma_L " << fixed10(deg(p.gamma_L)) << "\n";
      out << "gamma_R " << fixed10(deg(p.gamma_R)) << "\n";
      out << "r " << fixed10(p.r) << "\n";
    } else if (critical_cmd->parsed()) {
      const Frame f = build_frame(angles.params());
      const CriticalData c = critical_geometric(f);
      const PerSide<double> z = critical_numeric(f.params);
      const double dc = phi_L_of(f, canonical_geometric(f).first);
      const Interval in = admissible_interval(f.params, c);
      out << "zeta_L " << fixed10(deg(z.L)) << "\n";
      out << "zeta_R " << fixed10(deg(z.R)) << "\n";
      out << "phi_L(D_L) " << fixed10(deg(c.phi_L.L)) << "\n";
      out << "phi_L(D_R) " << fixed10(deg(c.phi_L.R)) << "\n";
      out << "phi_L(D_c) " << fixed10(deg(dc)) << "\n";
      out << "admissible " << (in.lo_closed ? "[" : "(") << fixed10(deg(in.lo)) << ", "
          << fixed10(deg(in.hi)) << (in.hi_closed ? "]" : ")") << "\n";
      out << "trichotomy_L " << to_string(c.tag.L) << "\n";
      out << "trichotomy_R " << to_string(c.tag.R) << "\n";
    } else if (construct_cmd->parsed()) {
      const GadgetParams p = angles.params();
      const Frame f = build_frame(p);
      if (kind == "positive") {
        emit(render(positive_pattern(f, parse_dividing(dividing)), format), out_path, out);
      } else if (kind == "negative") {
        emit(render(negative_pattern(f), format), out_path, out);
      } else {
        const CanonicalPair pr = build_pair(p);
        emit(format == "svg" ? to_svg(pr.hybrid)
                             : to_fold({&pr.positive, &pr.negative, &pr.hybrid}),
             out_path, out);
      }
    } else if (pair_cmd->parsed()) {
      const CanonicalPair pr = build_pair(angles.params());
      if (format == "report") {
        emit(pair_report(pr), out_path, out);
      } else if (format == "svg") {
        emit(to_svg(pr.hybrid), out_path, out);
      } else {
        emit(to_fold({&pr.positive, &pr.negative, &pr.hybrid}), out_path, out);
      }
    } else if (verify_cmd->parsed()) {
      SweepConfig cfg;
      cfg.samples = samples;
      cfg.seed = seed;
      cfg.tolerance = tol;
      const SweepReport rep = run_sweep(cfg);
      out << rep.to_text();
      return rep.pass() ? kExitOk : kExitInternal;
    } else if (demo_cmd->parsed()) {
      const GadgetParams p = validate(RawParams::from_degrees(90, 90, 90, 0, 0));
      const CanonicalPair pr = build_pair(p);
      const Frame f = build_frame(p);
      const CreasePattern quarter = positive_pattern(f, ExplicitPhiL{kPi / 4});
      if (out_path.empty()) {
        out << to_fold({&pr.positive, &pr.negative, &pr.hybrid});
      } else {
        const std::string ext = format == "svg" ? ".svg" : ".fold";
        emit(render(quarter, format), out_path + "/positive" + ext, out);
        emit(render(pr.negative, format), out_path + "/negative" + ext, out);
        emit(format == "svg" ? to_svg(pr.hybrid)
                             : to_fold({&pr.positive, &pr.negative, &pr.hybrid}),
             out_path + "/pair" + ext, out);
      }
    }
  } catch (const ConditionViolation& e) {
    err << "error: " << e.what() << "\n";
    return kExitCondition;
  } catch (const NotConstructible& e) {
    err << "error: " << e.what() << "\n";
    return kExitNotConstructible;
  } catch (const InvalidParams& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DegenerateDividing& e) {
    err << "error: " << e.what() << "\n";
    return kExitNotConstructible;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitOk;
}

}  // namespace origon::cli
