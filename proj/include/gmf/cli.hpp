#pragma once

// Command-line front end. `run` parses the arguments, evaluates one
// subcommand and writes a single JSON report to `out`; diagnostics go to
// `err`. Exit status: 0 success, 1 `verify` found a failing check, 2 bad
// input (parse, dimension or argument errors), 3 violated precondition.

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gmf/errors.hpp"
#include "gmf/gauge.hpp"
#include "gmf/io.hpp"
#include "gmf/omega.hpp"
#include "gmf/problem.hpp"
#include "gmf/support.hpp"
#include "gmf/varcalc.hpp"
#include "gmf/verify.hpp"

namespace gmf::cli {

using nlohmann::json;

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kBadInput = 2, kPrecondition = 3 };

namespace detail {

struct Inputs {
  std::map<std::string, std::string> paths;  // flag name (A, B, X, V, Y, W) -> file
  ToleranceConfig tol;
  std::uint64_t seed = 0;
  double epsilon = 0.1;
  std::string out_path;
  bool randomize_anchors = false;
};

struct Loaded {
  std::map<std::string, Matrix> mats;
  std::optional<ConstraintPair> cp;
};

inline json extended_json(const ExtendedReal& v) {
  if (v.is_finite()) return v.value();
  return "inf";
}

inline json tolerance_json(const ToleranceConfig& t) {
  return {{"rank_tol", t.rank_tol},
          {"psd_tol", t.psd_tol},
          {"range_tol", t.range_tol},
          {"eq_tol", t.eq_tol},
          {"feas_tol", t.feas_tol}};
}

inline const Matrix& need(const Loaded& in, const std::string& key) {
  const auto it = in.mats.find(key);
  if (it == in.mats.end()) throw ArgumentError("missing required input --" + key);
  return it->second;
}

/// Reads the matrix files and assembles (A, B). Without --A the problem is
/// unconstrained (p = 0) with n, m taken from X or Y; with --A and no --B,
/// B = 0.
inline Loaded load(const Inputs& in, const std::vector<std::string>& required) {
  Loaded out;
  for (const auto& [key, path] : in.paths) out.mats.emplace(key, io::read_matrix(path));
  for (const auto& key : required) need(out, key);

  const Matrix* shape = nullptr;
  for (const char* key : {"X", "Y"}) {
    const auto it = out.mats.find(key);
    if (it != out.mats.end()) {
      shape = &it->second;
      break;
    }
  }
  if (!shape) throw ArgumentError("need --X or --Y to fix the dimensions n x m");
  const Eigen::Index n = shape->rows();
  const Eigen::Index m = shape->cols();

  const auto a = out.mats.find("A");
  const auto b = out.mats.find("B");
  if (a == out.mats.end()) {
    if (b != out.mats.end()) throw ArgumentError("--B given without --A");
    out.cp.emplace(ConstraintPair::unconstrained(n, m, in.tol));
  } else {
    Matrix bm = b != out.mats.end() ? b->second : Matrix::Zero(a->second.rows(), m);
    out.cp.emplace(a->second, std::move(bm), in.tol);
  }
  return out;
}

inline DualPoint dual_of(const Loaded& in) { return {need(in, "X"), need(in, "V")}; }
inline PrimalPoint primal_of(const Loaded& in) { return {need(in, "Y"), need(in, "W")}; }

using Handler = std::function<json(const Loaded&, const Inputs&, int& exit_code)>;

struct Command {
  std::string name;
  std::string help;
  std::vector<std::string> required;
  std::vector<std::string> optional;
  Handler handler;
};

inline std::vector<Command> commands() {
  const std::vector<std::string> ab{"A", "B"};
  std::vector<Command> cmds;
  auto add = [&](std::string name, std::string help, std::vector<std::string> req, Handler h) {
    cmds.push_back({std::move(name), std::move(help), std::move(req), ab, std::move(h)});
  };

  add("support", "support function value and KKT solution", {"X", "V"}, [](const Loaded& in, const Inputs&, int&) {
    const SupportResult r = eval_support(dual_of(in), *in.cp);
    json o{{"value", extended_json(r.value)}, {"in_domain", r.is_finite()}};
    if (r.is_finite()) {
      o["maximizer"] = io::matrix_json(r.maximizer);
      o["multiplier"] = io::matrix_json(r.multiplier);
    }
    return o;
  });
  add("domain", "membership in the support function domain", {"X", "V"}, [](const Loaded& in, const Inputs&, int&) {
    return json{{"in_domain", in_domain(dual_of(in), *in.cp)}};
  });
  add("omega-member", "membership in Omega(A,B)", {"Y", "W"}, [](const Loaded& in, const Inputs&, int&) {
    return json{{"member", in_omega(primal_of(in), *in.cp)}};
  });
  add("omega-rint", "membership in the relative interior of Omega(A,B)", {"Y", "W"},
      [](const Loaded& in, const Inputs&, int&) { return json{{"member", in_rint_omega(primal_of(in), *in.cp)}}; });
  add("omega-aff", "membership in the affine hull of Omega(A,B)", {"Y", "W"},
      [](const Loaded& in, const Inputs&, int&) { return json{{"member", in_aff_omega(primal_of(in), *in.cp)}}; });
  add("omega-polar", "membership in the polar of Omega(A,B)", {"X", "V"}, [](const Loaded& in, const Inputs&, int&) {
    const DualPoint d = dual_of(in);
    return json{{"member", in_omega_polar(d, *in.cp)}, {"support_value", extended_json(eval_support(d, *in.cp).value)}};
  });
  add("horizon", "membership in the horizon cone of Omega(A,B)", {"Y", "W"},
      [](const Loaded& in, const Inputs&, int&) { return json{{"member", in_horizon_omega(primal_of(in), *in.cp)}}; });
  add("horizon-polar", "membership in the horizon cone of the polar", {"X", "V"},
      [](const Loaded& in, const Inputs&, int&) {
        const DualPoint d = dual_of(in);
        return json{{"member", in_horizon_omega_polar(d, *in.cp)},
                    {"support_value", extended_json(eval_support(d, *in.cp).value)}};
      });
  add("subgrad", "canonical subgradient of the support function", {"X", "V"},
      [](const Loaded& in, const Inputs&, int&) {
        const SubgradientResult r = canonical_subgradient(dual_of(in), *in.cp);
        return json{{"Y", io::matrix_json(r.point.y)},
                    {"W", io::matrix_json(r.point.w)},
                    {"certificate_z", io::matrix_json(r.certificate_z)},
                    {"value", r.value}};
      });
  add("subgrad-check", "is (Y,W) a subgradient at (X,V)", {"X", "V", "Y", "W"},
      [](const Loaded& in, const Inputs&, int&) {
        return json{{"member", in_subdifferential(primal_of(in), dual_of(in), *in.cp)}};
      });
  add("ncone-check", "is (X,V) normal to Omega(A,B) at (Y,W)", {"X", "V", "Y", "W"},
      [](const Loaded& in, const Inputs&, int&) {
        return json{{"member", in_normal_cone(dual_of(in), primal_of(in), *in.cp)}};
      });
  add("gauge", "gauge of Omega(A,0) at (Y,W)", {"Y", "W"}, [](const Loaded& in, const Inputs&, int&) {
    const GaugeResult g = eval_gauge(primal_of(in), *in.cp);
    json o{{"value", extended_json(g.value)}};
    o["sigma_min"] = g.sigma_min ? json(*g.sigma_min) : json("inf");
    if (g.critical_matrix.size() > 0) o["critical_matrix"] = io::matrix_json(g.critical_matrix);
    return o;
  });
  add("gauge-polar", "gauge of the polar of Omega(A,0) at (X,V)", {"X", "V"},
      [](const Loaded& in, const Inputs&, int&) {
        return json{{"value", extended_json(eval_polar_gauge(dual_of(in), *in.cp))}};
      });
  add("witness", "epsilon-Caratheodory witness for a point of Omega(A,B)", {"Y", "W"},
      [](const Loaded& in, const Inputs& opts, int&) {
        const PrimalPoint pt = primal_of(in);
        const ConvexWitness w =
            caratheodory_witness(pt, *in.cp, opts.epsilon, {opts.randomize_anchors, opts.seed});
        const PrimalPoint induced = w.induced_point();
        json o{{"epsilon", w.epsilon},
               {"points", w.points.size()},
               {"distance", distance(induced, pt)},
               {"induced_in_omega", in_omega(induced, *in.cp)},
               {"weights", w.weights}};
        if (!opts.out_path.empty()) {
          Matrix weights(static_cast<Eigen::Index>(w.weights.size()), 1);
          for (std::size_t i = 0; i < w.weights.size(); ++i) weights(static_cast<Eigen::Index>(i), 0) = w.weights[i];
          std::string text = io::format_matrix(weights, "weights");
          for (std::size_t i = 0; i < w.points.size(); ++i) {
            text += io::format_matrix(w.points[i], "Y_" + std::to_string(i));
          }
          io::write_text(opts.out_path, text);
          o["file"] = opts.out_path;
        }
        return o;
      });
  return cmds;
}

}  // namespace detail

/// `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized matrix-fractional function toolkit", "gmf_cli"};
  app.require_subcommand(1);

  detail::Inputs inputs;
  auto add_tolerances = [&inputs](CLI::App* sub) {
    sub->add_option("--rank-tol", inputs.tol.rank_tol, "relative rank cutoff")->capture_default_str();
    sub->add_option("--psd-tol", inputs.tol.psd_tol, "eigenvalue slack for semidefinite tests")
        ->capture_default_str();
    sub->add_option("--range-tol", inputs.tol.range_tol, "relative residual for range inclusion")
        ->capture_default_str();
    sub->add_option("--eq-tol", inputs.tol.eq_tol, "relative slack for equalities")->capture_default_str();
    sub->add_option("--feas-tol", inputs.tol.feas_tol, "relative residual for AY = B")->capture_default_str();
    sub->add_option("--seed", inputs.seed, "seed for randomized steps")->capture_default_str();
  };

  const auto cmds = detail::commands();
  std::map<std::string, const detail::Command*> by_name;
  for (const auto& cmd : cmds) {
    CLI::App* sub = app.add_subcommand(cmd.name, cmd.help);
    by_name[cmd.name] = &cmd;
    auto add_path = [&](const std::string& key, bool required) {
      auto* opt = sub->add_option_function<std::string>(
          "--" + key, [&inputs, key](const std::string& p) { inputs.paths[key] = p; }, "matrix file for " + key);
      opt->check(CLI::ExistingFile);
      if (required) opt->required();
    };
    for (const auto& key : cmd.required) add_path(key, true);
    for (const auto& key : cmd.optional) add_path(key, false);
    if (cmd.name == "witness") {
      sub->add_option("--epsilon", inputs.epsilon, "weight moved off the base point, in (0,1)")
          ->capture_default_str();
      sub->add_option("--out", inputs.out_path, "write the witness to this file");
      sub->add_flag("--random-anchors", inputs.randomize_anchors, "random feasible anchors instead of Y_0");
    }
    add_tolerances(sub);
  }
  CLI::App* verify_cmd = app.add_subcommand("verify", "run every oracle cross-check");
  verify_cmd->add_option("--seed", inputs.seed, "seed for randomized steps")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }

  const auto start = std::chrono::steady_clock::now();
  const CLI::App* chosen = app.get_subcommands().front();
  const std::string name = chosen->get_name();
  json report{{"command", name}, {"seed", inputs.seed}};
  int code = kOk;

  try {
    if (name == "verify") {
      json criteria = json::array();
      for (const auto& c : verify::run_acceptance(inputs.seed)) {
        criteria.push_back({{"id", c.id}, {"title", c.title}, {"passed", c.passed}, {"detail", c.detail}});
        if (!c.passed) code = kCheckFailed;
      }
      report["outputs"] = {{"criteria", criteria}, {"all_passed", code == kOk}};
      report["inputs"] = json::object();
      report["tolerances"] = detail::tolerance_json(ToleranceConfig{});
    } else {
      inputs.tol.validate();
      const detail::Command& cmd = *by_name.at(name);
      const detail::Loaded loaded = detail::load(inputs, cmd.required);
      json digests = json::object();
      for (const auto& [key, m] : loaded.mats) digests[key] = io::digest_json(m);
      report["inputs"] = digests;
      report["tolerances"] = detail::tolerance_json(inputs.tol);
      report["outputs"] = cmd.handler(loaded, inputs, code);
    }
  } catch (const io::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const DimensionError& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kPrecondition;
  } catch (const ConfigurationError& e) {
    err << "error: " << e.what() << "\n";
    return kPrecondition;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }

  report["wall_time_ms"] =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  out << report.dump(2) << "\n";
  return code;
}

}  // namespace gmf::cli
