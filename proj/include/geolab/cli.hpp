#pragma once

// Command-line surface:
//   geolab constant <spec> <name> [--t <real>] [--method ...] [flags]
//   geolab curve    <spec> <name> --grid <n> --out <path> [flags]
//   geolab verify   [--space <spec>]... [--ids <list>] --out <path> [flags]
//
// Exit codes: 0 success / all asserted claims pass, 1 asserted-claim failure,
// 2 I/O failure, 64 usage error.  GEOLAB_SEED overrides the configured seed.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "geolab/constants.hpp"
#include "geolab/curve_io.hpp"
#include "geolab/errors.hpp"
#include "geolab/parse.hpp"
#include "geolab/verify.hpp"

namespace geolab {

namespace cli_detail {

inline constexpr int kExitOk = 0;
inline constexpr int kExitClaimFailure = 1;
inline constexpr int kExitIo = 2;
inline constexpr int kExitUsage = 64;

inline void add_opt_flags(CLI::App* cmd, OptConfig& cfg) {
  cmd->add_option("--grid-resolution", cfg.grid_resolution, "phase-1 grid points per dimension");
  cmd->add_option("--top-cells", cfg.top_cells, "grid cells promoted to refinement starts");
  cmd->add_option("--step-tol", cfg.step_tol, "compass termination step");
  cmd->add_option("--max-evals", cfg.max_evals, "total objective evaluation budget");
  cmd->add_option("--seed", cfg.seed, "seed for the randomized starts and samplers");
  cmd->add_option("--extra-starts", cfg.extra_starts, "seeded random refinement starts");
}

inline void apply_env_seed(OptConfig& cfg) {
  if (const char* env = std::getenv("GEOLAB_SEED")) {
    try {
      cfg.seed = std::stoull(env);
    } catch (...) {
      throw parse_error("GEOLAB_SEED is not an unsigned integer: '" + std::string(env) + "'");
    }
  }
}

inline std::vector<std::string> split_ids(const std::string& csv) {
  std::vector<std::string> ids;
  std::size_t pos = 0;
  while (pos <= csv.size()) {
    const std::size_t next = csv.find(',', pos);
    const std::string tok = csv.substr(pos, next == std::string::npos ? std::string::npos
                                                                      : next - pos);
    if (!tok.empty()) ids.push_back(tok);
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return ids;
}

struct ConstantArgs {
  std::string spec;
  std::string name;
  double t = 0.25;
  std::string method;  // empty = the constant's natural default
};

inline int run_constant(ConstantArgs a, const OptConfig& cfg, std::ostream& out) {
  const SpaceSpec space = parse_space_spec(a.spec);
  Estimate e;
  if (a.name == "czi") {
    if (a.method.empty()) a.method = "direct";
    if (a.method != "direct" && a.method != "identity")
      throw parse_error("czi method must be direct or identity, got '" + a.method + "'");
    e = czi(space, a.t, a.method == "direct" ? CziMethod::direct : CziMethod::identity, cfg);
  } else if (a.name == "z") {
    e = z_profile(space, a.t, cfg);
  } else if (a.name == "rho") {
    e = modulus_smoothness(space, a.t, cfg);
  } else if (a.name == "delta") {
    e = modulus_convexity(space, a.t, cfg);
  } else if (a.name == "zbaganu") {
    if (a.method.empty()) a.method = "direct";
    ZbaganuMethod m = ZbaganuMethod::direct;
    if (a.method == "profile_corrected") m = ZbaganuMethod::profile_corrected;
    else if (a.method == "profile_paper") m = ZbaganuMethod::profile_paper;
    else if (a.method != "direct")
      throw parse_error("zbaganu method must be direct, profile_corrected or profile_paper");
    e = zbaganu(space, m, cfg);
  } else if (a.name == "james") {
    if (a.method.empty()) a.method = "minform";
    if (a.method != "minform" && a.method != "isoform")
      throw parse_error("james method must be minform or isoform, got '" + a.method + "'");
    e = james(space, a.method == "minform" ? JamesMethod::minform : JamesMethod::isoform, cfg);
  } else if (a.name == "nj") {
    if (a.method.empty()) a.method = "classic";
    NjVariant v = NjVariant::classic;
    if (a.method == "modified") v = NjVariant::modified;
    else if (a.method == "iso") v = NjVariant::iso;
    else if (a.method != "classic")
      throw parse_error("nj variant must be classic, modified or iso");
    e = nj_constant(space, v, cfg);
  } else if (a.name == "htilde") {
    e = h_tilde(space, cfg);
  } else {
    throw parse_error("unknown constant '" + a.name +
                      "' (expected czi, z, rho, delta, zbaganu, james, nj or htilde)");
  }
  out << "space=" << format_space_spec(space) << " constant=" << a.name;
  if (a.name == "czi" || a.name == "z" || a.name == "rho" || a.name == "delta")
    out << " t=" << fmt12(a.t);
  if (a.name == "czi" || a.name == "zbaganu" || a.name == "james" || a.name == "nj")
    out << " method=" << a.method;
  out << " value=" << fmt12(e.value) << " evaluations=" << e.evaluations
      << " status=" << to_string(e.status) << " seed=" << cfg.seed << "\n";
  return kExitOk;
}

struct CurveArgs {
  std::string spec;
  std::string name;
  int grid = 51;
  std::string out_path;
};

inline int run_curve(const CurveArgs& a, const OptConfig& cfg) {
  const SpaceSpec space = parse_space_spec(a.spec);
  if (a.grid < 2) throw parse_error("curve: --grid must be >= 2");
  std::vector<CurvePoint> points;
  if (a.name == "czi") {
    points = czi_curve(space, a.grid, CziMethod::direct, cfg);
    const auto identity = czi_curve(space, a.grid, CziMethod::identity, cfg);
    points.insert(points.end(), identity.begin(), identity.end());
  } else if (a.name == "z") {
    points = z_curve(space, a.grid, cfg);
  } else if (a.name == "rho") {
    points = rho_curve(space, a.grid, cfg);
  } else if (a.name == "delta") {
    points = delta_curve(space, a.grid, cfg);
  } else {
    throw parse_error("unknown curve constant '" + a.name +
                      "' (expected czi, z, rho or delta)");
  }
  write_file(a.out_path, curve_csv(format_space_spec(space), a.name, points));
  return kExitOk;
}

struct VerifyArgs {
  std::vector<std::string> spaces;
  std::string ids_csv;
  std::string out_path;
  bool timings = false;
};

inline int run_verify(const VerifyArgs& a, const OptConfig& cfg, std::ostream& out) {
  std::vector<SpaceSpec> spaces;
  if (a.spaces.empty())
    spaces = default_catalog();
  else
    for (const std::string& s : a.spaces) spaces.push_back(parse_space_spec(s));
  const auto reports = run_claims(spaces, split_ids(a.ids_csv), cfg);
  write_file(a.out_path, reports_to_json(reports, a.timings).dump(2) + "\n");
  int n_pass = 0, n_fail = 0, n_mismatch = 0;
  for (const auto& r : reports) {
    if (r.verdict == Verdict::pass) ++n_pass;
    else if (r.verdict == Verdict::fail) ++n_fail;
    else ++n_mismatch;
  }
  out << "claims: " << reports.size() << " (pass " << n_pass << ", fail " << n_fail
      << ", mismatch_documented " << n_mismatch << ") -> " << a.out_path << "\n";
  return all_asserted_pass(reports) ? kExitOk : kExitClaimFailure;
}

}  // namespace cli_detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out = std::cout,
                   std::ostream& err = std::cerr) {
  using namespace cli_detail;
  CLI::App app{"numerical geometric constants of finite-dimensional normed spaces"};
  app.require_subcommand(1);

  OptConfig cfg;

  ConstantArgs ca;
  CLI::App* c_const = app.add_subcommand("constant", "compute one constant");
  c_const->add_option("spec", ca.spec, "space spec, e.g. lp:dim=2,p=1")->required();
  c_const->add_option("name", ca.name, "czi|z|rho|delta|zbaganu|james|nj|htilde")->required();
  c_const->add_option("--t", ca.t, "parameter t (or epsilon for delta)");
  c_const->add_option("--method", ca.method, "method/variant where applicable");
  add_opt_flags(c_const, cfg);

  CurveArgs cua;
  CLI::App* c_curve = app.add_subcommand("curve", "emit a CSV curve");
  c_curve->add_option("spec", cua.spec, "space spec")->required();
  c_curve->add_option("name", cua.name, "czi|z|rho|delta")->required();
  c_curve->add_option("--grid", cua.grid, "number of parameter samples");
  c_curve->add_option("--out", cua.out_path, "output CSV path")->required();
  add_opt_flags(c_curve, cfg);

  VerifyArgs va;
  CLI::App* c_verify = app.add_subcommand("verify", "run the claim harness");
  c_verify->add_option("--space", va.spaces, "space spec (repeatable; default catalog)");
  c_verify->add_option("--ids", va.ids_csv, "comma-separated claim ids");
  c_verify->add_option("--out", va.out_path, "output JSON path")->required();
  c_verify->add_flag("--timings", va.timings, "include runtime_ms in the report");
  add_opt_flags(c_verify, cfg);

  std::vector<std::string> argv(args.rbegin(), args.rend());  // CLI11 takes reversed args
  try {
    app.parse(std::move(argv));
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    apply_env_seed(cfg);
    if (c_const->parsed()) return run_constant(ca, cfg, out);
    if (c_curve->parsed()) return run_curve(cua, cfg);
    return run_verify(va, cfg, out);
  } catch (const io_error& e) {
    err << "io error: " << e.what() << "\n";
    return kExitIo;
  } catch (const parse_error& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace geolab
