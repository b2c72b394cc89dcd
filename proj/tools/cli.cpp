#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <vector>

#include "nilharm/errors.hpp"
#include "nilharm/io.hpp"
#include "nilharm/laplacian.hpp"
#include "nilharm/suite.hpp"
#include "nilharm/verifier.hpp"

namespace nilharm::cli {

namespace {

using io::json;

struct Options {
  std::string group_file;
  std::string measure_file;
  std::string poly_file;
  std::string json_path;
  int k = 2;
  int radius = 4;
  bool verify = false;
};

GroupSchema load_group(const Options& o) {
  return io::group_from_json(io::parse_json(io::read_file(o.group_file), o.group_file));
}

Measure load_measure(const GroupSchema& schema, const Options& o) {
  if (o.measure_file.empty()) return Measure::simple_walk(schema);
  return io::measure_from_json(schema, io::parse_json(io::read_file(o.measure_file), o.measure_file));
}

void emit_json(const Options& o, const json& j, std::ostream& out) {
  if (o.json_path.empty()) return;
  const std::string text = j.dump(2) + "\n";
  if (o.json_path == "-") {
    out << text;
    return;
  }
  std::ofstream f(o.json_path, std::ios::binary);
  if (!f) throw ValidationError("cannot write " + o.json_path);
  f << text;
}

int cmd_dims(const Options& o, std::ostream& out) {
  const auto schema = load_group(o);
  if (o.k < 0) throw ValidationError("--k must be non-negative");
  json rows = json::array();
  out << "# " << schema.name() << "  rank " << schema.rank() << "  homogeneous dimension "
      << schema.homogeneous_dimension() << "\n";
  out << "k\tdim_P\tdim_H\n";
  for (int k = 0; k <= o.k; ++k) {
    const auto p = dim_pk(schema, k);
    const auto h = dim_hk(schema, k);
    out << k << '\t' << p << '\t' << h << '\n';
    rows.push_back({{"k", k}, {"dim_p", p}, {"dim_h", h}});
  }
  emit_json(o, {{"group", io::group_to_json(schema)}, {"rows", rows}}, out);
  return kOk;
}

int cmd_harmonic(const Options& o, std::ostream& out) {
  const auto schema = load_group(o);
  const auto mu = load_measure(schema, o);
  if (o.k < 0) throw ValidationError("--k must be non-negative");
  const auto report = harmonic_basis(schema, mu, o.k);

  out << "# H^" << o.k << " on " << schema.name() << ": dim " << report.dim << " (predicted "
      << report.predicted_dim << ")\n";
  json basis = json::array();
  for (const auto& f : report.basis) {
    out << io::format_polynomial(f) << '\n';
    basis.push_back(io::polynomial_to_json(f));
  }
  json j{{"group", io::group_to_json(schema)},
         {"measure", io::measure_to_json(mu)},
         {"k", o.k},
         {"dim", report.dim},
         {"predicted_dim", report.predicted_dim},
         {"basis", basis}};

  int status = kOk;
  if (o.verify) {
    json checks = json::array();
    for (const auto& f : report.basis) {
      const auto c = verify::check_harmonic_on_ball(schema, mu, f, o.radius);
      json entry{{"polynomial", io::format_polynomial(f)}, {"pass", c.pass}, {"points", c.points_checked}};
      if (!c.pass) {
        entry["witness"] = io::element_to_json(*c.witness);
        entry["value"] = format_rational(c.value);
        entry["mean"] = format_rational(c.mean);
        status = kInvariantFailure;
        out << "FAIL harmonic check for " << io::format_polynomial(f) << " at " << to_string(*c.witness) << ": "
            << format_rational(c.value) << " vs " << format_rational(c.mean) << '\n';
      }
      checks.push_back(entry);
    }
    if (status == kOk) out << "verified: mean-value identity holds on the radius-" << o.radius << " ball\n";
    j["verify"] = {{"radius", o.radius}, {"checks", checks}};
  }
  emit_json(o, j, out);
  return status;
}

Polynomial load_polynomial(const GroupSchema& schema, const Options& o) {
  const std::string text = io::read_file(o.poly_file);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '[') {
    return io::polynomial_from_json(schema, io::parse_json(text, o.poly_file));
  }
  return io::parse_polynomial(schema, text);
}

int cmd_preimage(const Options& o, std::ostream& out) {
  const auto schema = load_group(o);
  const auto mu = load_measure(schema, o);
  const auto q = load_polynomial(schema, o);
  const auto p = solve_preimage(schema, mu, q);
  const bool ok = apply_laplacian(mu, p) == q;
  out << io::format_polynomial(p) << '\n';
  out << (ok ? "verified: " : "FAILED: ") << "Laplacian of the result equals " << io::format_polynomial(q) << '\n';
  emit_json(o,
            {{"group", io::group_to_json(schema)},
             {"input", io::polynomial_to_json(q)},
             {"preimage", io::polynomial_to_json(p)},
             {"verified", ok}},
            out);
  return ok ? kOk : kInternalInconsistency;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const auto schema = load_group(o);
  const auto mu = load_measure(schema, o);
  SuiteOptions so;
  so.k_max = o.k;
  so.radius = o.radius;
  const auto results = run_invariant_suite(schema, mu, so);
  json checks = json::array();
  bool all = true;
  for (const auto& r : results) {
    out << (r.pass ? "PASS " : "FAIL ") << r.name << "  " << r.detail << '\n';
    checks.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    all = all && r.pass;
  }
  out << (all ? "all checks passed" : "invariant failures detected") << '\n';
  emit_json(o, {{"group", io::group_to_json(schema)}, {"k_max", o.k}, {"radius", o.radius}, {"checks", checks}}, out);
  return all ? kOk : kInvariantFailure;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Polynomials and harmonic functions of polynomial growth on nilpotent groups"};
  app.require_subcommand(1);
  Options o;

  auto add_group = [&](CLI::App* sub) { sub->add_option("--group", o.group_file, "Group config (JSON)")->required(); };
  auto add_measure = [&](CLI::App* sub) {
    sub->add_option("--measure", o.measure_file, "Measure config (JSON); default: simple walk");
  };
  auto add_json = [&](CLI::App* sub) { sub->add_option("--json", o.json_path, "Write a JSON report (- for stdout)"); };

  auto* dims = app.add_subcommand("dims", "Table of dim P^k and dim H^k for k = 0..K");
  add_group(dims);
  dims->add_option("--k", o.k, "Largest k");
  add_json(dims);

  auto* harmonic = app.add_subcommand("harmonic", "Basis of harmonic polynomials of degree <= k");
  add_group(harmonic);
  add_measure(harmonic);
  harmonic->add_option("--k", o.k, "Degree bound");
  harmonic->add_flag("--verify", o.verify, "Check every basis element on a Cayley ball");
  harmonic->add_option("--radius", o.radius, "Ball radius for --verify");
  add_json(harmonic);

  auto* preimage = app.add_subcommand("preimage", "Solve Laplacian(p) = q for a polynomial q");
  add_group(preimage);
  add_measure(preimage);
  preimage->add_option("--poly", o.poly_file, "Polynomial file (text syntax or JSON terms)")->required();
  add_json(preimage);

  auto* verify_cmd = app.add_subcommand("verify", "Run the full invariant suite");
  add_group(verify_cmd);
  add_measure(verify_cmd);
  verify_cmd->add_option("--k", o.k, "Largest degree checked");
  verify_cmd->add_option("--radius", o.radius, "Ball radius for the harmonic oracle");
  add_json(verify_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kValidationError;
  }

  try {
    if (*dims) return cmd_dims(o, out);
    if (*harmonic) return cmd_harmonic(o, out);
    if (*preimage) return cmd_preimage(o, out);
    if (*verify_cmd) return cmd_verify(o, out);
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << '\n';
    return kValidationError;
  } catch (const DimensionError& e) {
    err << "validation error: " << e.what() << '\n';
    return kValidationError;
  } catch (const InconsistencyError& e) {
    err << "internal inconsistency: " << e.what() << '\n';
    return kInternalInconsistency;
  } catch (const InterpolationError& e) {
    err << "internal inconsistency: " << e.what() << '\n';
    return kInternalInconsistency;
  } catch (const InvariantError& e) {
    err << "invariant failure: " << e.what() << '\n';
    return kInvariantFailure;
  }
  return kValidationError;
}

}  // namespace nilharm::cli
