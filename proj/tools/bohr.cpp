// bohr: command-line front end for the verification campaigns.
//
//   bohr coeffs    --spec '{"kind":"mobius","a":0.5}' --order 4
//   bohr verify    --theorem T1 --family blaschke:100:6 --grid 0:0.9:20 --seed 7 --out report.json
//   bohr radius    --theorem T3C --grid 0:0.98:50 --out curve.csv
//   bohr sharpness --theorem T2B --r 0.55
//   bohr carlson   --samples 1000 --degrees 8 --out carlson.json

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "bohr/errors.hpp"
#include "bohr/report.hpp"
#include "bohr/spec_json.hpp"

namespace {

// Writes to --out when given, stdout otherwise.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::runtime_error("cannot open " + path + " for writing");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

bohr::BoundedFunctionSpec load_spec(const std::string& text, const std::string& path) {
  std::string source = text;
  if (!path.empty()) {
    std::ifstream in(path);
    if (!in) throw bohr::ParseError("cannot read " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    source = buf.str();
  }
  if (source.empty()) throw bohr::ParseError("coeffs needs --spec or --spec-file");
  try {
    return bohr::spec_from_json(nlohmann::json::parse(source));
  } catch (const nlohmann::json::exception& e) {
    throw bohr::ParseError(std::string("malformed spec JSON: ") + e.what());
  }
}

bohr::Mode parse_mode(const std::string& s) {
  if (s == "rigorous") return bohr::Mode::Rigorous;
  if (s == "fast") return bohr::Mode::Fast;
  throw bohr::ParseError("mode must be rigorous or fast");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bohr-type coefficient inequalities: evaluation, radius recovery and property campaigns"};
  app.set_version_flag("--version", bohr::version_string());
  app.require_subcommand(1);

  std::string out_path;
  std::string theorem = "T1";
  std::size_t order = bohr::kDefaultOrder;
  std::uint64_t seed = 42;

  auto* coeffs = app.add_subcommand("coeffs", "Write the Taylor coefficients of a function as CSV");
  std::string spec_text, spec_path;
  coeffs->add_option("--spec", spec_text, "Function spec as JSON");
  coeffs->add_option("--spec-file", spec_path, "File holding the function spec JSON");
  coeffs->add_option("--order,-N", order, "Truncation order")->capture_default_str();
  coeffs->add_option("--out", out_path, "Output path (default stdout)");

  auto* verify = app.add_subcommand("verify", "Evaluate a theorem over a family and r-grid; JSON report");
  bohr::VerifyOptions vopt;
  std::string mode = "rigorous";
  verify->add_option("--theorem", theorem, "TA, T1, T2A, T2B, T3A, T3B or T3C")->capture_default_str();
  verify->add_option("--family", vopt.family, "Function family")->capture_default_str();
  verify->add_option("--order,-N", order, "Truncation order")->capture_default_str();
  verify->add_option("--grid", vopt.grid, "start:stop:count, stop may be R (per-function radius)")->capture_default_str();
  verify->add_option("--seed", seed, "Seed for random families")->capture_default_str();
  verify->add_option("--mode", mode, "rigorous or fast")->capture_default_str();
  verify->add_option("--out", out_path, "Report path (default stdout)");

  auto* radius = app.add_subcommand("radius", "Recover sharp radii by bisection; CSV a,empirical,closed,discrepancy");
  bohr::RadiusOptions ropt;
  radius->add_option("--theorem", theorem, "Theorem id")->capture_default_str();
  radius->add_option("--family", ropt.family, "Family (default: the theorem's extremal family)");
  radius->add_option("--grid", ropt.grid, "Parameter grid lo:hi:count for T2A/T3C curves");
  radius->add_option("--tol", ropt.tol, "Bisection tolerance")->capture_default_str();
  radius->add_option("--order,-N", order, "Truncation order")->capture_default_str();
  radius->add_option("--seed", seed, "Seed for random families")->capture_default_str();
  radius->add_option("--out", out_path, "CSV path (default stdout)");

  auto* sharpness = app.add_subcommand("sharpness", "Emit an extremal function violating the inequality past its radius");
  double r = 0.0;
  std::optional<double> a;
  std::size_t witness_order = 512;
  sharpness->add_option("--theorem", theorem, "Theorem id")->capture_default_str();
  sharpness->add_option("--r", r, "Radius past the sharp radius")->required();
  sharpness->add_option("--a", a, "Witness parameter for T2A, T2B, T3C (default 0.5)");
  sharpness->add_option("--order,-N", witness_order, "Truncation order")->capture_default_str();
  sharpness->add_option("--out", out_path, "JSON path (default stdout)");

  auto* carlson = app.add_subcommand("carlson", "Carlson coefficient bounds over random corpora plus equality cases");
  bohr::CarlsonOptions copt;
  carlson->add_option("--samples", copt.samples, "Samples per corpus (Blaschke and Schur)")->capture_default_str();
  carlson->add_option("--degrees", copt.degrees, "Maximum degree / parameter count")->capture_default_str();
  carlson->add_option("--order,-N", order, "Truncation order")->capture_default_str();
  carlson->add_option("--seed", seed, "Seed")->capture_default_str();
  carlson->add_option("--max-n", copt.max_n, "Largest n in the bounds")->capture_default_str();
  carlson->add_option("--out", out_path, "Report path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*coeffs) {
      const auto spec = load_spec(spec_text, spec_path);
      Output out(out_path);
      bohr::cmd_coeffs(spec, order, out.stream());
      return 0;
    }
    if (*verify) {
      vopt.theorem = bohr::parse_functional(theorem);
      vopt.order = order;
      vopt.seed = seed;
      vopt.mode = parse_mode(mode);
      const auto report = bohr::cmd_verify(vopt);
      Output out(out_path);
      bohr::write_report(report, out.stream());
      const auto counts = report.counts();
      std::cerr << report.campaign << ": " << report.rows.size() << " rows, " << counts.at("pass") << " pass, "
                << counts.at("fail") << " fail, " << counts.at("inconclusive") << " inconclusive, "
                << counts.at("error") << " error\n";
      return report.exit_status();
    }
    if (*radius) {
      ropt.theorem = bohr::parse_functional(theorem);
      ropt.order = order;
      ropt.seed = seed;
      const auto rows = bohr::cmd_radius(ropt);
      Output out(out_path);
      bohr::write_radius_csv(rows, out.stream());
      return 0;
    }
    if (*sharpness) {
      const auto id = bohr::parse_functional(theorem);
      const auto w = bohr::sharpness_witness(id, r, a, witness_order);
      Output out(out_path);
      out.stream() << bohr::witness_to_json(id, r, w).dump(2) << '\n';
      return 0;
    }
    if (*carlson) {
      copt.order = order;
      copt.seed = seed;
      const auto report = bohr::cmd_carlson(copt);
      Output out(out_path);
      bohr::write_report(report, out.stream());
      const auto counts = report.counts();
      std::cerr << report.campaign << ": " << report.rows.size() << " rows, " << counts.at("fail") << " fail\n";
      return report.exit_status();
    }
  } catch (const bohr::Error& e) {
    std::cerr << "error: " << e.kind() << ": " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
