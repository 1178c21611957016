#include "tpb/cli_reports.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

std::string read_source(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) tpb::fail(tpb::ErrorCode::SpecError, "cannot open spec file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const tpb::CurveSpec& pick(const std::vector<tpb::CurveSpec>& specs, const std::string& label) {
  for (const auto& s : specs)
    if (s.label == label) return s;
  tpb::fail(tpb::ErrorCode::SpecError, "no curve labelled '" + label + "'");
}

std::pair<tpb::CurveSpec, tpb::CurveSpec> pick_pair(const std::vector<tpb::CurveSpec>& specs,
                                                     const std::vector<std::string>& pair) {
  if (!pair.empty()) {
    if (pair.size() != 2) tpb::fail(tpb::ErrorCode::SpecError, "--pair needs two labels");
    return {pick(specs, pair[0]), pick(specs, pair[1])};
  }
  if (specs.size() < 2) tpb::fail(tpb::ErrorCode::SpecError, "spec file needs at least two curves");
  return {specs[0], specs[1]};
}

tpb::WOverride parse_overrides(const std::vector<std::string>& items, const std::string& l1, const std::string& l2) {
  tpb::WOverride out;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) tpb::fail(tpb::ErrorCode::SpecError, "--w-override expects label=w");
    const std::string label = item.substr(0, eq);
    int w = 0;
    try {
      w = std::stoi(item.substr(eq + 1));
    } catch (const std::exception&) {
      tpb::fail(tpb::ErrorCode::SpecError, "--w-override value must be an integer");
    }
    if (label == l1 || label == "1") out.w[0] = w;
    else if (label == l2 || label == "2") out.w[1] = w;
    else tpb::fail(tpb::ErrorCode::SpecError, "--w-override label '" + label + "' is not in the pair");
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Common projective torsion of elliptic curve pairs and explicit bounds"};
  app.require_subcommand(1);
  std::string format = "text", output;
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--output", output, "Write the report to this file instead of stdout");

  std::string spec_path;
  std::vector<std::string> pair;
  std::int64_t p = 0;

  auto* classify = app.add_subcommand("classify", "Reduction types and invariant valuations at p");
  classify->add_option("--spec", spec_path, "Curve spec file ('-' for stdin)")->required();
  classify->add_option("--p", p, "Prime")->required();

  auto* torsion = app.add_subcommand("common-torsion", "Common projective torsion with finite-field cross-check");
  int max_order = 2;
  std::vector<std::int64_t> aux;
  long fault = 0;
  torsion->add_option("--spec", spec_path)->required();
  torsion->add_option("--pair", pair)->delimiter(',');
  torsion->add_option("--N", max_order, "Torsion order bound")->check(CLI::Range(1, 64));
  torsion->add_option("--aux-primes", aux, "Auxiliary primes for the oracle")->delimiter(',');
  torsion->add_option("--inject-fault", fault)->group("");

  auto* bound = app.add_subcommand("bound", "Certify an explicit bound at p (and a total bound with q)");
  std::optional<std::int64_t> q;
  std::vector<std::string> w_over;
  bound->add_option("--spec", spec_path)->required();
  bound->add_option("--pair", pair)->delimiter(',');
  bound->add_option("--p", p)->required();
  bound->add_option("--q", q);
  bound->add_option("--w-override", w_over, "label=w, w = 0 asserts the canonical lift");

  auto* frob = app.add_subcommand("frob-lift", "Frobenius lift test mod p^2");
  std::string curve_label, cubic;
  frob->add_option("--spec", spec_path);
  frob->add_option("--curve", curve_label);
  frob->add_option("--cubic", cubic, "Raw plane cubic, e.g. \"y^2*z - x^3 - z^3\"");
  frob->add_option("--p", p)->required();

  auto* canon = app.add_subcommand("canonical-lift", "Affine space of canonical-direction lifts");
  canon->add_option("--cubic", cubic)->required();
  canon->add_option("--p", p)->required();

  auto* witt = app.add_subcommand("witt", "Evaluate an expression in W_2(F_p)");
  std::string expr;
  witt->add_option("--p", p)->required();
  witt->add_option("expression", expr, "e.g. \"add (1,0) (1,0)\"")->required();

  auto* primes = app.add_subcommand("find-primes", "Scan primes for admissible scenarios");
  std::int64_t lo = 5, hi = 100;
  primes->add_option("--spec", spec_path)->required();
  primes->add_option("--pair", pair)->delimiter(',');
  primes->add_option("--from", lo);
  primes->add_option("--to", hi);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    tpb::RunReport report;
    if (classify->parsed()) {
      report = tpb::cmd_classify(tpb::parse_curve_specs(read_source(spec_path)), p);
    } else if (torsion->parsed()) {
      const auto specs = tpb::parse_curve_specs(read_source(spec_path));
      const auto [s1, s2] = pick_pair(specs, pair);
      report = tpb::cmd_common_torsion(s1, s2, max_order, aux, fault);
    } else if (bound->parsed()) {
      const auto specs = tpb::parse_curve_specs(read_source(spec_path));
      const auto [s1, s2] = pick_pair(specs, pair);
      report = tpb::cmd_bound(s1, s2, p, q, parse_overrides(w_over, s1.label, s2.label));
    } else if (frob->parsed()) {
      if (!cubic.empty()) {
        report = tpb::cmd_frob_lift_cubic(cubic, p);
      } else {
        if (spec_path.empty()) tpb::fail(tpb::ErrorCode::SpecError, "frob-lift needs --cubic or --spec");
        const auto specs = tpb::parse_curve_specs(read_source(spec_path));
        if (specs.empty()) tpb::fail(tpb::ErrorCode::SpecError, "spec file has no curves");
        report = tpb::cmd_frob_lift(curve_label.empty() ? specs.front() : pick(specs, curve_label), p);
      }
    } else if (canon->parsed()) {
      report = tpb::cmd_canonical_lift(cubic, p);
    } else if (witt->parsed()) {
      report = tpb::cmd_witt(p, expr);
    } else if (primes->parsed()) {
      const auto specs = tpb::parse_curve_specs(read_source(spec_path));
      const auto [s1, s2] = pick_pair(specs, pair);
      report = tpb::cmd_find_primes(s1, s2, lo, hi);
    }
    const std::string text = format == "structured" ? report.serialize() : report.summary();
    if (output.empty()) std::cout << text;
    else tpb::write_atomically(output, text);
    if (const auto alarm = report.find("alarm")) {
      std::cerr << "soundness alarm: " << *alarm << "\n";
      return 3;
    }
    return 0;
  } catch (const tpb::Error& e) {
    std::cerr << e.what() << "\n";
    return tpb::exit_code_for(e.code());
  }
}
