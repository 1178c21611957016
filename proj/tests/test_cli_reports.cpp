#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <sys/wait.h>

using namespace tpbtest;

namespace {

int run_cli(const std::string& args) {
  const std::string cmd = std::string(TPB_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string corpus_path() { return std::string(TPB_DATA_DIR) + "/corpus.txt"; }

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

}  // namespace

TEST_CASE("curve spec parsing") {
  const auto specs = parse_curve_specs("# header\ncurve E a4=-1\n\ncurve F a2=1/2 a6=-3/4 mobius=1,2,0,1  # tail\n");
  REQUIRE(specs.size() == 2);
  CHECK(specs[0].label == "E");
  CHECK(specs[0].curve == short_curve(-1, 0));
  CHECK(specs[0].line == 2);
  CHECK(specs[1].curve.a2 == rat(1, 2));
  CHECK(specs[1].curve.a6 == rat(-3, 4));
  CHECK(specs[1].twist == Mobius(rat(1), rat(2), rat(0), rat(1)));
  CHECK(parse_curve_specs(format_curve_spec(specs[1]))[0].curve == specs[1].curve);
  CHECK(corpus().size() == 9);
}

TEST_CASE("curve spec errors") {
  CHECK(code_of([] { parse_curve_specs("curve E a4=1/0\n"); }) == ErrorCode::SpecError);
  CHECK(code_of([] { parse_curve_specs("curve E a4=0.5\n"); }) == ErrorCode::SpecError);
  CHECK(code_of([] { parse_curve_specs("curve E a5=1\n"); }) == ErrorCode::SpecError);
  CHECK(code_of([] { parse_curve_specs("curve E a4=1\ncurve E a4=2\n"); }) == ErrorCode::SpecError);
  CHECK(code_of([] { parse_curve_specs("curve E\n"); }) == ErrorCode::SpecError);
  CHECK(code_of([] { parse_curve_specs("curve E a4=1 mobius=1,2,2,4\n"); }) == ErrorCode::SpecError);
  CHECK(code_of([] { parse_curve_specs("ellipse E\n"); }) == ErrorCode::SpecError);
  try {
    parse_curve_specs("curve E a4=1\n\ncurve F a6=1/0\n");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    CHECK(std::string(e.what()).find("a6") != std::string::npos);
  }
}

TEST_CASE("ternary form parser") {
  const auto f = parse_ternary_form("x^3 + z^3 - y^2*z");
  CHECK(f.coeff(3, 0, 0) == 1);
  CHECK(f.coeff(0, 2, 1) == -1);
  CHECK(parse_ternary_form("2/3*x*y*z - x^3").coeff(1, 1, 1) == rat(2, 3));
  CHECK(code_of([] { parse_ternary_form("x^2 + y^3"); }) == ErrorCode::SpecError);
  CHECK(code_of([] { parse_ternary_form("x^3 + w^3"); }) == ErrorCode::SpecError);
}

TEST_CASE("witt expressions") {
  CHECK(eval_witt_expression("add (1,0) (1,0)", 3).to_string() == "(2,1)");
  CHECK(eval_witt_expression("mul (0,1) (0,1)", 5).to_string() == "(0,0)");
  CHECK(eval_witt_expression("frob (2,1)", 3).to_string() == "(2,1)");
  CHECK(eval_witt_expression("sub teich 2 teich 2", 7).to_string() == "(0,0)");
  CHECK(eval_witt_expression("neg (1,0)", 5) + eval_witt_expression("(1,0)", 5) ==
        W2<ModInt>::zero(ModInt(0, 5), 5));
  CHECK(code_of([] { eval_witt_expression("add (1,0)", 3); }) == ErrorCode::SpecError);
  CHECK(code_of([] { eval_witt_expression("pow (1,0) (1,0)", 3); }) == ErrorCode::SpecError);
  CHECK(code_of([] { eval_witt_expression("(1,0)", 2); }) == ErrorCode::UnsupportedPrime);
}

TEST_CASE("report round trip") {
  RunReport r;
  r.command = "demo";
  r.moduli = fixed_moduli_version();
  r.wall_clock_ms = 17;
  r.input("p", "5");
  r.input("odd", "line\nbreak = and \\ backslash");
  r.result("count", "2");
  r.result("empty", "");
  CHECK(RunReport::parse(r.serialize()) == r);
  CHECK(r.find("count") == std::optional<std::string>("2"));
  CHECK_FALSE(r.find("missing").has_value());
  CHECK(code_of([] { RunReport::parse("garbage"); }) == ErrorCode::SpecError);

  const auto specs = corpus();
  const std::vector<RunReport> reports{
      cmd_classify(specs, 5),
      cmd_common_torsion(corpus_entry(specs, "A"), corpus_entry(specs, "B"), 2, {}),
      cmd_bound(corpus_entry(specs, "S1"), corpus_entry(specs, "S2"), 5, 7),
      cmd_frob_lift(corpus_entry(specs, "S1"), 7),
      cmd_frob_lift_cubic("y^2*z - x^3 - z^3", 7),
      cmd_canonical_lift("y^2*z - x^3 - x*z^2 - z^3", 5),
      cmd_witt(3, "add (1,0) (1,0)"),
      cmd_find_primes(corpus_entry(specs, "A"), corpus_entry(specs, "B"), 5, 30)};
  for (const auto& rep : reports) {
    CHECK(RunReport::parse(rep.serialize()) == rep);
    CHECK_FALSE(rep.summary().empty());
  }
}

TEST_CASE("command results") {
  const auto specs = corpus();
  const auto cls = cmd_classify(specs, 5);
  CHECK(cls.find("A.reduction") == std::optional<std::string>("GoodOrdinary"));
  CHECK(cls.find("S1.reduction") == std::optional<std::string>("GoodSupersingular"));
  const auto demo = parse_curve_specs("curve E1 a4=-1\ncurve E2 a4=-4\n");
  const auto ct = cmd_common_torsion(demo[0], demo[1], 2, {});
  CHECK(ct.find("count") == std::optional<std::string>("2"));
  const auto bd = cmd_bound(corpus_entry(specs, "S1"), corpus_entry(specs, "S2"), 5, 7);
  CHECK(bd.find("bound") == std::optional<std::string>("58"));
  CHECK(bd.find("summary")->find("2p^2+8") != std::string::npos);
  CHECK(bd.find("total").has_value());
  const auto fl = cmd_frob_lift(corpus_entry(specs, "S1"), 7);
  CHECK(fl.find("verdict") == std::optional<std::string>("SplitsModP2"));
  CHECK(code_of([&] { cmd_frob_lift(corpus_entry(specs, "S1"), 5); }) == ErrorCode::NotOrdinary);
  CHECK(code_of([] { cmd_frob_lift_cubic("x^3", 7); }) == ErrorCode::SingularReduction);
  CHECK(cmd_witt(3, "add (1,0) (1,0)").find("value") == std::optional<std::string>("(2,1)"));
  const auto inad = cmd_bound(corpus_entry(specs, "A"), corpus_entry(specs, "B"), 7, std::nullopt);
  CHECK(inad.find("bound") == std::optional<std::string>("none"));
}

TEST_CASE("exit code contract") {
  CHECK(exit_code_for(ErrorCode::SpecError) == 2);
  CHECK(exit_code_for(ErrorCode::SoundnessAlarm) == 3);
  CHECK(exit_code_for(ErrorCode::PreconditionViolated) == 4);
  CHECK(exit_code_for(ErrorCode::NotOrdinary) == 4);
}

TEST_CASE("CLI process exit codes") {
  const std::string spec = corpus_path();
  CHECK(run_cli("classify --spec " + spec + " --p 5") == 0);
  CHECK(run_cli("common-torsion --spec " + spec + " --pair A,B --N 2") == 0);
  CHECK(run_cli("bound --spec " + spec + " --pair S1,S2 --p 5 --q 7") == 0);
  CHECK(run_cli("bound --spec " + spec + " --pair A,B --p 7") == 0);
  CHECK(run_cli("witt --p 3 \"add (1,0) (1,0)\"") == 0);
  CHECK(run_cli("frob-lift --spec " + spec + " --curve S1 --p 7") == 0);

  const auto bad = std::filesystem::temp_directory_path() / "tpb_bad_spec.txt";
  write_atomically(bad.string(), "curve E a4=1/0\n");
  CHECK(run_cli("classify --spec " + bad.string() + " --p 5") == 2);
  std::filesystem::remove(bad);
  CHECK(run_cli("classify --spec " + spec) == 2);
  CHECK(run_cli("no-such-command") == 2);

  CHECK(run_cli("common-torsion --spec " + spec + " --pair A,B --N 2 --inject-fault 1") == 3);

  CHECK(run_cli("frob-lift --spec " + spec + " --curve S1 --p 5") == 4);
  CHECK(run_cli("frob-lift --cubic \"x^3\" --p 7") == 4);
  CHECK(run_cli("common-torsion --spec " + spec + " --pair A,A --N 2") == 4);
}

TEST_CASE("reports are written atomically") {
  const auto dir = std::filesystem::temp_directory_path() / "tpb_cli_test";
  std::filesystem::create_directories(dir);
  const auto out = dir / "report.txt";
  CHECK(run_cli("--format structured --output " + out.string() + " witt --p 3 \"add (1,0) (1,0)\"") == 0);
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  const auto rep = RunReport::parse(ss.str());
  CHECK(rep.command == "witt");
  CHECK(rep.find("value") == std::optional<std::string>("(2,1)"));
  std::size_t files = 0;
  for ([[maybe_unused]] const auto& e : std::filesystem::directory_iterator(dir)) ++files;
  CHECK(files == 1);
  std::filesystem::remove_all(dir);
}
