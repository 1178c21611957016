#include "tpb/cli_reports.hpp"

#include <cctype>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace tpb {

namespace {

using Clock = std::chrono::steady_clock;

long elapsed_ms(Clock::time_point start) {
  return static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count());
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

[[noreturn]] void spec_error(int line, const std::string& what) {
  fail(ErrorCode::SpecError, "line " + std::to_string(line) + ": " + what);
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '\\') out += "\\\\";
    else if (c == '\n') out += "\\n";
    else out += c;
  }
  return out;
}

std::string unescape(const std::string& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '\\' && i + 1 < s.size()) {
      ++i;
      out += s[i] == 'n' ? '\n' : s[i];
    } else {
      out += s[i];
    }
  }
  return out;
}

std::string poly_text(const QPoly& f) { return to_string(f); }

std::string form_digest(const std::vector<Cubic>& forms) {
  std::uint64_t h = 1469598103934665603ULL;
  for (const auto& f : forms)
    for (const auto& c : f.coeffs()) {
      h ^= static_cast<std::uint64_t>(c.value()) + 0x9e3779b97f4a7c15ULL;
      h *= 1099511628211ULL;
    }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

RunReport start(std::string command) {
  RunReport r;
  r.command = std::move(command);
  r.moduli = fixed_moduli_version();
  return r;
}

}  // namespace

std::vector<CurveSpec> parse_curve_specs(const std::string& text) {
  std::vector<CurveSpec> out;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string body = trim(raw.substr(0, raw.find('#')));
    if (body.empty()) continue;
    std::istringstream words(body);
    std::string kw, label;
    words >> kw >> label;
    if (kw != "curve") spec_error(line, "expected 'curve', found '" + kw + "'");
    if (label.empty() || label.find('=') != std::string::npos) spec_error(line, "missing curve label");
    std::array<Rational, 5> a{};
    Mobius m;
    std::string field;
    while (words >> field) {
      const auto eq = field.find('=');
      if (eq == std::string::npos) spec_error(line, "field '" + field + "' is not key=value");
      const std::string key = field.substr(0, eq), value = field.substr(eq + 1);
      static const std::array<std::string, 5> names{"a1", "a2", "a3", "a4", "a6"};
      bool matched = false;
      for (std::size_t i = 0; i < names.size(); ++i) {
        if (key != names[i]) continue;
        try {
          a[i] = parse_rational(value);
        } catch (const Error& e) {
          spec_error(line, "field " + key + ": " + e.what());
        }
        matched = true;
      }
      if (matched) continue;
      if (key != "mobius") spec_error(line, "unknown field '" + key + "'");
      std::array<Rational, 4> mv;
      std::istringstream parts(value);
      std::string part;
      std::size_t k = 0;
      while (std::getline(parts, part, ',')) {
        if (k == 4) spec_error(line, "field mobius: expected four integers");
        try {
          mv[k] = parse_rational(part);
        } catch (const Error& e) {
          spec_error(line, "field mobius: " + std::string(e.what()));
        }
        if (mv[k].get_den() != 1) spec_error(line, "field mobius: entries must be integers");
        ++k;
      }
      if (k != 4) spec_error(line, "field mobius: expected four integers");
      try {
        m = Mobius(mv[0], mv[1], mv[2], mv[3]);
      } catch (const Error&) {
        spec_error(line, "field mobius: determinant is zero");
      }
    }
    WeierstrassCurve e{a[0], a[1], a[2], a[3], a[4]};
    try {
      require_nonsingular(e);
    } catch (const Error&) {
      spec_error(line, "curve '" + label + "' is singular");
    }
    for (const auto& s : out)
      if (s.label == label) spec_error(line, "duplicate label '" + label + "'");
    out.push_back({label, e, m, line});
  }
  return out;
}

std::string format_curve_spec(const CurveSpec& spec) {
  const auto& e = spec.curve;
  return "curve " + spec.label + " a1=" + to_string(e.a1) + " a2=" + to_string(e.a2) + " a3=" + to_string(e.a3) +
         " a4=" + to_string(e.a4) + " a6=" + to_string(e.a6) + " mobius=" + spec.twist.to_string();
}

TernaryForm<Rational> parse_ternary_form(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) fail(ErrorCode::SpecError, "empty form");
  struct Term {
    Rational c;
    Monomial m;
  };
  std::vector<Term> terms;
  std::size_t i = 0;
  while (i < s.size()) {
    Rational sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      if (s[i] == '-') sign = -1;
      ++i;
    } else if (!terms.empty()) {
      fail(ErrorCode::SpecError, "expected '+' or '-' at position " + std::to_string(i));
    }
    Term t{sign, {0, 0, 0}};
    bool any = false;
    while (i < s.size() && s[i] != '+' && s[i] != '-') {
      if (s[i] == '*') {
        ++i;
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(s[i]))) {
        std::size_t j = i;
        while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '/')) ++j;
        t.c *= parse_rational(s.substr(i, j - i));
        i = j;
      } else if (s[i] == 'x' || s[i] == 'y' || s[i] == 'z') {
        const int var = s[i] - 'x';
        ++i;
        int e = 1;
        if (i < s.size() && s[i] == '^') {
          std::size_t j = ++i;
          while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
          if (j == i) fail(ErrorCode::SpecError, "missing exponent at position " + std::to_string(i));
          e = std::stoi(s.substr(i, j - i));
          i = j;
        }
        t.m[static_cast<std::size_t>(var)] += e;
      } else {
        fail(ErrorCode::SpecError, std::string("unexpected character '") + s[i] + "'");
      }
      any = true;
    }
    if (!any) fail(ErrorCode::SpecError, "empty term");
    terms.push_back(t);
  }
  const int d = terms.front().m[0] + terms.front().m[1] + terms.front().m[2];
  TernaryForm<Rational> f(d, Rational(0));
  for (const auto& t : terms) {
    if (t.m[0] + t.m[1] + t.m[2] != d) fail(ErrorCode::SpecError, "form is not homogeneous");
    f.add_coeff(t.m, t.c);
  }
  return f;
}

W2<ModInt> eval_witt_expression(const std::string& text, std::int64_t p) {
  require_prime(p);
  if (p < 3) fail(ErrorCode::UnsupportedPrime, "Witt expressions need p >= 3");
  std::vector<std::string> tokens;
  for (std::size_t i = 0; i < text.size();) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '(' || c == ')' || c == ',') {
      tokens.emplace_back(1, c);
      ++i;
    } else {
      std::size_t j = i;
      while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])) && text[j] != '(' && text[j] != ')' &&
             text[j] != ',')
        ++j;
      tokens.push_back(text.substr(i, j - i));
      i = j;
    }
  }
  std::size_t pos = 0;
  auto next = [&]() -> std::string {
    if (pos >= tokens.size()) fail(ErrorCode::SpecError, "unexpected end of Witt expression");
    return tokens[pos++];
  };
  auto scalar = [&](const std::string& tok) {
    try {
      return ModInt(reduce_mod(parse_rational(tok), p), p);
    } catch (const Error&) {
      fail(ErrorCode::SpecError, "bad Witt component '" + tok + "'");
    }
  };
  auto expect = [&](const char* want) {
    if (next() != want) fail(ErrorCode::SpecError, std::string("expected '") + want + "' in Witt expression");
  };
  std::function<W2<ModInt>()> expr = [&]() -> W2<ModInt> {
    const std::string tok = next();
    if (tok == "(") {
      const ModInt a0 = scalar(next());
      expect(",");
      const ModInt a1 = scalar(next());
      expect(")");
      return W2<ModInt>(a0, a1, p);
    }
    if (tok == "add") return expr() + expr();
    if (tok == "sub") return expr() - expr();
    if (tok == "mul") return expr() * expr();
    if (tok == "neg") return -expr();
    if (tok == "frob") return expr().frobenius();
    if (tok == "teich") return W2<ModInt>::teichmuller(scalar(next()), p);
    fail(ErrorCode::SpecError, "unknown Witt operation '" + tok + "'");
  };
  const W2<ModInt> out = expr();
  if (pos != tokens.size()) fail(ErrorCode::SpecError, "trailing tokens in Witt expression");
  return out;
}

std::optional<std::string> RunReport::find(const std::string& key) const {
  for (const auto& [k, v] : results)
    if (k == key) return v;
  return std::nullopt;
}

std::string RunReport::serialize() const {
  std::string out = "report v1\ncommand=" + escape(command) + "\nmoduli=" + escape(moduli) +
                    "\nwall_clock_ms=" + std::to_string(wall_clock_ms) + "\n";
  for (const auto& [k, v] : inputs) out += "input." + k + "=" + escape(v) + "\n";
  for (const auto& [k, v] : results) out += "result." + k + "=" + escape(v) + "\n";
  return out + "end\n";
}

RunReport RunReport::parse(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "report v1") fail(ErrorCode::SpecError, "missing report header");
  RunReport r;
  bool ended = false;
  int n = 1;
  while (std::getline(in, line)) {
    ++n;
    if (line == "end") {
      ended = true;
      break;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) spec_error(n, "report line is not key=value");
    const std::string key = line.substr(0, eq), value = unescape(line.substr(eq + 1));
    if (key == "command") r.command = value;
    else if (key == "moduli") r.moduli = value;
    else if (key == "wall_clock_ms") r.wall_clock_ms = std::stol(value);
    else if (key.rfind("input.", 0) == 0) r.inputs.emplace_back(key.substr(6), value);
    else if (key.rfind("result.", 0) == 0) r.results.emplace_back(key.substr(7), value);
    else spec_error(n, "unknown report key '" + key + "'");
  }
  if (!ended) fail(ErrorCode::SpecError, "report is missing its end marker");
  return r;
}

std::string RunReport::summary() const {
  std::string out = command + " (" + std::to_string(wall_clock_ms) + " ms)\n";
  for (const auto& [k, v] : inputs) out += "  " + k + ": " + v + "\n";
  for (const auto& [k, v] : results) out += "  " + k + " = " + v + "\n";
  return out;
}

std::string fixed_moduli_version() {
  return "gf=lex-least-irreducible/1;filter-prime=2147483629;monomials=graded-lex(x,y,z)";
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::SpecError:
    case ErrorCode::InvalidArgument:
    case ErrorCode::InvalidPrime:
      return 2;
    case ErrorCode::SoundnessAlarm:
    case ErrorCode::Internal:
      return 3;
    default:
      return 4;
  }
}

RunReport cmd_classify(const std::vector<CurveSpec>& specs, std::int64_t p) {
  const auto t0 = Clock::now();
  RunReport r = start("classify");
  r.input("p", std::to_string(p));
  for (const auto& s : specs) r.input("curve." + s.label, format_curve_spec(s));
  for (const auto& s : specs) {
    const ReductionType rt = reduction_type(s.curve, p);
    const auto inv = invariants(s.curve);
    r.result(s.label + ".reduction", to_string(rt.tag));
    r.result(s.label + ".v_disc", rt.v_disc.to_string());
    r.result(s.label + ".v_c4", rt.v_c4.to_string());
    r.result(s.label + ".v_j", rt.v_j.to_string());
    r.result(s.label + ".j", inv.j ? to_string(*inv.j) : "undefined");
  }
  r.wall_clock_ms = elapsed_ms(t0);
  return r;
}

RunReport cmd_common_torsion(const CurveSpec& s1, const CurveSpec& s2, int max_order,
                             const std::vector<std::int64_t>& aux_primes, long fault_offset) {
  const auto t0 = Clock::now();
  RunReport r = start("common-torsion");
  r.input("curve1", format_curve_spec(s1));
  r.input("curve2", format_curve_spec(s2));
  r.input("N", std::to_string(max_order));
  const auto p1 = s1.projection(), p2 = s2.projection();
  TorsionReport rep;
  try {
    rep = common_projective_torsion(p1, p2, max_order);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::BranchLociCoincide)
      fail(ErrorCode::BranchLociCoincide,
           e.message() + "; the projections then differ by an automorphism of P^1 fixing the branch points, "
                                   "so they share infinitely many torsion images and no finite count exists");
    throw;
  }
  const long count = rep.count + fault_offset;
  r.result("count", std::to_string(count));
  r.result("pair_count", std::to_string(rep.pair_count));
  r.result("infinity_common", rep.infinity_is_common ? "true" : "false");
  for (std::size_t i = 0; i < rep.factors.size(); ++i) {
    const auto& f = rep.factors[i];
    r.result("factor." + std::to_string(i), poly_text(f.factor) + "; degree=" + std::to_string(f.degree()) +
                                                "; multiplicity=" + std::to_string(f.multiplicity) + "; orders=" +
                                                std::to_string(f.order1) + "," + std::to_string(f.order2));
  }
  if (rep.infinity_is_common)
    r.result("infinity.orders", std::to_string(rep.infinity_order1) + "," + std::to_string(rep.infinity_order2));
  std::vector<std::int64_t> primes = aux_primes;
  if (primes.empty())
    for (std::int64_t l = std::max(5, max_order + 1); primes.size() < 2 && l < 500; ++l)
      if (is_prime(l) && auxiliary_prime_admissible(p1, p2, max_order, l).admissible) primes.push_back(l);
  bool mismatch = false;
  for (const auto l : primes) {
    const auto check = auxiliary_prime_admissible(p1, p2, max_order, l);
    if (!check.admissible) {
      r.result("oracle." + std::to_string(l), "inadmissible: " + check.reason);
      continue;
    }
    const long oc = ff_oracle_common(p1, p2, max_order, l);
    r.result("oracle." + std::to_string(l), std::to_string(oc));
    if (oc != count) mismatch = true;
  }
  if (mismatch) r.result("alarm", "oracle count differs from the exact count");
  r.wall_clock_ms = elapsed_ms(t0);
  return r;
}

RunReport cmd_bound(const CurveSpec& s1, const CurveSpec& s2, std::int64_t p, std::optional<std::int64_t> q,
                    const WOverride& overrides) {
  const auto t0 = Clock::now();
  RunReport r = start("bound");
  r.input("curve1", format_curve_spec(s1));
  r.input("curve2", format_curve_spec(s2));
  r.input("p", std::to_string(p));
  if (q) r.input("q", std::to_string(*q));
  for (std::size_t i = 0; i < 2; ++i)
    if (overrides.w[i]) r.input("w_override." + std::to_string(i + 1), std::to_string(*overrides.w[i]));
  const BoundCertificate c = certify(s1.projection(), s2.projection(), p, q, overrides);
  static const std::map<BoundTheorem, std::string> shapes{{BoundTheorem::Coarse, "2p^3+8"},
                                                          {BoundTheorem::SupersingularRefinement, "2p^2+8"},
                                                          {BoundTheorem::SplitOne, "2p^2+8"},
                                                          {BoundTheorem::SplitBoth, "2p+8"},
                                                          {BoundTheorem::Mixed, "2p^3+2"}};
  r.result("theorem", to_string(c.theorem));
  r.result("bound", c.bound ? to_string(*c.bound) : "none");
  r.result("summary", c.bound ? to_string(c.theorem) + ": " + shapes.at(c.theorem) + " = " + to_string(*c.bound) +
                                    (c.counts_pairs ? " pairs" : " points")
                              : "no bound certified");
  r.result("counts_pairs", c.counts_pairs ? "true" : "false");
  r.result("conditional", c.conditional ? "true" : "false");
  for (std::size_t i = 0; i < 2; ++i) {
    r.result("reduction." + c.labels[i], c.reduction[i]);
    if (c.splitting[i]) r.result("splitting." + c.labels[i], to_string(*c.splitting[i]));
    if (c.w[i]) r.result("w." + c.labels[i], std::to_string(*c.w[i]) + " (" + c.w_provenance[i] + ")");
  }
  for (std::size_t i = 0; i < c.checklist.size(); ++i) {
    const auto& item = c.checklist[i];
    r.result("check." + std::to_string(i), std::string(item.passed ? "pass" : "fail") + " " + item.name +
                                               (item.detail.empty() ? "" : ": " + item.detail));
  }
  if (c.total) {
    r.result("r", std::to_string(*c.r));
    r.result("total", to_string(*c.total));
    r.result("total_summary", "total <= 8*p^(4r+3) = 8*" + std::to_string(p) + "^" + std::to_string(4 * *c.r + 3));
  }
  for (std::size_t i = 0; i < c.notes.size(); ++i) r.result("note." + std::to_string(i), c.notes[i]);
  r.result("replay", c.replay() ? "ok" : "mismatch");
  if (!c.replay()) r.result("alarm", "certificate replay mismatch");
  r.wall_clock_ms = elapsed_ms(t0);
  return r;
}

namespace {

void lift_results(RunReport& r, const LiftProblem& pr, const LiftSolution& sol) {
  r.result("unknowns", std::to_string(sol.unknowns));
  r.result("equations", std::to_string(sol.equations));
  r.result("rank", std::to_string(sol.rank));
  r.result("kernel_dimension", std::to_string(sol.kernel_dimension));
  r.result("solvable", sol.solvable ? "true" : "false");
  if (sol.solvable) {
    const bool ok = verify_lift_witness(pr, sol);
    r.result("witness_digest", form_digest({(*sol.f_prime)[0], (*sol.f_prime)[1], (*sol.f_prime)[2], *sol.c}));
    r.result("witness_verified", ok ? "true" : "false");
    if (!ok) r.result("alarm", "Frobenius lift witness failed re-expansion");
  }
}

}  // namespace

RunReport cmd_frob_lift(const CurveSpec& spec, std::int64_t p) {
  const auto t0 = Clock::now();
  RunReport r = start("frob-lift");
  r.input("curve", format_curve_spec(spec));
  r.input("p", std::to_string(p));
  const ReductionType rt = reduction_type(spec.curve, p);
  if (rt.tag == ReductionTag::GoodSupersingular)
    fail(ErrorCode::NotOrdinary, spec.label + " is supersingular at " + std::to_string(p));
  const SplittingVerdict v = splitting_verdict(spec.curve, p);
  r.result("verdict", to_string(v.tag));
  r.result("w_lower_bound", std::to_string(v.w_lower_bound()));
  lift_results(r, assemble_defect(weierstrass_cubic(rt.minimal), p), *v.witness);
  r.wall_clock_ms = elapsed_ms(t0);
  return r;
}

RunReport cmd_frob_lift_cubic(const std::string& cubic, std::int64_t p) {
  const auto t0 = Clock::now();
  RunReport r = start("frob-lift");
  r.input("cubic", cubic);
  r.input("p", std::to_string(p));
  const auto e = parse_ternary_form(cubic);
  if (e.degree() != 3) fail(ErrorCode::SpecError, "expected a cubic form");
  const LiftProblem pr = assemble_defect(e, p);
  if (cubic_hasse_invariant(pr.e_bar).is_zero()) fail(ErrorCode::NotOrdinary, "cubic is supersingular mod " + std::to_string(p));
  const LiftSolution sol = frobenius_lift_test(pr);
  r.result("verdict", to_string(sol.solvable ? SplittingTag::SplitsModP2 : SplittingTag::NonSplitModP2));
  lift_results(r, pr, sol);
  r.wall_clock_ms = elapsed_ms(t0);
  return r;
}

RunReport cmd_canonical_lift(const std::string& cubic, std::int64_t p) {
  const auto t0 = Clock::now();
  RunReport r = start("canonical-lift");
  r.input("cubic", cubic);
  r.input("p", std::to_string(p));
  const auto e = parse_ternary_form(cubic);
  if (e.degree() != 3) fail(ErrorCode::SpecError, "expected a cubic form");
  require_prime(p);
  const auto space = canonical_lift_space(reduce_ternary(e, p), p);
  r.result("nonempty", space.nonempty ? "true" : "false");
  if (space.nonempty) {
    r.result("e1_particular", space.e1_particular->to_string());
    r.result("e1_dimension", std::to_string(space.e1_dimension));
    r.result("given_lift_canonical", space.contains(Cubic(3, ModInt(0, p))) ? "true" : "false");
  }
  r.wall_clock_ms = elapsed_ms(t0);
  return r;
}

RunReport cmd_witt(std::int64_t p, const std::string& expression) {
  const auto t0 = Clock::now();
  RunReport r = start("witt");
  r.input("p", std::to_string(p));
  r.input("expression", expression);
  r.result("value", eval_witt_expression(expression, p).to_string());
  r.wall_clock_ms = elapsed_ms(t0);
  return r;
}

RunReport cmd_find_primes(const CurveSpec& s1, const CurveSpec& s2, std::int64_t lo, std::int64_t hi) {
  const auto t0 = Clock::now();
  RunReport r = start("find-primes");
  r.input("curve1", format_curve_spec(s1));
  r.input("curve2", format_curve_spec(s2));
  r.input("range", std::to_string(lo) + ".." + std::to_string(hi));
  const auto list = find_admissible_primes(s1.projection(), s2.projection(), lo, hi, true);
  long admissible = 0;
  for (const auto& a : list) {
    r.result("p." + std::to_string(a.p), to_string(a.tag) + " (" + a.detail + ")");
    if (a.tag != ScenarioTag::Inadmissible) ++admissible;
  }
  r.result("admissible_count", std::to_string(admissible));
  r.wall_clock_ms = elapsed_ms(t0);
  return r;
}

void write_atomically(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) fail(ErrorCode::InvalidArgument, "cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) fail(ErrorCode::InvalidArgument, "short write to " + tmp.string());
  }
  fs::rename(tmp, target);
}

}  // namespace tpb
