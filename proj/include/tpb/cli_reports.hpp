#pragma once

#include "tpb/bound_engine.hpp"
#include "tpb/torsion_search.hpp"
#include "tpb/witt2.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tpb {

/// One entry of a curve spec file:
///   curve <label> a1=<q> a2=<q> a3=<q> a4=<q> a6=<q> [mobius=<a>,<b>,<c>,<d>]
/// Omitted coefficients are 0, rationals are written n or n/d, '#' starts a comment.
struct CurveSpec {
  std::string label;
  WeierstrassCurve curve;
  Mobius twist;
  int line = 0;
  StandardProjection projection() const { return StandardProjection::from_curve(curve, twist, label); }
};

std::vector<CurveSpec> parse_curve_specs(const std::string& text);
std::string format_curve_spec(const CurveSpec& spec);

/// Plane cubic such as "x^3 + z^3 - y^2*z" or "2/3*x*y*z - x^3".
TernaryForm<Rational> parse_ternary_form(const std::string& text);

/// Prefix expressions over W_2(F_p): "(a0,a1)", "add E E", "sub E E", "mul E E",
/// "neg E", "frob E", "teich a".
W2<ModInt> eval_witt_expression(const std::string& text, std::int64_t p);

/// Line-oriented key=value report; values are single-line strings.
struct RunReport {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<std::pair<std::string, std::string>> results;
  std::string moduli;
  long wall_clock_ms = 0;

  void input(std::string key, std::string value) { inputs.emplace_back(std::move(key), std::move(value)); }
  void result(std::string key, std::string value) { results.emplace_back(std::move(key), std::move(value)); }
  std::optional<std::string> find(const std::string& key) const;

  std::string serialize() const;
  static RunReport parse(const std::string& text);
  /// Human-readable rendering.
  std::string summary() const;
  friend bool operator==(const RunReport&, const RunReport&) = default;
};

/// Versions of the fixed moduli that determine every reported value.
std::string fixed_moduli_version();

/// Stable process exit status for a library error.
int exit_code_for(ErrorCode code);

RunReport cmd_classify(const std::vector<CurveSpec>& specs, std::int64_t p);
/// A fault offset perturbs the reported count so the oracle cross-check can be exercised.
RunReport cmd_common_torsion(const CurveSpec& s1, const CurveSpec& s2, int max_order,
                             const std::vector<std::int64_t>& aux_primes, long fault_offset = 0);
RunReport cmd_bound(const CurveSpec& s1, const CurveSpec& s2, std::int64_t p, std::optional<std::int64_t> q,
                    const WOverride& overrides = {});
RunReport cmd_frob_lift(const CurveSpec& spec, std::int64_t p);
RunReport cmd_frob_lift_cubic(const std::string& cubic, std::int64_t p);
RunReport cmd_canonical_lift(const std::string& cubic, std::int64_t p);
RunReport cmd_witt(std::int64_t p, const std::string& expression);
RunReport cmd_find_primes(const CurveSpec& s1, const CurveSpec& s2, std::int64_t lo, std::int64_t hi);

/// Writes through a temporary file in the same directory and renames it into place.
void write_atomically(const std::string& path, const std::string& content);

}  // namespace tpb
