#pragma once

#include "tpb/canonical_frobenius.hpp"
#include "tpb/projection.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace tpb {

BigInt coarse_bound(std::int64_t p);
BigInt supersingular_bound(std::int64_t p);
/// splits = number of curves whose connected-etale sequence splits mod p^2 (1 or 2).
BigInt split_bound(std::int64_t p, int splits);
/// Counts pairs of torsion points with a common image.
BigInt mixed_bound(std::int64_t p);
BigInt intersection_degree_bound(long d, long e, std::int64_t p);

enum class OrbitTag { OrdinaryNonSplit, OrdinarySplitLevel, Supersingular, CanonicalMu };
std::string to_string(OrbitTag tag);

struct OrbitModel {
  OrbitTag tag;
  std::int64_t p;
  int w = 1;  // Serre-Tate level; unused for Supersingular and CanonicalMu
  std::string to_string() const;
};

/// Size of the inertia orbit of a point of exact order p^s. When the p-torsion
/// splits at level s the orbit is 1 on the etale section and `generic` elsewhere.
struct OrbitSize {
  BigInt generic;
  bool split = false;
  BigInt on_etale_section() const { return split ? BigInt(1) : generic; }
};
OrbitSize orbit_size(const OrbitModel& model, int s);

/// Minimal r such that every point of order > p^r has orbit size > n_threshold.
/// The canonical case uses the mu-part formulas unless `decomposition` is false.
int largeness_r(std::int64_t p, const BigInt& n_threshold, const OrbitModel& model, bool decomposition = true);
int largeness_r(std::int64_t p, const BigInt& n_threshold, const std::vector<OrbitModel>& models,
                bool decomposition = true);

struct TotalBound {
  int r;
  BigInt threshold;  // 8 q^3
  BigInt bound;      // 8 p^(4r+3)
};
TotalBound total_bound(std::int64_t p, std::int64_t q, const std::vector<OrbitModel>& models);

enum class ScenarioTag { GoodGoodDisjoint, GoodGood, Mixed, Inadmissible };
std::string to_string(ScenarioTag tag);

struct AdmissiblePrime {
  std::int64_t p;
  ScenarioTag tag;
  std::string detail;
};
std::vector<AdmissiblePrime> find_admissible_primes(const StandardProjection& p1, const StandardProjection& p2,
                                                    std::int64_t lo, std::int64_t hi, bool include_inadmissible = false);

enum class BoundTheorem { None, Coarse, SupersingularRefinement, SplitOne, SplitBoth, Mixed };
std::string to_string(BoundTheorem tag);

struct ChecklistItem {
  std::string name;
  bool passed;
  std::string detail;
};

/// w values per curve; 0 asserts the canonical lift.
struct WOverride {
  std::array<std::optional<int>, 2> w;
};

struct BoundCertificate {
  std::array<std::string, 2> labels;
  std::int64_t p = 0;
  std::optional<std::int64_t> q;
  std::array<std::string, 2> reduction;  // ReductionTag names, or the classification failure
  std::vector<ChecklistItem> checklist;
  std::array<std::optional<SplittingTag>, 2> splitting;
  std::array<std::optional<int>, 2> w;
  std::array<std::string, 2> w_provenance;
  BoundTheorem theorem = BoundTheorem::None;
  std::optional<BigInt> bound;
  bool counts_pairs = false;
  bool conditional = false;
  std::optional<int> r;
  std::optional<BigInt> total;
  std::vector<std::string> notes;

  bool has_bound() const { return bound.has_value(); }
  /// Recomputes the numbers from (theorem, p, q, r) and compares with the stored values.
  bool replay() const;
};

BoundCertificate certify(const StandardProjection& p1, const StandardProjection& p2, std::int64_t p,
                         std::optional<std::int64_t> q = std::nullopt, const WOverride& overrides = {});

}  // namespace tpb
