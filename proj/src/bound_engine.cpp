#include "tpb/bound_engine.hpp"

#include <algorithm>

namespace tpb {

namespace {

void require_bound_prime(std::int64_t p) {
  require_prime(p);
  if (p < 5) fail(ErrorCode::UnsupportedPrime, "bounds are stated for primes p >= 5");
}

BigInt pw(std::int64_t p, long e) { return ipow(p, static_cast<unsigned long>(e)); }

// Smallest s >= 1 with orbit(s) > n.
template <class F>
int first_exceeding(const BigInt& n, F&& orbit) {
  int s = 1;
  while (orbit(s) <= n) ++s;
  return s;
}

std::optional<BigInt> formula(BoundTheorem t, std::int64_t p) {
  switch (t) {
    case BoundTheorem::Coarse: return coarse_bound(p);
    case BoundTheorem::SupersingularRefinement: return supersingular_bound(p);
    case BoundTheorem::SplitOne: return split_bound(p, 1);
    case BoundTheorem::SplitBoth: return split_bound(p, 2);
    case BoundTheorem::Mixed: return mixed_bound(p);
    case BoundTheorem::None: return std::nullopt;
  }
  return std::nullopt;
}

bool is_good(ReductionTag t) { return t == ReductionTag::GoodOrdinary || t == ReductionTag::GoodSupersingular; }

}  // namespace

BigInt coarse_bound(std::int64_t p) {
  require_bound_prime(p);
  return 2 * pw(p, 3) + 8;
}

BigInt supersingular_bound(std::int64_t p) {
  require_bound_prime(p);
  return 2 * pw(p, 2) + 8;
}

BigInt split_bound(std::int64_t p, int splits) {
  require_bound_prime(p);
  if (splits == 1) return 2 * pw(p, 2) + 8;
  if (splits == 2) return 2 * pw(p, 1) + 8;
  fail(ErrorCode::InvalidArgument, "split count must be 1 or 2");
}

BigInt mixed_bound(std::int64_t p) {
  require_bound_prime(p);
  return 2 * pw(p, 3) + 2;
}

BigInt intersection_degree_bound(long d, long e, std::int64_t p) {
  require_prime(p);
  if (d < 1 || e < 1) fail(ErrorCode::InvalidArgument, "bidegree entries must be positive");
  return BigInt(d + e) * pw(p, 2);
}

std::string to_string(OrbitTag tag) {
  switch (tag) {
    case OrbitTag::OrdinaryNonSplit: return "OrdinaryNonSplit";
    case OrbitTag::OrdinarySplitLevel: return "OrdinarySplitLevel";
    case OrbitTag::Supersingular: return "Supersingular";
    case OrbitTag::CanonicalMu: return "CanonicalMu";
  }
  return "?";
}

std::string OrbitModel::to_string() const {
  const std::string t = tpb::to_string(tag);
  if (tag == OrbitTag::OrdinaryNonSplit || tag == OrbitTag::OrdinarySplitLevel) return t + "(" + std::to_string(w) + ")";
  return t;
}

OrbitSize orbit_size(const OrbitModel& model, int s) {
  if (s < 1) fail(ErrorCode::InvalidArgument, "order exponent must be positive");
  require_prime(model.p);
  const std::int64_t p = model.p;
  OrbitSize out;
  switch (model.tag) {
    case OrbitTag::Supersingular:
      out.generic = pw(p, 2L * s) - pw(p, 2L * s - 2);
      return out;
    case OrbitTag::OrdinaryNonSplit:
      out.split = s < model.w;
      break;
    case OrbitTag::OrdinarySplitLevel:
      out.split = s <= model.w;
      break;
    case OrbitTag::CanonicalMu:
      out.split = true;
      break;
  }
  out.generic = pw(p, s) - pw(p, s - 1);
  return out;
}

int largeness_r(std::int64_t p, const BigInt& n_threshold, const OrbitModel& model, bool decomposition) {
  require_prime(p);
  if (n_threshold < 0) fail(ErrorCode::InvalidArgument, "orbit threshold must be nonnegative");
  switch (model.tag) {
    case OrbitTag::Supersingular:
      return first_exceeding(n_threshold, [p](int s) -> BigInt { return pw(p, 2L * s) - pw(p, 2L * s - 2); }) - 1;
    case OrbitTag::CanonicalMu:
      if (!decomposition) fail(ErrorCode::NotLarge, "canonical lift: the etale part has trivial inertia action");
      return first_exceeding(n_threshold, [p](int s) -> BigInt { return pw(p, s) - pw(p, s - 1); }) - 1;
    case OrbitTag::OrdinaryNonSplit:
    case OrbitTag::OrdinarySplitLevel:
      if (model.w < 1) fail(ErrorCode::InvalidArgument, "Serre-Tate level must be >= 1");
      return std::max(model.w, first_exceeding(n_threshold, [p](int s) -> BigInt { return pw(p, s) - pw(p, s - 1); }) - 1);
  }
  fail(ErrorCode::Internal, "unknown orbit model");
}

int largeness_r(std::int64_t p, const BigInt& n_threshold, const std::vector<OrbitModel>& models, bool decomposition) {
  if (models.empty()) fail(ErrorCode::InvalidArgument, "no orbit models");
  int r = 0;
  for (const auto& m : models) r = std::max(r, largeness_r(p, n_threshold, m, decomposition));
  return r;
}

TotalBound total_bound(std::int64_t p, std::int64_t q, const std::vector<OrbitModel>& models) {
  require_prime(p);
  require_prime(q);
  if (q < 5) fail(ErrorCode::UnsupportedPrime, "the second prime must be >= 5");
  if (q == p) fail(ErrorCode::InvalidArgument, "the second prime must differ from p");
  TotalBound out;
  out.threshold = 8 * pw(q, 3);
  out.r = largeness_r(p, out.threshold, models);
  out.bound = 8 * pw(p, 4L * out.r + 3);
  return out;
}

std::string to_string(ScenarioTag tag) {
  switch (tag) {
    case ScenarioTag::GoodGoodDisjoint: return "GoodGood+Disjoint";
    case ScenarioTag::GoodGood: return "GoodGood";
    case ScenarioTag::Mixed: return "Mixed";
    case ScenarioTag::Inadmissible: return "Inadmissible";
  }
  return "?";
}

std::vector<AdmissiblePrime> find_admissible_primes(const StandardProjection& p1, const StandardProjection& p2,
                                                    std::int64_t lo, std::int64_t hi, bool include_inadmissible) {
  std::vector<AdmissiblePrime> out;
  for (std::int64_t p = std::max<std::int64_t>(lo, 5); p <= hi; ++p) {
    if (!is_prime(p)) continue;
    AdmissiblePrime entry{p, ScenarioTag::Inadmissible, {}};
    try {
      const auto t1 = reduction_type(p1.curve(), p).tag, t2 = reduction_type(p2.curve(), p).tag;
      entry.detail = to_string(t1) + "/" + to_string(t2);
      if (is_good(t1) && is_good(t2)) {
        entry.tag = check_assumption_simplest(p1, p2, p).pass ? ScenarioTag::GoodGoodDisjoint : ScenarioTag::GoodGood;
      } else if ((t1 == ReductionTag::Multiplicative && is_good(t2)) ||
                 (t2 == ReductionTag::Multiplicative && is_good(t1))) {
        if (check_assumption_mixed(p1, p2, p).pass) entry.tag = ScenarioTag::Mixed;
      }
    } catch (const Error& e) {
      entry.detail = e.what();
    }
    if (include_inadmissible || entry.tag != ScenarioTag::Inadmissible) out.push_back(std::move(entry));
  }
  return out;
}

std::string to_string(BoundTheorem tag) {
  switch (tag) {
    case BoundTheorem::None: return "None";
    case BoundTheorem::Coarse: return "Coarse";
    case BoundTheorem::SupersingularRefinement: return "SupersingularRefinement";
    case BoundTheorem::SplitOne: return "SplitOne";
    case BoundTheorem::SplitBoth: return "SplitBoth";
    case BoundTheorem::Mixed: return "Mixed";
  }
  return "?";
}

bool BoundCertificate::replay() const {
  if (theorem == BoundTheorem::None) {
    if (bound) return false;
  } else {
    if (!bound || p < 5 || !is_prime(p)) return false;
    if (formula(theorem, p) != bound) return false;
  }
  if (total.has_value() != r.has_value()) return false;
  if (total) return q.has_value() && *total == 8 * pw(p, 4L * *r + 3);
  return true;
}

BoundCertificate certify(const StandardProjection& p1, const StandardProjection& p2, std::int64_t p,
                         std::optional<std::int64_t> q, const WOverride& overrides) {
  BoundCertificate cert;
  cert.labels = {p1.label, p2.label};
  cert.p = p;
  cert.q = q;
  auto check = [&cert](std::string name, bool passed, std::string detail = {}) {
    cert.checklist.push_back({std::move(name), passed, std::move(detail)});
    return passed;
  };
  if (!check("p is a prime >= 5", p >= 5 && is_prime(p), std::to_string(p))) {
    cert.notes.push_back("no theorem applies: p must be a prime >= 5");
    return cert;
  }
  const std::array<const StandardProjection*, 2> ps{&p1, &p2};
  std::array<std::optional<ReductionTag>, 2> tags;
  for (std::size_t i = 0; i < 2; ++i) {
    try {
      const ReductionType rt = reduction_type(ps[i]->curve(), p);
      tags[i] = rt.tag;
      cert.reduction[i] = to_string(rt.tag);
      check("reduction " + ps[i]->label, true, cert.reduction[i] + " v(disc)=" + rt.v_disc.to_string());
    } catch (const Error& e) {
      cert.reduction[i] = "error";
      check("reduction " + ps[i]->label, false, e.what());
    }
  }

  auto models_for_total = [&]() -> std::optional<std::vector<OrbitModel>> {
    std::vector<OrbitModel> models;
    for (std::size_t i = 0; i < 2; ++i) {
      if (tags[i] == ReductionTag::GoodSupersingular) {
        models.push_back({OrbitTag::Supersingular, p, 1});
      } else if (tags[i] == ReductionTag::GoodOrdinary && cert.w[i]) {
        if (*cert.w[i] == 0) {
          models.push_back({OrbitTag::CanonicalMu, p, 0});
          cert.notes.push_back(ps[i]->label + ": canonical lift handled through the mu-part orbit formulas; the etale part "
                                              "is trivial and p-divisible (engine's reading)");
        } else {
          models.push_back({OrbitTag::OrdinaryNonSplit, p, *cert.w[i]});
        }
      } else {
        cert.notes.push_back("total bound not certified: no orbit model for " + ps[i]->label +
                             (tags[i] == ReductionTag::GoodOrdinary ? " (w >= 2 but not determined; supply --w-override)" : ""));
        return std::nullopt;
      }
    }
    return models;
  };

  const bool good1 = tags[0] && is_good(*tags[0]), good2 = tags[1] && is_good(*tags[1]);
  if (good1 && good2) {
    const auto simplest = check_assumption_simplest(p1, p2, p);
    check("twists invertible mod p", simplest.twists_invertible);
    check("branch loci disjoint mod p", simplest.valuation == Valuation(0),
                                "v_p(Res) = " + simplest.valuation.to_string());
    if (!simplest.pass) {
      cert.notes.push_back("no theorem applies: the branch loci or twists degenerate mod p");
    } else if (*tags[0] == ReductionTag::GoodSupersingular && *tags[1] == ReductionTag::GoodSupersingular) {
      cert.theorem = BoundTheorem::SupersingularRefinement;
    } else if (*tags[0] == ReductionTag::GoodOrdinary && *tags[1] == ReductionTag::GoodOrdinary) {
      int splits = 0;
      for (std::size_t i = 0; i < 2; ++i) {
        std::optional<SplittingTag> verdict;
        if (p <= kMaxSplittingPrime) {
          try {
            verdict = splitting_verdict(ps[i]->curve(), p).tag;
          } catch (const Error& e) {
            check("splitting verdict " + ps[i]->label, false, e.what());
          }
        } else {
          cert.notes.push_back("splitting verdict for " + ps[i]->label + " not computed above p = " +
                               std::to_string(kMaxSplittingPrime));
        }
        cert.splitting[i] = verdict;
        if (verdict) {
          check("splitting verdict " + ps[i]->label, true, to_string(*verdict));
          if (*verdict == SplittingTag::NonSplitModP2) {
            cert.w[i] = 1;
            cert.w_provenance[i] = "certified by the mod p^2 splitting verdict";
          }
        }
        if (const auto ov = overrides.w[i]) {
          const bool consistent = *ov >= 0 && (!verdict || (*verdict == SplittingTag::NonSplitModP2 ? *ov == 1 : *ov != 1));
          if (check("w override " + ps[i]->label, consistent, std::to_string(*ov))) {
            cert.w[i] = *ov;
            cert.w_provenance[i] = "externally asserted";
          }
        }
        const bool split = verdict ? *verdict == SplittingTag::SplitsModP2
                                   : (cert.w[i] && *cert.w[i] != 1 && cert.w_provenance[i] == "externally asserted");
        if (split) ++splits;
      }
      cert.theorem = splits == 2 ? BoundTheorem::SplitBoth : splits == 1 ? BoundTheorem::SplitOne : BoundTheorem::Coarse;
    } else {
      cert.theorem = BoundTheorem::Coarse;
      cert.notes.push_back("one ordinary and one supersingular curve: only the coarse bound applies");
    }
  } else if ((good1 && tags[1] == ReductionTag::Multiplicative) || (good2 && tags[0] == ReductionTag::Multiplicative)) {
    const auto mixed = check_assumption_mixed(p1, p2, p);
    check("generic branch loci distinct", mixed.generic_branch_distinct);
    check("special branch loci disjoint", mixed.special_branch_disjoint,
          std::to_string(mixed.common_branch_points_special) + " common points");
    check("node images separated", mixed.nodes_separated);
    check("twists invertible mod p", mixed.twists_invertible);
    if (!mixed.pass) {
      cert.notes.push_back("HypothesesNotVerified: mixed-reduction checklist failed");
    } else {
      cert.theorem = BoundTheorem::Mixed;
      cert.counts_pairs = true;
      cert.notes.push_back("the mixed bound counts pairs (t1, t2) of torsion points with equal image, not image points");
      const std::size_t mult = tags[0] == ReductionTag::Multiplicative ? 0 : 1;
      const auto tate = tate_parameter_valuation(ps[mult]->curve(), p);
      const bool ordinary_partner = tags[1 - mult] == ReductionTag::GoodOrdinary;
      check("Tate parameter v(q) = p", tate.pth_power_necessary, "v(q) = " + std::to_string(tate.v_q));
      check("good partner ordinary", ordinary_partner);
      if (tate.pth_power_necessary && ordinary_partner) {
        cert.notes.push_back("specialization finiteness discharged by the p-th power Tate parameter route with an "
                             "ordinary partner (valuation-level necessary condition only; the unit part is not tested)");
      } else {
        cert.conditional = true;
        cert.notes.push_back("conditional on finiteness of the specialization image");
      }
    }
  } else {
    cert.notes.push_back("no theorem applies: unsupported reduction pair");
  }
  cert.bound = formula(cert.theorem, p);

  if (q) {
    bool q_ok = *q >= 5 && *q != p && is_prime(*q);
    std::string detail = std::to_string(*q);
    if (q_ok) {
      try {
        q_ok = check_assumption_simplest(p1, p2, *q).pass;
      } catch (const Error& e) {
        q_ok = false;
        detail += ": " + std::string(e.what());
      }
    }
    if (check("second prime q admissible", q_ok, detail) && good1 && good2) {
      if (const auto models = models_for_total()) {
        const TotalBound tb = total_bound(p, *q, *models);
        cert.r = tb.r;
        cert.total = tb.bound;
        std::string desc;
        for (const auto& m : *models) desc += (desc.empty() ? "" : ", ") + m.to_string();
        cert.notes.push_back("largeness r = " + std::to_string(tb.r) + " from orbit models " + desc +
                             " (product orbit taken as the max of the factors)");
      }
    } else if (q_ok) {
      cert.notes.push_back("total bound needs good reduction of both curves at p");
    }
  }
  return cert;
}

}  // namespace tpb
