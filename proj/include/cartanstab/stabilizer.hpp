#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cartanstab/admissible.hpp"
#include "cartanstab/roots.hpp"

namespace cartanstab::stabilizer {

using admissible::AdmissibleSystem;
using roots::AlgebraKind;
using roots::WeylElement;

/// The subgroup {w in W : span(wF) = span(F) for every family member F},
/// with elements sorted canonically and the subgroup property verified.
struct StabilizerReport {
  AlgebraKind kind;
  std::vector<AdmissibleSystem> family;
  std::vector<int> family_class_ids;  // may be empty if no classify ran
  std::vector<WeylElement> elements;
  uint64_t order = 0;
  std::vector<WeylElement> generators_hint;

  bool contains(const WeylElement& w) const;
};

/// Linear scan of the Weyl group with early exit per element; parallel over
/// element chunks when the thread budget allows, result canonically sorted
/// either way. Throws GuardError above the enumeration limit and
/// std::invalid_argument on an empty family or a kind mismatch.
StabilizerReport family_stabilizer(AlgebraKind kind,
                                   const std::vector<AdmissibleSystem>& family);

/// Structured expected answer for the joint stabilizer of the catalogued
/// representative family.
struct StabilizerClaim {
  AlgebraKind kind;
  std::vector<WeylElement> nontrivial;  // claimed non-identity elements
  /// True when the catalog lists generators whose products are omitted, so
  /// a computed group equal to the closure counts as SUPERSET, not MISMATCH.
  bool closure_completes_claim = false;
  std::string source;       // catalog tag, e.g. "catalog:sp"
  std::string description;  // human summary
};

/// Throws std::invalid_argument for kinds/ranks without a catalogued claim
/// (only so-even of rank 2 or 3).
StabilizerClaim expected_stabilizer(AlgebraKind kind);

enum class Verdict { MATCH, SUPERSET, MISMATCH };

std::string verdict_name(Verdict v);

struct StabilizerComparison {
  StabilizerReport computed;
  StabilizerClaim claimed;
  Verdict verdict = Verdict::MISMATCH;
  std::string detail;  // full diff when the verdict is not MATCH
};

/// Computes the stabilizer of the representative family (classify
/// representatives for g2) and compares the nontrivial elements against the
/// catalogued claim. Never passes silently: SUPERSET requires the computed
/// group to be exactly the closure of the claimed elements.
StabilizerComparison compare_with_expected(AlgebraKind kind);

/// Group closure of the given elements (identity always included).
std::vector<WeylElement> group_closure(AlgebraKind kind,
                                       const std::vector<WeylElement>& elements);

}  // namespace cartanstab::stabilizer
