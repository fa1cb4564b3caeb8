#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cartanstab/ratlin.hpp"
#include "cartanstab/roots.hpp"

namespace cartanstab::admissible {

using roots::AlgebraKind;
using roots::RootVector;
using roots::WeylElement;

/// Set of pairwise strongly orthogonal positive roots: for all members,
/// sums, differences and doubles are not roots. Carries the span l of the
/// coordinate vectors (the coroot directions).
struct AdmissibleSystem {
  AlgebraKind kind;
  std::vector<RootVector> roots;  // sorted ascending, positive, distinct
  ratlin::SubspaceBasis span;

  std::string str() const;
};

/// Validates + canonicalizes (sorts roots, computes the span, checks that
/// the roots are linearly independent). Throws std::invalid_argument if the
/// set is not admissible.
AdmissibleSystem make_system(AlgebraKind kind, std::vector<RootVector> roots);

/// True iff the set satisfies the strong-orthogonality condition:
/// ai + aj and ai - aj are never roots (i = j included for the sum, i.e.
/// 2ai not a root) and ai != +-aj for i != j. Entries must be roots.
bool is_admissible(AlgebraKind kind, const std::vector<RootVector>& roots);

/// Every admissible set of positive roots exactly once, by backtracking over
/// the sorted positive-root list; the empty system comes first and root
/// lists appear in lexicographic order.
std::vector<AdmissibleSystem> enumerate_admissible(AlgebraKind kind);

/// Span of the w-images of the members.
ratlin::SubspaceBasis transformed_span(const WeylElement& w, const AdmissibleSystem& f);

/// Fixing in the span sense: span(w F) equals span(F) exactly.
bool fixes(const WeylElement& w, const AdmissibleSystem& f);

struct CartanClass {
  int id = 0;  // 1-based, report order
  AdmissibleSystem representative;
  uint64_t orbit_size_spans = 0;
  int vector_part_dim = 0;  // dim(m) - |roots|
};

/// Orbit partition of the admissible spans under the Weyl action, one
/// canonical representative per orbit. The class count equals the number of
/// conjugacy classes of Cartan subalgebras.
struct ClassReport {
  AlgebraKind kind;
  std::vector<CartanClass> classes;
  /// Every admissible span, mapped to the id of its class.
  std::map<ratlin::SubspaceBasis, int> span_to_class;

  int class_of_span(const ratlin::SubspaceBasis& span) const;
};

ClassReport classify(AlgebraKind kind);

/// The catalogued explicit representative family for the kind/rank:
///   SL:      F_k = {e1-e2, e3-e4, ..., e(2k-1)-e(2k)}, k <= floor(n/2)
///   SP:      F(k,l) = {2e1..2ek} + consecutive difference pairs, k+2l <= n
///   SO_ODD:  F(k,l) and F(k,l)' (extra short root), offset difference pairs
///   SO_EVEN: F(k,l), plus for even n the one class the F(k,l) miss
///            (taken from classify's canonical representative).
/// Every member is admissible and the family meets every class exactly once.
/// G2 has no catalogued family (classify representatives are used instead);
/// requesting it throws std::invalid_argument.
std::vector<AdmissibleSystem> representative_family(AlgebraKind kind);

/// Class ids hit by the family members, in family order. Throws
/// InvariantError unless the family meets every class exactly once.
std::vector<int> family_class_ids(const ClassReport& report,
                                  const std::vector<AdmissibleSystem>& family);

}  // namespace cartanstab::admissible
