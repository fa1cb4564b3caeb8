#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cartanstab/admissible.hpp"
#include "cartanstab/ratlin.hpp"
#include "cartanstab/roots.hpp"
#include "cartanstab/stabilizer.hpp"

namespace cartanstab::liealg {

using admissible::AdmissibleSystem;
using ratlin::MatrixQ;
using ratlin::Rational;
using ratlin::SubspaceBasis;
using roots::AlgebraKind;
using roots::RootVector;
using roots::WeylElement;

inline constexpr int kDefiningDimLimit = 24;

/// Exact matrix model of a split classical algebra: the canonical kernel
/// basis of the defining linear condition (trace zero for sl; X^t J + J X = 0
/// otherwise) plus the diagonal Cartan subalgebra m.
struct MatrixLieAlgebra {
  AlgebraKind kind;
  int defining_dim = 0;                    // d: n, 2n, 2n+1, 2n
  std::optional<MatrixQ> form;             // J; absent for sl
  std::vector<MatrixQ> basis;              // spans g, canonical order
  std::vector<int> basis_pivots;           // pivot (flattened) per basis row
  std::vector<MatrixQ> m_basis;            // diagonal Cartan basis
  std::vector<std::vector<Rational>> m_coords;  // e-coordinate h-vector per m element
  SubspaceBasis m_h_space;                 // h-vectors of m inside Q^n

  int dim() const { return static_cast<int>(basis.size()); }

  /// Diagonal m element with the given e-coordinates (must lie in m's
  /// h-space; sum zero for sl).
  MatrixQ m_element(const std::vector<Rational>& h) const;

  /// Coordinates of x in the canonical basis; throws InvariantError when x
  /// does not lie in the span.
  std::vector<Rational> coords(const MatrixQ& x) const;

  /// True iff x satisfies the defining condition (equivalently, x lies in g).
  bool satisfies_defining_condition(const MatrixQ& x) const;
};

/// Builds the matrix model, verifies the classical dimension count and
/// bracket closure. Throws std::invalid_argument for g2 and GuardError when
/// the defining dimension exceeds the limit.
MatrixLieAlgebra realize(AlgebraKind kind);

/// A nonzero x_alpha with [H, x_alpha] = alpha(H) x_alpha for every H in m,
/// found by an exact simultaneous-eigenspace solve, normalized so the first
/// nonzero entry (row-major) is 1. Throws InvariantError unless the root
/// space is one-dimensional.
MatrixQ root_space(const MatrixLieAlgebra& g, const RootVector& alpha);

/// Cartan subalgebra h = e + n attached to an admissible system: n is the
/// orthocomplement of span(F) inside m and e is spanned by
/// U_alpha = x_alpha - x_alpha^t (so sigma(U_alpha) = U_alpha).
struct CartanSubalgebraQ {
  AlgebraKind kind;
  std::vector<MatrixQ> h_basis;         // toroidal part first, then vector part
  std::vector<MatrixQ> toroidal_basis;  // skew-symmetric, inside k
  std::vector<MatrixQ> vector_basis;    // diagonal, inside m
  int source_class = 0;

  int dim() const { return static_cast<int>(h_basis.size()); }
  int toroidal_dim() const { return static_cast<int>(toroidal_basis.size()); }
};

/// Verifies every invariant before returning: abelian (with the violating
/// bracket reported on failure), dim = rank, self-normalizing, sigma-stable.
CartanSubalgebraQ build_cartan(const MatrixLieAlgebra& g, const AdmissibleSystem& f);

/// Normalizer {x in g : [x, h] in span(h)} as a subspace of g-coordinates.
SubspaceBasis normalizer_of(const MatrixLieAlgebra& g, const std::vector<MatrixQ>& h_basis);

/// True iff span(h_basis) is abelian and equals its own normalizer in g.
bool is_cartan(const MatrixLieAlgebra& g, const std::vector<MatrixQ>& h_basis);

/// Element of the maximal compact group used to realize Weyl elements:
/// orthogonal, form-preserving (det 1 for sl).
struct KElement {
  AlgebraKind kind;
  MatrixQ matrix;
};

/// Monomial lift (entries 0, +-1) of a Weyl element, with sign choices that
/// repair the determinant/form: adjacent sl transpositions come out as the
/// rotation block [[0,1],[-1,0]] and the sp global flip as [[0,I],[-I,0]].
/// Every output is checked: orthogonal, form-preserving, and inducing w.
KElement lift_weyl(const MatrixLieAlgebra& g, const WeylElement& w);

/// The signed permutation by which conjugation with k acts on m, verified on
/// the whole m-basis. Throws std::invalid_argument when k does not
/// normalize m.
WeylElement induced_weyl(const MatrixLieAlgebra& g, const KElement& k);

/// True iff conjugation by k maps each listed Cartan subalgebra onto itself
/// (exact span equality of g-coordinates).
bool verify_fixes(const MatrixLieAlgebra& g, const KElement& k,
                  const std::vector<CartanSubalgebraQ>& cartans);

/// tr(XY); on each algebra in scope this is a positive multiple of the
/// Killing form, so it may stand in for B throughout.
Rational trace_form(const MatrixLieAlgebra& g, const MatrixQ& x, const MatrixQ& y);

/// ad(x) as a dim x dim matrix over the canonical basis (test oracle for the
/// Killing-form proportionality check).
MatrixQ ad_matrix(const MatrixLieAlgebra& g, const MatrixQ& x);

/// End-to-end run backing the CLI `verify` command: builds a Cartan per
/// class from the representative family, lifts every stabilizer element, and
/// checks that each lift fixes all class Cartans; the first non-stabilizer
/// Weyl element (when one exists) is lifted as a negative control and must
/// fail.
struct CartanCheck {
  int class_id = 0;
  int dim = 0;
  int toroidal_dim = 0;
  bool cartan_ok = false;
};

struct KCheck {
  WeylElement w;
  MatrixQ k;
  bool round_trip_ok = false;  // induced_weyl(lift_weyl(w)) == w
  bool fixes_all = false;
};

struct VerificationRun {
  AlgebraKind kind;
  stabilizer::StabilizerReport stab;
  std::vector<CartanCheck> cartans;
  std::vector<KCheck> k_elements;
  std::optional<KCheck> negative;  // expected fixes_all == false
  bool all_ok = false;
};

VerificationRun run_verification(AlgebraKind kind);

}  // namespace cartanstab::liealg
