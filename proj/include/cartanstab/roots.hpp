#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cartanstab/ratlin.hpp"

namespace cartanstab::roots {

enum class Family { SL, SP, SO_ODD, SO_EVEN, G2 };

/// One of the split classical algebras sl(n,R), sp(n,R), o(2n+1,R), o(2n,R)
/// or the split g2. `rank` is the coordinate length n of the e-basis of m*
/// (fixed to 2 for G2); the Lie rank dim(m) is n-1 for SL and n otherwise.
struct AlgebraKind {
  Family family = Family::SL;
  int rank = 0;

  static AlgebraKind sl(int n);
  static AlgebraKind sp(int n);
  static AlgebraKind so_odd(int n);
  static AlgebraKind so_even(int n);
  static AlgebraKind g2();
  /// Parses CLI names "sl", "sp", "so-odd", "so-even", "g2".
  static AlgebraKind from_name(const std::string& name, int rank);
  static Family family_from_name(const std::string& name);

  int coord_len() const { return family == Family::G2 ? 2 : rank; }
  int dim_m() const;
  std::string name() const;
  std::string display() const;  // e.g. "sp(3)"

  bool operator==(const AlgebraKind& o) const {
    return family == o.family && rank == o.rank;
  }
  bool operator!=(const AlgebraKind& o) const { return !(*this == o); }
};

/// Root in e-coordinates. For SL the coordinates sum to zero; for G2 the two
/// coordinates refer to the basis of short roots (1,0), (0,1) whose invariant
/// pairing is Q((a,b),(c,d)) = ac + bd - (ad+bc)/2.
using RootVector = std::vector<int>;

/// Weyl group element: a signed permutation acting by w(e_i) = signs[i] *
/// e_{images[i]} (0-based internally), or an exact 2x2 integer matrix for G2
/// (the G2 Weyl group preserves the root lattice in the chosen basis).
struct WeylElement {
  AlgebraKind kind;
  std::vector<int> images;
  std::vector<int> signs;
  std::array<int64_t, 4> mat{0, 0, 0, 0};  // row-major, G2 only

  bool is_g2() const { return kind.family == Family::G2; }
  bool is_identity() const;

  bool operator==(const WeylElement& o) const;
  bool operator!=(const WeylElement& o) const { return !(*this == o); }
  /// Canonical order: (images, signs) lexicographic; matrix entries for G2.
  bool operator<(const WeylElement& o) const;

  std::string str() const;
};

WeylElement weyl_identity(AlgebraKind kind);
/// Transposition (i j), 0-based, signs all +1.
WeylElement weyl_transposition(AlgebraKind kind, int i, int j);
/// Sign flip on the listed coordinates (0-based), identity permutation.
WeylElement weyl_sign_flip(AlgebraKind kind, const std::vector<int>& flipped);
WeylElement weyl_flip_all(AlgebraKind kind);

/// Positive roots (first nonzero coordinate positive), sorted ascending
/// lexicographically. Deterministic.
std::vector<RootVector> positive_roots(AlgebraKind kind);

/// Membership test for the full root system R(m).
bool is_root(AlgebraKind kind, const RootVector& v);

RootVector apply(const WeylElement& w, const RootVector& v);
std::vector<ratlin::Rational> apply_rational(const WeylElement& w,
                                             const std::vector<ratlin::Rational>& v);

/// (compose(w1,w2))(v) = w1(w2(v)).
WeylElement compose(const WeylElement& w1, const WeylElement& w2);
WeylElement inverse(const WeylElement& w);

/// |W|: n! (SL), 2^n n! (SP, SO_ODD), 2^(n-1) n! (SO_EVEN), 12 (G2).
uint64_t weyl_order(AlgebraKind kind);

/// Full enumeration allowed only for |W| <= this bound.
inline constexpr uint64_t kWeylEnumerationLimit = 11'000'000;

/// Throws GuardError when weyl_order(kind) exceeds the enumeration limit.
void check_weyl_guard(AlgebraKind kind);

/// Streams every Weyl group element exactly once, in the canonical order
/// (lexicographic on (images, signs); sorted matrices for G2).
class WeylEnumerator {
 public:
  explicit WeylEnumerator(AlgebraKind kind);
  /// Fills `out` with the next element; false when exhausted.
  bool next(WeylElement& out);
  uint64_t order() const { return order_; }

 private:
  AlgebraKind kind_;
  uint64_t order_ = 0;
  bool done_ = false;
  bool first_ = true;
  std::vector<int> perm_;
  uint64_t mask_ = 0;
  uint64_t mask_count_ = 0;
  std::vector<WeylElement> g2_elements_;
  size_t g2_pos_ = 0;

  bool advance();
  void fill(WeylElement& out) const;
};

/// Materializes the whole group; intended for small ranks and tests.
std::vector<WeylElement> all_weyl(AlgebraKind kind);

/// Small generating set (simple-reflection style) used for orbit closures.
std::vector<WeylElement> weyl_generators(AlgebraKind kind);

/// The twelve G2 Weyl elements as sorted integer matrices.
const std::vector<WeylElement>& g2_weyl_group();

/// G2-invariant pairing Q on coordinate vectors.
ratlin::Rational g2_form(const std::vector<ratlin::Rational>& a,
                         const std::vector<ratlin::Rational>& b);
ratlin::Rational g2_form_int(const RootVector& a, const RootVector& b);

/// Human-readable root, e.g. "e1-e2", "2e1"; coordinate pair for G2.
std::string root_to_string(AlgebraKind kind, const RootVector& v);

}  // namespace cartanstab::roots
