#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <initializer_list>
#include <string>
#include <vector>

namespace cartanstab::ratlin {

/// Exact rational scalar. Backed by Boost.Multiprecision, which keeps values
/// in lowest terms with a positive denominator; arithmetic never rounds.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Renders "p/q", with "/q" omitted when q == 1 (e.g. "3", "-1/2").
std::string to_string(const Rational& value);

/// Parses the format produced by to_string. Throws std::invalid_argument on
/// malformed input.
Rational rational_from_string(const std::string& text);

/// Dense matrix over exact rationals.
class MatrixQ {
 public:
  MatrixQ() = default;
  MatrixQ(int rows, int cols);
  MatrixQ(std::initializer_list<std::initializer_list<Rational>> rows);

  static MatrixQ identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int r, int c) { return entries_[static_cast<size_t>(r) * cols_ + c]; }
  const Rational& at(int r, int c) const {
    return entries_[static_cast<size_t>(r) * cols_ + c];
  }

  const std::vector<Rational>& entries() const { return entries_; }

  MatrixQ transpose() const;
  MatrixQ operator*(const MatrixQ& other) const;
  MatrixQ operator+(const MatrixQ& other) const;
  MatrixQ operator-(const MatrixQ& other) const;
  MatrixQ operator-() const;
  MatrixQ scaled(const Rational& factor) const;

  /// [A, B] = AB - BA.
  MatrixQ bracket(const MatrixQ& other) const;

  /// Inverse via Gauss-Jordan; throws InvariantError when singular.
  MatrixQ inverse() const;

  Rational trace() const;
  bool is_zero() const;
  bool is_diagonal() const;

  std::vector<Rational> flatten() const { return entries_; }
  std::vector<Rational> row(int r) const;

  bool operator==(const MatrixQ& other) const;
  bool operator!=(const MatrixQ& other) const { return !(*this == other); }

  std::string str() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> entries_;
};

/// Unique reduced row echelon form of m; row space preserved, zero rows kept
/// at the bottom so the shape does not change.
MatrixQ rref(const MatrixQ& m);

/// Canonical subspace of Q^ambient: the stored matrix is the RREF basis with
/// zero rows dropped. Two values represent the same subspace iff their
/// matrices are entry-wise identical.
class SubspaceBasis {
 public:
  SubspaceBasis() = default;

  static SubspaceBasis zero(int ambient_dim);
  static SubspaceBasis full(int ambient_dim);
  /// Canonicalizes arbitrary generating rows (rref + drop zero rows).
  static SubspaceBasis from_generators(const std::vector<std::vector<Rational>>& rows,
                                       int ambient_dim);

  int ambient_dim() const { return ambient_dim_; }
  int dim() const { return basis_.rows(); }
  const MatrixQ& basis() const { return basis_; }
  std::vector<Rational> basis_row(int r) const { return basis_.row(r); }

  bool contains(const std::vector<Rational>& vec) const;
  bool contains(const SubspaceBasis& other) const;

  /// Eliminates the pivot components of vec against the basis; the result is
  /// zero exactly when vec lies in the subspace, and the map is linear in vec.
  std::vector<Rational> residual(const std::vector<Rational>& vec) const;

  bool operator==(const SubspaceBasis& other) const;
  bool operator!=(const SubspaceBasis& other) const { return !(*this == other); }
  /// Total order: (ambient_dim, dim, entries lexicographic). Used for maps
  /// and for picking canonical orbit representatives.
  bool operator<(const SubspaceBasis& other) const;

  std::string str() const;

 private:
  int ambient_dim_ = 0;
  MatrixQ basis_;  // RREF, no zero rows
  std::vector<int> pivots_;
};

/// Canonical basis of the rational span of the given vectors.
/// Throws std::invalid_argument on a length mismatch.
SubspaceBasis span(const std::vector<std::vector<Rational>>& vectors, int ambient_dim);

/// Integer-vector convenience overload.
SubspaceBasis span_int(const std::vector<std::vector<int>>& vectors, int ambient_dim);

/// Canonical basis of the right null space {v : m v = 0}.
SubspaceBasis kernel(const MatrixQ& m);

/// {x in ambient : x . s = 0 for all s in S}, with the coordinate dot
/// product. Throws std::invalid_argument unless S is contained in ambient.
SubspaceBasis orthocomplement_within(const SubspaceBasis& s, const SubspaceBasis& ambient);

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b);

}  // namespace cartanstab::ratlin
