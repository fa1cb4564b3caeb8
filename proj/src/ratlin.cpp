#include "cartanstab/ratlin.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "cartanstab/errors.hpp"

namespace cartanstab::ratlin {

std::string to_string(const Rational& value) {
  std::string num = numerator(value).str();
  if (denominator(value) == 1) return num;
  return num + "/" + denominator(value).str();
}

Rational rational_from_string(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::runtime_error& e) {
    throw std::invalid_argument("bad rational literal '" + text + "': " + e.what());
  }
}

MatrixQ::MatrixQ(int rows, int cols)
    : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows) * cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

MatrixQ::MatrixQ(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
  entries_.reserve(static_cast<size_t>(rows_) * cols_);
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols_)
      throw std::invalid_argument("ragged matrix initializer");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

MatrixQ MatrixQ::identity(int n) {
  MatrixQ m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

MatrixQ MatrixQ::transpose() const {
  MatrixQ t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

MatrixQ MatrixQ::operator*(const MatrixQ& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("matrix product shape mismatch");
  MatrixQ out(rows_, other.cols_);
  for (int r = 0; r < rows_; ++r) {
    for (int k = 0; k < cols_; ++k) {
      const Rational& a = at(r, k);
      if (a == 0) continue;
      for (int c = 0; c < other.cols_; ++c) {
        const Rational& b = other.at(k, c);
        if (b == 0) continue;
        out.at(r, c) += a * b;
      }
    }
  }
  return out;
}

MatrixQ MatrixQ::operator+(const MatrixQ& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("matrix sum shape mismatch");
  MatrixQ out(rows_, cols_);
  for (size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] + other.entries_[i];
  return out;
}

MatrixQ MatrixQ::operator-(const MatrixQ& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("matrix difference shape mismatch");
  MatrixQ out(rows_, cols_);
  for (size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] - other.entries_[i];
  return out;
}

MatrixQ MatrixQ::operator-() const {
  MatrixQ out(rows_, cols_);
  for (size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = -entries_[i];
  return out;
}

MatrixQ MatrixQ::scaled(const Rational& factor) const {
  MatrixQ out(rows_, cols_);
  for (size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] * factor;
  return out;
}

MatrixQ MatrixQ::bracket(const MatrixQ& other) const {
  return (*this) * other - other * (*this);
}

MatrixQ MatrixQ::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
  const int n = rows_;
  MatrixQ work = *this;
  MatrixQ inv = MatrixQ::identity(n);
  int lead = 0;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = lead; r < n; ++r) {
      if (work.at(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) throw InvariantError("singular matrix has no inverse");
    for (int c = 0; c < n; ++c) {
      std::swap(work.at(pivot, c), work.at(lead, c));
      std::swap(inv.at(pivot, c), inv.at(lead, c));
    }
    const Rational scale = Rational(1) / work.at(lead, col);
    for (int c = 0; c < n; ++c) {
      work.at(lead, c) *= scale;
      inv.at(lead, c) *= scale;
    }
    for (int r = 0; r < n; ++r) {
      if (r == lead || work.at(r, col) == 0) continue;
      const Rational factor = work.at(r, col);
      for (int c = 0; c < n; ++c) {
        work.at(r, c) -= factor * work.at(lead, c);
        inv.at(r, c) -= factor * inv.at(lead, c);
      }
    }
    ++lead;
  }
  return inv;
}

Rational MatrixQ::trace() const {
  Rational t = 0;
  for (int i = 0; i < std::min(rows_, cols_); ++i) t += at(i, i);
  return t;
}

bool MatrixQ::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Rational& x) { return x == 0; });
}

bool MatrixQ::is_diagonal() const {
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c)
      if (r != c && at(r, c) != 0) return false;
  return true;
}

std::vector<Rational> MatrixQ::row(int r) const {
  return std::vector<Rational>(entries_.begin() + static_cast<size_t>(r) * cols_,
                               entries_.begin() + static_cast<size_t>(r + 1) * cols_);
}

bool MatrixQ::operator==(const MatrixQ& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
}

std::string MatrixQ::str() const {
  std::ostringstream os;
  os << "[";
  for (int r = 0; r < rows_; ++r) {
    os << (r == 0 ? "[" : " [");
    for (int c = 0; c < cols_; ++c) os << (c == 0 ? "" : ", ") << to_string(at(r, c));
    os << "]";
    if (r + 1 < rows_) os << "\n";
  }
  os << "]";
  return os.str();
}

MatrixQ rref(const MatrixQ& m) {
  MatrixQ out = m;
  const int rows = out.rows();
  const int cols = out.cols();
  int lead = 0;
  for (int col = 0; col < cols && lead < rows; ++col) {
    int pivot = -1;
    for (int r = lead; r < rows; ++r) {
      if (out.at(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != lead)
      for (int c = 0; c < cols; ++c) std::swap(out.at(pivot, c), out.at(lead, c));
    const Rational scale = Rational(1) / out.at(lead, col);
    if (scale != 1)
      for (int c = col; c < cols; ++c) out.at(lead, c) *= scale;
    for (int r = 0; r < rows; ++r) {
      if (r == lead || out.at(r, col) == 0) continue;
      const Rational factor = out.at(r, col);
      for (int c = col; c < cols; ++c) out.at(r, c) -= factor * out.at(lead, c);
    }
    ++lead;
  }
  return out;
}

SubspaceBasis SubspaceBasis::zero(int ambient_dim) {
  SubspaceBasis s;
  s.ambient_dim_ = ambient_dim;
  s.basis_ = MatrixQ(0, ambient_dim);
  return s;
}

SubspaceBasis SubspaceBasis::full(int ambient_dim) {
  SubspaceBasis s;
  s.ambient_dim_ = ambient_dim;
  s.basis_ = MatrixQ::identity(ambient_dim);
  s.pivots_.resize(ambient_dim);
  for (int i = 0; i < ambient_dim; ++i) s.pivots_[i] = i;
  return s;
}

SubspaceBasis SubspaceBasis::from_generators(const std::vector<std::vector<Rational>>& rows,
                                             int ambient_dim) {
  for (const auto& r : rows)
    if (static_cast<int>(r.size()) != ambient_dim)
      throw std::invalid_argument("generator length does not match ambient dimension");
  MatrixQ m(static_cast<int>(rows.size()), ambient_dim);
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < ambient_dim; ++c) m.at(r, c) = rows[r][c];
  MatrixQ reduced = rref(m);

  SubspaceBasis s;
  s.ambient_dim_ = ambient_dim;
  std::vector<std::vector<Rational>> kept;
  for (int r = 0; r < reduced.rows(); ++r) {
    auto row = reduced.row(r);
    int pivot = -1;
    for (int c = 0; c < ambient_dim; ++c) {
      if (row[c] != 0) {
        pivot = c;
        break;
      }
    }
    if (pivot < 0) break;  // zero rows sit at the bottom of an RREF
    kept.push_back(std::move(row));
    s.pivots_.push_back(pivot);
  }
  s.basis_ = MatrixQ(static_cast<int>(kept.size()), ambient_dim);
  for (int r = 0; r < s.basis_.rows(); ++r)
    for (int c = 0; c < ambient_dim; ++c) s.basis_.at(r, c) = kept[r][c];
  return s;
}

std::vector<Rational> SubspaceBasis::residual(const std::vector<Rational>& vec) const {
  if (static_cast<int>(vec.size()) != ambient_dim_)
    throw std::invalid_argument("vector length does not match ambient dimension");
  std::vector<Rational> out = vec;
  for (int r = 0; r < basis_.rows(); ++r) {
    const Rational coeff = out[pivots_[r]];
    if (coeff == 0) continue;
    for (int c = pivots_[r]; c < ambient_dim_; ++c) out[c] -= coeff * basis_.at(r, c);
  }
  return out;
}

bool SubspaceBasis::contains(const std::vector<Rational>& vec) const {
  auto res = residual(vec);
  return std::all_of(res.begin(), res.end(), [](const Rational& x) { return x == 0; });
}

bool SubspaceBasis::contains(const SubspaceBasis& other) const {
  if (other.ambient_dim_ != ambient_dim_) return false;
  for (int r = 0; r < other.dim(); ++r)
    if (!contains(other.basis_row(r))) return false;
  return true;
}

bool SubspaceBasis::operator==(const SubspaceBasis& other) const {
  return ambient_dim_ == other.ambient_dim_ && basis_ == other.basis_;
}

bool SubspaceBasis::operator<(const SubspaceBasis& other) const {
  if (ambient_dim_ != other.ambient_dim_) return ambient_dim_ < other.ambient_dim_;
  if (dim() != other.dim()) return dim() < other.dim();
  const auto& a = basis_.entries();
  const auto& b = other.basis_.entries();
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

std::string SubspaceBasis::str() const { return basis_.str(); }

SubspaceBasis span(const std::vector<std::vector<Rational>>& vectors, int ambient_dim) {
  return SubspaceBasis::from_generators(vectors, ambient_dim);
}

SubspaceBasis span_int(const std::vector<std::vector<int>>& vectors, int ambient_dim) {
  std::vector<std::vector<Rational>> rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) rows.emplace_back(v.begin(), v.end());
  return SubspaceBasis::from_generators(rows, ambient_dim);
}

SubspaceBasis kernel(const MatrixQ& m) {
  const int cols = m.cols();
  MatrixQ reduced = rref(m);
  std::vector<int> pivot_col_of_row;
  std::vector<bool> is_pivot(cols, false);
  for (int r = 0; r < reduced.rows(); ++r) {
    int pivot = -1;
    for (int c = 0; c < cols; ++c) {
      if (reduced.at(r, c) != 0) {
        pivot = c;
        break;
      }
    }
    if (pivot < 0) break;
    pivot_col_of_row.push_back(pivot);
    is_pivot[pivot] = true;
  }
  std::vector<std::vector<Rational>> generators;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(cols);
    v[f] = 1;
    for (size_t r = 0; r < pivot_col_of_row.size(); ++r)
      v[pivot_col_of_row[r]] = -reduced.at(static_cast<int>(r), f);
    generators.push_back(std::move(v));
  }
  return SubspaceBasis::from_generators(generators, cols);
}

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot product length mismatch");
  Rational out = 0;
  for (size_t i = 0; i < a.size(); ++i) out += a[i] * b[i];
  return out;
}

SubspaceBasis orthocomplement_within(const SubspaceBasis& s, const SubspaceBasis& ambient) {
  if (s.ambient_dim() != ambient.ambient_dim())
    throw std::invalid_argument("orthocomplement: ambient dimensions differ");
  if (!ambient.contains(s))
    throw std::invalid_argument("orthocomplement: subspace not contained in ambient");

  // x = y . A with A the ambient basis; x . s_j = 0 becomes (A s^T)^T y = 0.
  const int da = ambient.dim();
  const int ds = s.dim();
  MatrixQ gram_t(ds, da);
  for (int j = 0; j < ds; ++j) {
    const auto sj = s.basis_row(j);
    for (int i = 0; i < da; ++i) gram_t.at(j, i) = dot(ambient.basis_row(i), sj);
  }
  SubspaceBasis ys = kernel(gram_t);
  std::vector<std::vector<Rational>> rows;
  for (int r = 0; r < ys.dim(); ++r) {
    const auto y = ys.basis_row(r);
    std::vector<Rational> x(ambient.ambient_dim());
    for (int i = 0; i < da; ++i) {
      if (y[i] == 0) continue;
      const auto ai = ambient.basis_row(i);
      for (int c = 0; c < ambient.ambient_dim(); ++c) x[c] += y[i] * ai[c];
    }
    rows.push_back(std::move(x));
  }
  SubspaceBasis out = SubspaceBasis::from_generators(rows, ambient.ambient_dim());
  if (out.dim() + s.dim() != ambient.dim())
    throw InvariantError("orthocomplement dimension mismatch");
  return out;
}

}  // namespace cartanstab::ratlin
