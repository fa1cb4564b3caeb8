#include "cartanstab/liealg.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "cartanstab/errors.hpp"

namespace cartanstab::liealg {

using roots::Family;

namespace {

int defining_dim_of(AlgebraKind kind) {
  switch (kind.family) {
    case Family::SL: return kind.rank;
    case Family::SP: return 2 * kind.rank;
    case Family::SO_ODD: return 2 * kind.rank + 1;
    case Family::SO_EVEN: return 2 * kind.rank;
    default:
      throw std::invalid_argument("no matrix model for g2");
  }
}

int expected_dim(AlgebraKind kind) {
  const int n = kind.rank;
  switch (kind.family) {
    case Family::SL: return n * n - 1;
    case Family::SP: return n * (2 * n + 1);
    case Family::SO_ODD: return n * (2 * n + 1);
    case Family::SO_EVEN: return n * (2 * n - 1);
    default: return 0;
  }
}

MatrixQ form_matrix(AlgebraKind kind, int d) {
  const int n = kind.rank;
  MatrixQ j(d, d);
  switch (kind.family) {
    case Family::SP:
      for (int i = 0; i < n; ++i) {
        j.at(i, n + i) = 1;
        j.at(n + i, i) = -1;
      }
      break;
    case Family::SO_ODD:
      for (int i = 0; i < n; ++i) {
        j.at(i, n + i) = 1;
        j.at(n + i, i) = 1;
      }
      j.at(2 * n, 2 * n) = -1;
      break;
    case Family::SO_EVEN:
      for (int i = 0; i < n; ++i) {
        j.at(i, n + i) = 1;
        j.at(n + i, i) = 1;
      }
      break;
    default:
      throw std::invalid_argument("no bilinear form for this kind");
  }
  return j;
}

size_t flat(int d, int r, int c) { return static_cast<size_t>(r) * d + c; }

MatrixQ unflatten(const std::vector<Rational>& v, int d) {
  MatrixQ m(d, d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) m.at(r, c) = v[flat(d, r, c)];
  return m;
}

std::vector<Rational> flatten(const MatrixQ& m) { return m.flatten(); }

}  // namespace

MatrixQ MatrixLieAlgebra::m_element(const std::vector<Rational>& h) const {
  if (static_cast<int>(h.size()) != kind.coord_len())
    throw std::invalid_argument("m_element: coordinate length mismatch");
  if (!m_h_space.contains(h))
    throw std::invalid_argument("m_element: coordinates not in the h-space of m");
  const int d = defining_dim;
  MatrixQ out(d, d);
  const int n = kind.rank;
  if (kind.family == Family::SL) {
    for (int i = 0; i < n; ++i) out.at(i, i) = h[i];
  } else {
    for (int i = 0; i < n; ++i) {
      out.at(i, i) = h[i];
      out.at(n + i, n + i) = -h[i];
    }
  }
  return out;
}

std::vector<Rational> MatrixLieAlgebra::coords(const MatrixQ& x) const {
  const auto v = flatten(x);
  std::vector<Rational> c(basis.size());
  for (size_t k = 0; k < basis.size(); ++k) c[k] = v[basis_pivots[k]];
  // A canonical (RREF) basis lets the pivot entries serve as coordinates;
  // verify membership by reconstructing.
  std::vector<Rational> reconstructed(v.size());
  for (size_t k = 0; k < basis.size(); ++k) {
    if (c[k] == 0) continue;
    const auto& row = basis[k].entries();
    for (size_t i = 0; i < row.size(); ++i)
      if (row[i] != 0) reconstructed[i] += c[k] * row[i];
  }
  if (reconstructed != v)
    throw InvariantError("matrix does not lie in the algebra span");
  return c;
}

bool MatrixLieAlgebra::satisfies_defining_condition(const MatrixQ& x) const {
  if (kind.family == Family::SL) return x.trace() == 0;
  const MatrixQ& j = *form;
  return (x.transpose() * j + j * x).is_zero();
}

MatrixLieAlgebra realize(AlgebraKind kind) {
  if (kind.family == Family::G2)
    throw std::invalid_argument("g2 has no matrix model here; its checks are Weyl-level");
  const int d = defining_dim_of(kind);
  if (d > kDefiningDimLimit)
    throw GuardError(kind.display() + ": defining dimension " + std::to_string(d) +
                     " exceeds the matrix guard " + std::to_string(kDefiningDimLimit));

  MatrixLieAlgebra g;
  g.kind = kind;
  g.defining_dim = d;

  // Kernel of the defining linear condition on gl(d).
  SubspaceBasis solution;
  if (kind.family == Family::SL) {
    MatrixQ trace_row(1, d * d);
    for (int i = 0; i < d; ++i) trace_row.at(0, flat(d, i, i)) = 1;
    solution = ratlin::kernel(trace_row);
  } else {
    g.form = form_matrix(kind, d);
    const MatrixQ& j = *g.form;
    // (X^t J + J X)_{ab} = sum_k X_{ka} J_{kb} + J_{ak} X_{kb}.
    MatrixQ cond(d * d, d * d);
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) {
        const size_t row = flat(d, a, b);
        for (int k = 0; k < d; ++k) {
          if (j.at(k, b) != 0) cond.at(row, flat(d, k, a)) += j.at(k, b);
          if (j.at(a, k) != 0) cond.at(row, flat(d, k, b)) += j.at(a, k);
        }
      }
    solution = ratlin::kernel(cond);
  }
  if (solution.dim() != expected_dim(kind))
    throw InvariantError(kind.display() + ": realized dimension " +
                         std::to_string(solution.dim()) + " != expected " +
                         std::to_string(expected_dim(kind)));
  for (int r = 0; r < solution.dim(); ++r) {
    const auto row = solution.basis_row(r);
    g.basis.push_back(unflatten(row, d));
    int pivot = -1;
    for (size_t i = 0; i < row.size(); ++i)
      if (row[i] != 0) {
        pivot = static_cast<int>(i);
        break;
      }
    g.basis_pivots.push_back(pivot);
  }

  // Diagonal Cartan m and its h-vectors.
  const int n = kind.rank;
  if (kind.family == Family::SL) {
    std::vector<std::vector<Rational>> hs;
    for (int i = 0; i + 1 < n; ++i) {
      std::vector<Rational> h(n);
      h[i] = 1;
      h[n - 1] = -1;
      hs.push_back(h);
    }
    g.m_h_space = ratlin::span(hs, n);
  } else {
    g.m_h_space = SubspaceBasis::full(n);
  }
  for (int r = 0; r < g.m_h_space.dim(); ++r) {
    g.m_coords.push_back(g.m_h_space.basis_row(r));
    g.m_basis.push_back(g.m_element(g.m_coords.back()));
  }
  for (const auto& h : g.m_basis)
    if (!g.satisfies_defining_condition(h))
      throw InvariantError("diagonal Cartan element violates the defining condition");

  // Bracket closure: the basis spans the full solution space of the defining
  // condition, so membership of [X, Y] is exactly the condition itself.
  for (size_t i = 0; i < g.basis.size(); ++i)
    for (size_t j2 = i + 1; j2 < g.basis.size(); ++j2)
      if (!g.satisfies_defining_condition(g.basis[i].bracket(g.basis[j2])))
        throw InvariantError("bracket closure failed at basis pair (" + std::to_string(i) +
                             "," + std::to_string(j2) + ")");
  return g;
}

namespace {

Rational root_eigenvalue(const RootVector& alpha, const std::vector<Rational>& h) {
  Rational value = 0;
  for (size_t i = 0; i < h.size(); ++i) value += Rational(alpha[i]) * h[i];
  return value;
}

}  // namespace

MatrixQ root_space(const MatrixLieAlgebra& g, const RootVector& alpha) {
  if (!roots::is_root(g.kind, alpha))
    throw std::invalid_argument(roots::root_to_string(g.kind, alpha) + " is not a root of " +
                                g.kind.display());
  const int d = g.defining_dim;
  const int dim = g.dim();
  const int m = static_cast<int>(g.m_basis.size());

  // Stack the conditions [H_i, X] - alpha(H_i) X = 0 over the m-basis, with
  // X expanded in the canonical basis of g.
  MatrixQ cond(m * d * d, dim);
  for (int i = 0; i < m; ++i) {
    const Rational lambda = root_eigenvalue(alpha, g.m_coords[i]);
    for (int k = 0; k < dim; ++k) {
      MatrixQ residue = g.m_basis[i].bracket(g.basis[k]) - g.basis[k].scaled(lambda);
      const auto v = residue.flatten();
      for (int e = 0; e < d * d; ++e)
        if (v[e] != 0) cond.at(i * d * d + e, k) = v[e];
    }
  }
  SubspaceBasis sol = ratlin::kernel(cond);
  if (sol.dim() != 1)
    throw InvariantError("root space of " + roots::root_to_string(g.kind, alpha) +
                         " has dimension " + std::to_string(sol.dim()) + ", expected 1");
  // Reconstruct and scale the first nonzero entry (row-major) to 1.
  const auto c = sol.basis_row(0);
  std::vector<Rational> v(static_cast<size_t>(d) * d);
  for (int k = 0; k < dim; ++k) {
    if (c[k] == 0) continue;
    const auto& row = g.basis[k].entries();
    for (size_t e = 0; e < row.size(); ++e)
      if (row[e] != 0) v[e] += c[k] * row[e];
  }
  Rational lead = 0;
  for (const auto& x : v)
    if (x != 0) {
      lead = x;
      break;
    }
  if (lead == 0) throw InvariantError("root space solve returned the zero matrix");
  for (auto& x : v) x /= lead;
  return unflatten(v, d);
}

SubspaceBasis normalizer_of(const MatrixLieAlgebra& g, const std::vector<MatrixQ>& h_basis) {
  const int dim = g.dim();
  std::vector<std::vector<Rational>> h_rows;
  for (const auto& h : h_basis) h_rows.push_back(g.coords(h));
  const SubspaceBasis h_span = ratlin::span(h_rows, dim);

  // [X, h_j] must fall back into span(h); the residual against the RREF
  // basis is linear in X.
  MatrixQ cond(static_cast<int>(h_basis.size()) * dim, dim);
  for (size_t j = 0; j < h_basis.size(); ++j) {
    for (int k = 0; k < dim; ++k) {
      const auto res = h_span.residual(g.coords(g.basis[k].bracket(h_basis[j])));
      for (int e = 0; e < dim; ++e)
        if (res[e] != 0) cond.at(static_cast<int>(j) * dim + e, k) = res[e];
    }
  }
  return ratlin::kernel(cond);
}

bool is_cartan(const MatrixLieAlgebra& g, const std::vector<MatrixQ>& h_basis) {
  for (size_t i = 0; i < h_basis.size(); ++i)
    for (size_t j = i + 1; j < h_basis.size(); ++j)
      if (!h_basis[i].bracket(h_basis[j]).is_zero()) return false;
  std::vector<std::vector<Rational>> h_rows;
  for (const auto& h : h_basis) h_rows.push_back(g.coords(h));
  return normalizer_of(g, h_basis) == ratlin::span(h_rows, g.dim());
}

CartanSubalgebraQ build_cartan(const MatrixLieAlgebra& g, const AdmissibleSystem& f) {
  if (f.kind != g.kind) throw std::invalid_argument("build_cartan: kind mismatch");
  if (!admissible::is_admissible(g.kind, f.roots))
    throw std::invalid_argument("build_cartan: system is not admissible");

  CartanSubalgebraQ cartan;
  cartan.kind = g.kind;

  // Toroidal generators U_alpha = x_alpha + sigma(x_alpha), sigma(X) = -X^t.
  for (const auto& alpha : f.roots) {
    const MatrixQ x = root_space(g, alpha);
    MatrixQ u = x - x.transpose();
    if (!(u.transpose() == -u))
      throw InvariantError("toroidal generator is not skew-symmetric");
    cartan.toroidal_basis.push_back(std::move(u));
  }

  // Vector part: orthocomplement of span(F) inside m (trace form, which is a
  // positive multiple of the coordinate dot product on m).
  const SubspaceBasis ortho = ratlin::orthocomplement_within(f.span, g.m_h_space);
  for (int r = 0; r < ortho.dim(); ++r) {
    MatrixQ de = g.m_element(ortho.basis_row(r));
    if (!de.is_diagonal()) throw InvariantError("vector part element is not diagonal");
    cartan.vector_basis.push_back(std::move(de));
  }

  cartan.h_basis = cartan.toroidal_basis;
  cartan.h_basis.insert(cartan.h_basis.end(), cartan.vector_basis.begin(),
                        cartan.vector_basis.end());

  for (size_t i = 0; i < cartan.h_basis.size(); ++i) {
    for (size_t j = i + 1; j < cartan.h_basis.size(); ++j) {
      MatrixQ br = cartan.h_basis[i].bracket(cartan.h_basis[j]);
      if (!br.is_zero())
        throw InvariantError("Cartan candidate for " + f.str() +
                             " is not abelian; violating bracket [" + std::to_string(i) +
                             "," + std::to_string(j) + "] =\n" + br.str());
    }
  }

  std::vector<std::vector<Rational>> rows;
  for (const auto& h : cartan.h_basis) rows.push_back(g.coords(h));
  const SubspaceBasis h_span = ratlin::span(rows, g.dim());
  if (h_span.dim() != g.kind.dim_m())
    throw InvariantError("Cartan candidate has wrong dimension");
  for (const auto& h : cartan.h_basis)
    if (!h_span.contains(g.coords(-h.transpose())))
      throw InvariantError("Cartan candidate is not stable under the Cartan involution");
  if (!is_cartan(g, cartan.h_basis))
    throw InvariantError("Cartan candidate for " + f.str() + " is not self-normalizing");
  return cartan;
}

namespace {

int permutation_sign(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size(), false);
  int sign = 1;
  for (size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    size_t j = i;
    int len = 0;
    while (!seen[j]) {
      seen[j] = true;
      j = static_cast<size_t>(perm[j]);
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

MatrixQ monomial(int d, const std::vector<int>& slot_image, const std::vector<int>& entry) {
  MatrixQ k(d, d);
  for (int i = 0; i < d; ++i) k.at(slot_image[i], i) = entry[i];
  return k;
}

}  // namespace

KElement lift_weyl(const MatrixLieAlgebra& g, const WeylElement& w) {
  if (w.kind != g.kind) throw std::invalid_argument("lift_weyl: kind mismatch");
  const int n = g.kind.rank;
  const int d = g.defining_dim;
  std::vector<int> slot(d);
  std::vector<int> entry(d, 1);

  switch (g.kind.family) {
    case Family::SL: {
      for (int i = 0; i < n; ++i) slot[i] = w.images[i];
      if (permutation_sign(slot) < 0) {
        // Repair det = -1 by negating the entry in the lowest moved column;
        // a single adjacent transposition becomes the rotation block
        // [[0,1],[-1,0]].
        for (int i = 0; i < n; ++i)
          if (slot[i] != i) {
            entry[i] = -1;
            break;
          }
      }
      break;
    }
    case Family::SP:
      for (int i = 0; i < n; ++i) {
        if (w.signs[i] > 0) {
          slot[i] = w.images[i];
          slot[n + i] = n + w.images[i];
        } else {
          slot[i] = n + w.images[i];
          slot[n + i] = w.images[i];
        }
        // The symplectic pairing of slots (i, n+i) forces the two entries of
        // each pair to multiply to signs[i]; put the sign in the first block.
        entry[i] = w.signs[i];
      }
      break;
    case Family::SO_ODD: {
      for (int i = 0; i < n; ++i) {
        if (w.signs[i] > 0) {
          slot[i] = w.images[i];
          slot[n + i] = n + w.images[i];
        } else {
          slot[i] = n + w.images[i];
          slot[n + i] = w.images[i];
        }
      }
      slot[2 * n] = 2 * n;
      entry[2 * n] = permutation_sign(slot);  // restores det = 1
      break;
    }
    case Family::SO_EVEN:
      for (int i = 0; i < n; ++i) {
        if (w.signs[i] > 0) {
          slot[i] = w.images[i];
          slot[n + i] = n + w.images[i];
        } else {
          slot[i] = n + w.images[i];
          slot[n + i] = w.images[i];
        }
      }
      break;
    default:
      throw std::invalid_argument("lift_weyl: no matrix model for g2");
  }

  KElement k{g.kind, monomial(d, slot, entry)};

  const MatrixQ kt = k.matrix.transpose();
  if (!(kt * k.matrix == MatrixQ::identity(d)))
    throw InvariantError("lift is not orthogonal");
  if (g.kind.family == Family::SL) {
    if (permutation_sign(slot) * std::accumulate(entry.begin(), entry.end(), 1,
                                                 std::multiplies<int>()) != 1)
      throw InvariantError("no monomial lift with det 1 found");
  } else {
    if (!(kt * (*g.form) * k.matrix == *g.form))
      throw InvariantError("no form-preserving monomial lift found for " + w.str());
  }
  if (!(induced_weyl(g, k) == w))
    throw InvariantError("lift induces the wrong Weyl element for " + w.str());
  return k;
}

WeylElement induced_weyl(const MatrixLieAlgebra& g, const KElement& k) {
  const int n = g.kind.rank;
  const MatrixQ kinv = k.matrix.inverse();

  // Probe with distinct-magnitude coordinates so the signed permutation can
  // be read off the conjugated diagonal.
  std::vector<Rational> h(n);
  for (int i = 0; i < n; ++i) h[i] = Rational(ratlin::BigInt(1) << i);
  if (g.kind.family == Family::SL) {
    Rational mean = 0;
    for (const auto& x : h) mean += x;
    mean /= n;
    for (auto& x : h) x -= mean;
  }

  const MatrixQ conj = k.matrix * g.m_element(h) * kinv;
  if (!conj.is_diagonal())
    throw std::invalid_argument("k does not normalize m (conjugate not diagonal)");
  std::vector<Rational> hprime(n);
  for (int i = 0; i < n; ++i) hprime[i] = conj.at(i, i);
  if (g.kind.family != Family::SL) {
    for (int i = 0; i < n; ++i)
      if (conj.at(n + i, n + i) != -hprime[i])
        throw std::invalid_argument("k does not normalize m (pattern broken)");
    if (g.kind.family == Family::SO_ODD && conj.at(2 * n, 2 * n) != 0)
      throw std::invalid_argument("k does not normalize m (corner not fixed)");
  }

  WeylElement w = roots::weyl_identity(g.kind);
  std::vector<bool> used(n, false);
  for (int i = 0; i < n; ++i) {
    int image = -1;
    int sign = 1;
    for (int j = 0; j < n; ++j) {
      if (used[j]) continue;
      if (hprime[j] == h[i]) {
        image = j;
        sign = 1;
        break;
      }
      if (g.kind.family != Family::SL && hprime[j] == -h[i]) {
        image = j;
        sign = -1;
        break;
      }
    }
    if (image < 0)
      throw std::invalid_argument("k does not normalize m (no signed permutation match)");
    used[image] = true;
    w.images[i] = image;
    w.signs[i] = sign;
  }
  if (g.kind.family == Family::SO_EVEN) {
    int flips = 0;
    for (int s : w.signs)
      if (s < 0) ++flips;
    if (flips % 2 != 0)
      throw std::invalid_argument("induced signed permutation flips an odd sign count");
  }

  for (size_t i = 0; i < g.m_basis.size(); ++i) {
    const MatrixQ expected = g.m_element(roots::apply_rational(w, g.m_coords[i]));
    if (!(k.matrix * g.m_basis[i] * kinv == expected))
      throw std::invalid_argument("k does not act on the m-basis as a signed permutation");
  }
  return w;
}

bool verify_fixes(const MatrixLieAlgebra& g, const KElement& k,
                  const std::vector<CartanSubalgebraQ>& cartans) {
  const MatrixQ kinv = k.matrix.inverse();
  for (const auto& cartan : cartans) {
    std::vector<std::vector<Rational>> original;
    std::vector<std::vector<Rational>> conjugated;
    for (const auto& x : cartan.h_basis) {
      original.push_back(g.coords(x));
      conjugated.push_back(g.coords(k.matrix * x * kinv));
    }
    if (ratlin::span(original, g.dim()) != ratlin::span(conjugated, g.dim())) return false;
  }
  return true;
}

Rational trace_form(const MatrixLieAlgebra& g, const MatrixQ& x, const MatrixQ& y) {
  if (x.rows() != g.defining_dim || y.rows() != g.defining_dim)
    throw std::invalid_argument("trace_form: wrong matrix size");
  Rational t = 0;
  for (int i = 0; i < x.rows(); ++i)
    for (int k = 0; k < x.cols(); ++k)
      if (x.at(i, k) != 0 && y.at(k, i) != 0) t += x.at(i, k) * y.at(k, i);
  return t;
}

MatrixQ ad_matrix(const MatrixLieAlgebra& g, const MatrixQ& x) {
  const int dim = g.dim();
  MatrixQ ad(dim, dim);
  for (int k = 0; k < dim; ++k) {
    const auto col = g.coords(x.bracket(g.basis[k]));
    for (int r = 0; r < dim; ++r) ad.at(r, k) = col[r];
  }
  return ad;
}

VerificationRun run_verification(AlgebraKind kind) {
  VerificationRun run;
  run.kind = kind;
  const MatrixLieAlgebra g = realize(kind);
  const auto report = admissible::classify(kind);
  const auto family = admissible::representative_family(kind);
  const auto family_ids = admissible::family_class_ids(report, family);

  run.stab = stabilizer::family_stabilizer(kind, family);
  run.stab.family_class_ids = family_ids;

  bool ok = true;
  std::vector<CartanSubalgebraQ> cartans;
  for (size_t i = 0; i < family.size(); ++i) {
    CartanSubalgebraQ cartan = build_cartan(g, family[i]);
    cartan.source_class = family_ids[i];
    CartanCheck check;
    check.class_id = family_ids[i];
    check.dim = cartan.dim();
    check.toroidal_dim = cartan.toroidal_dim();
    check.cartan_ok = is_cartan(g, cartan.h_basis) && cartan.dim() == kind.dim_m();
    ok = ok && check.cartan_ok;
    run.cartans.push_back(check);
    cartans.push_back(std::move(cartan));
  }
  std::sort(run.cartans.begin(), run.cartans.end(),
            [](const CartanCheck& a, const CartanCheck& b) { return a.class_id < b.class_id; });

  for (const auto& w : run.stab.elements) {
    KCheck check;
    check.w = w;
    KElement k = lift_weyl(g, w);
    check.k = k.matrix;
    check.round_trip_ok = induced_weyl(g, k) == w;
    check.fixes_all = verify_fixes(g, k, cartans);
    ok = ok && check.round_trip_ok && check.fixes_all;
    run.k_elements.push_back(std::move(check));
  }

  // Negative control: the first Weyl element outside the stabilizer, when
  // the stabilizer is proper, must fail the conjugation check.
  roots::WeylEnumerator en(kind);
  WeylElement w;
  while (en.next(w)) {
    if (run.stab.contains(w)) continue;
    KCheck check;
    check.w = w;
    KElement k = lift_weyl(g, w);
    check.k = k.matrix;
    check.round_trip_ok = induced_weyl(g, k) == w;
    check.fixes_all = verify_fixes(g, k, cartans);
    ok = ok && check.round_trip_ok && !check.fixes_all;
    run.negative = std::move(check);
    break;
  }

  run.all_ok = ok;
  return run;
}

}  // namespace cartanstab::liealg
