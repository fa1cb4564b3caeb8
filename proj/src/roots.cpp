#include "cartanstab/roots.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "cartanstab/errors.hpp"

namespace cartanstab::roots {

using ratlin::Rational;

AlgebraKind AlgebraKind::sl(int n) {
  if (n < 2) throw std::invalid_argument("sl(n,R) needs n >= 2");
  return {Family::SL, n};
}
AlgebraKind AlgebraKind::sp(int n) {
  if (n < 1) throw std::invalid_argument("sp(n,R) needs n >= 1");
  return {Family::SP, n};
}
AlgebraKind AlgebraKind::so_odd(int n) {
  if (n < 1) throw std::invalid_argument("o(2n+1,R) needs n >= 1");
  return {Family::SO_ODD, n};
}
AlgebraKind AlgebraKind::so_even(int n) {
  if (n < 2) throw std::invalid_argument("o(2n,R) needs n >= 2");
  return {Family::SO_EVEN, n};
}
AlgebraKind AlgebraKind::g2() { return {Family::G2, 2}; }

AlgebraKind AlgebraKind::from_name(const std::string& name, int rank) {
  if (name == "sl") return sl(rank);
  if (name == "sp") return sp(rank);
  if (name == "so-odd") return so_odd(rank);
  if (name == "so-even") return so_even(rank);
  if (name == "g2") {
    if (rank != 0 && rank != 2) throw std::invalid_argument("g2 has fixed rank 2");
    return g2();
  }
  throw std::invalid_argument("unknown algebra '" + name + "'");
}

Family AlgebraKind::family_from_name(const std::string& name) {
  if (name == "sl") return Family::SL;
  if (name == "sp") return Family::SP;
  if (name == "so-odd") return Family::SO_ODD;
  if (name == "so-even") return Family::SO_EVEN;
  if (name == "g2") return Family::G2;
  throw std::invalid_argument("unknown algebra '" + name + "'");
}

int AlgebraKind::dim_m() const {
  switch (family) {
    case Family::SL: return rank - 1;
    case Family::G2: return 2;
    default: return rank;
  }
}

std::string AlgebraKind::name() const {
  switch (family) {
    case Family::SL: return "sl";
    case Family::SP: return "sp";
    case Family::SO_ODD: return "so-odd";
    case Family::SO_EVEN: return "so-even";
    case Family::G2: return "g2";
  }
  return "?";
}

std::string AlgebraKind::display() const {
  if (family == Family::G2) return "g2";
  return name() + "(" + std::to_string(rank) + ")";
}

bool WeylElement::is_identity() const {
  if (is_g2()) return mat == std::array<int64_t, 4>{1, 0, 0, 1};
  for (size_t i = 0; i < images.size(); ++i)
    if (images[i] != static_cast<int>(i) || signs[i] != 1) return false;
  return true;
}

bool WeylElement::operator==(const WeylElement& o) const {
  if (kind != o.kind) return false;
  if (is_g2()) return mat == o.mat;
  return images == o.images && signs == o.signs;
}

bool WeylElement::operator<(const WeylElement& o) const {
  if (is_g2()) return mat < o.mat;
  if (images != o.images) return images < o.images;
  return signs < o.signs;
}

std::string WeylElement::str() const {
  std::ostringstream os;
  if (is_g2()) {
    os << "[[" << mat[0] << "," << mat[1] << "],[" << mat[2] << "," << mat[3] << "]]";
    return os.str();
  }
  if (is_identity()) return "id";
  os << "perm=[";
  for (size_t i = 0; i < images.size(); ++i) os << (i ? "," : "") << images[i] + 1;
  os << "] signs=[";
  for (size_t i = 0; i < signs.size(); ++i) os << (i ? "," : "") << (signs[i] > 0 ? "+" : "-");
  os << "]";
  return os.str();
}

WeylElement weyl_identity(AlgebraKind kind) {
  WeylElement w;
  w.kind = kind;
  if (kind.family == Family::G2) {
    w.mat = {1, 0, 0, 1};
    return w;
  }
  w.images.resize(kind.rank);
  std::iota(w.images.begin(), w.images.end(), 0);
  w.signs.assign(kind.rank, 1);
  return w;
}

WeylElement weyl_transposition(AlgebraKind kind, int i, int j) {
  WeylElement w = weyl_identity(kind);
  std::swap(w.images[i], w.images[j]);
  return w;
}

WeylElement weyl_sign_flip(AlgebraKind kind, const std::vector<int>& flipped) {
  if (kind.family == Family::SL || kind.family == Family::G2)
    throw std::invalid_argument("sign flips live in the B/C/D Weyl groups");
  WeylElement w = weyl_identity(kind);
  for (int i : flipped) w.signs[i] = -1;
  if (kind.family == Family::SO_EVEN && flipped.size() % 2 != 0)
    throw std::invalid_argument("o(2n,R) Weyl group flips an even number of signs");
  return w;
}

WeylElement weyl_flip_all(AlgebraKind kind) {
  std::vector<int> all(kind.rank);
  std::iota(all.begin(), all.end(), 0);
  return weyl_sign_flip(kind, all);
}

namespace {

RootVector unit(int n, int i, int value) {
  RootVector v(n, 0);
  v[i] = value;
  return v;
}

RootVector pair_root(int n, int i, int j, int si, int sj) {
  RootVector v(n, 0);
  v[i] = si;
  v[j] = sj;
  return v;
}

const std::vector<RootVector>& g2_positive_roots() {
  // Short roots (1,0),(0,1),(1,1); long roots (2,1),(1,2),(1,-1); all with
  // first nonzero coordinate positive.
  static const std::vector<RootVector> roots = [] {
    std::vector<RootVector> r = {{0, 1}, {1, -1}, {1, 0}, {1, 1}, {1, 2}, {2, 1}};
    std::sort(r.begin(), r.end());
    return r;
  }();
  return roots;
}

bool g2_is_root(const RootVector& v) {
  for (const auto& r : g2_positive_roots()) {
    if (v == r) return true;
    if (v.size() == r.size() && v[0] == -r[0] && v[1] == -r[1]) return true;
  }
  return false;
}

}  // namespace

std::vector<RootVector> positive_roots(AlgebraKind kind) {
  const int n = kind.rank;
  std::vector<RootVector> out;
  switch (kind.family) {
    case Family::SL:
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (i < j) out.push_back(pair_root(n, i, j, 1, -1));
      break;
    case Family::SP:
      for (int i = 0; i < n; ++i) out.push_back(unit(n, i, 2));
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          out.push_back(pair_root(n, i, j, 1, 1));
          out.push_back(pair_root(n, i, j, 1, -1));
        }
      break;
    case Family::SO_ODD:
      for (int i = 0; i < n; ++i) out.push_back(unit(n, i, 1));
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          out.push_back(pair_root(n, i, j, 1, 1));
          out.push_back(pair_root(n, i, j, 1, -1));
        }
      break;
    case Family::SO_EVEN:
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          out.push_back(pair_root(n, i, j, 1, 1));
          out.push_back(pair_root(n, i, j, 1, -1));
        }
      break;
    case Family::G2:
      return g2_positive_roots();
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_root(AlgebraKind kind, const RootVector& v) {
  if (static_cast<int>(v.size()) != kind.coord_len())
    throw std::invalid_argument("root coordinate length mismatch");
  if (kind.family == Family::G2) return g2_is_root(v);

  int nonzero = 0;
  int sum = 0;
  bool entries_ok = true;
  int max_abs = 0;
  for (int x : v) {
    if (x != 0) ++nonzero;
    sum += x;
    max_abs = std::max(max_abs, std::abs(x));
    if (std::abs(x) > 2) entries_ok = false;
  }
  if (!entries_ok || nonzero == 0) return false;
  switch (kind.family) {
    case Family::SL:
      return nonzero == 2 && max_abs == 1 && sum == 0;
    case Family::SP:
      if (nonzero == 1) return max_abs == 2;
      return nonzero == 2 && max_abs == 1;
    case Family::SO_ODD:
      if (nonzero == 1) return max_abs == 1;
      return nonzero == 2 && max_abs == 1;
    case Family::SO_EVEN:
      return nonzero == 2 && max_abs == 1;
    default:
      return false;
  }
}

RootVector apply(const WeylElement& w, const RootVector& v) {
  if (static_cast<int>(v.size()) != w.kind.coord_len())
    throw std::invalid_argument("apply: coordinate length mismatch");
  if (w.is_g2()) {
    return {static_cast<int>(w.mat[0] * v[0] + w.mat[1] * v[1]),
            static_cast<int>(w.mat[2] * v[0] + w.mat[3] * v[1])};
  }
  RootVector out(v.size(), 0);
  for (size_t i = 0; i < v.size(); ++i) out[w.images[i]] = w.signs[i] * v[i];
  return out;
}

std::vector<Rational> apply_rational(const WeylElement& w, const std::vector<Rational>& v) {
  if (static_cast<int>(v.size()) != w.kind.coord_len())
    throw std::invalid_argument("apply: coordinate length mismatch");
  if (w.is_g2()) {
    return {Rational(w.mat[0]) * v[0] + Rational(w.mat[1]) * v[1],
            Rational(w.mat[2]) * v[0] + Rational(w.mat[3]) * v[1]};
  }
  std::vector<Rational> out(v.size());
  for (size_t i = 0; i < v.size(); ++i)
    out[w.images[i]] = w.signs[i] > 0 ? v[i] : -v[i];
  return out;
}

WeylElement compose(const WeylElement& w1, const WeylElement& w2) {
  if (w1.kind != w2.kind) throw std::invalid_argument("compose: kind mismatch");
  WeylElement out;
  out.kind = w1.kind;
  if (w1.is_g2()) {
    out.mat = {w1.mat[0] * w2.mat[0] + w1.mat[1] * w2.mat[2],
               w1.mat[0] * w2.mat[1] + w1.mat[1] * w2.mat[3],
               w1.mat[2] * w2.mat[0] + w1.mat[3] * w2.mat[2],
               w1.mat[2] * w2.mat[1] + w1.mat[3] * w2.mat[3]};
    return out;
  }
  const size_t n = w1.images.size();
  out.images.resize(n);
  out.signs.resize(n);
  for (size_t i = 0; i < n; ++i) {
    out.images[i] = w1.images[w2.images[i]];
    out.signs[i] = w2.signs[i] * w1.signs[w2.images[i]];
  }
  return out;
}

WeylElement inverse(const WeylElement& w) {
  WeylElement out;
  out.kind = w.kind;
  if (w.is_g2()) {
    const int64_t det = w.mat[0] * w.mat[3] - w.mat[1] * w.mat[2];
    if (det != 1 && det != -1) throw InvariantError("g2 Weyl matrix not unimodular");
    out.mat = {w.mat[3] * det, -w.mat[1] * det, -w.mat[2] * det, w.mat[0] * det};
    return out;
  }
  const size_t n = w.images.size();
  out.images.resize(n);
  out.signs.resize(n);
  for (size_t i = 0; i < n; ++i) {
    out.images[w.images[i]] = static_cast<int>(i);
    out.signs[w.images[i]] = w.signs[i];
  }
  return out;
}

uint64_t weyl_order(AlgebraKind kind) {
  if (kind.family == Family::G2) return 12;
  // Saturate instead of overflowing for absurd ranks; anything this large is
  // rejected by the guard anyway.
  constexpr uint64_t kSaturated = UINT64_MAX;
  uint64_t fact = 1;
  for (int i = 2; i <= kind.rank; ++i) {
    if (fact > kSaturated / static_cast<uint64_t>(i)) return kSaturated;
    fact *= static_cast<uint64_t>(i);
  }
  const int shift = kind.family == Family::SO_EVEN ? kind.rank - 1
                    : kind.family == Family::SL    ? 0
                                                   : kind.rank;
  if (shift >= 64 || (shift > 0 && fact > (kSaturated >> shift))) return kSaturated;
  return fact << shift;
}

void check_weyl_guard(AlgebraKind kind) {
  const uint64_t order = weyl_order(kind);
  if (order > kWeylEnumerationLimit) {
    const std::string shown =
        order == UINT64_MAX ? std::string("more than 2^64") : std::to_string(order);
    throw GuardError(kind.display() + ": Weyl group order " + shown +
                     " exceeds the enumeration limit " +
                     std::to_string(kWeylEnumerationLimit));
  }
}

Rational g2_form(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  return a[0] * b[0] + a[1] * b[1] - (a[0] * b[1] + a[1] * b[0]) / 2;
}

Rational g2_form_int(const RootVector& a, const RootVector& b) {
  return g2_form({Rational(a[0]), Rational(a[1])}, {Rational(b[0]), Rational(b[1])});
}

namespace {

WeylElement g2_from_mat(std::array<int64_t, 4> m) {
  WeylElement w;
  w.kind = AlgebraKind::g2();
  w.mat = m;
  return w;
}

std::vector<WeylElement> build_g2_group() {
  // Reflections in the short root (1,0) and the long root (1,-1); their
  // mirrors sit 30 degrees apart, so they generate the dihedral group of
  // order 12.
  const WeylElement s_short = g2_from_mat({-1, 1, 0, 1});
  const WeylElement s_long = g2_from_mat({0, 1, 1, 0});
  std::set<std::array<int64_t, 4>> seen;
  std::vector<WeylElement> frontier = {weyl_identity(AlgebraKind::g2())};
  seen.insert(frontier[0].mat);
  std::vector<WeylElement> all = frontier;
  while (!frontier.empty()) {
    std::vector<WeylElement> next;
    for (const auto& w : frontier) {
      for (const auto& gen : {s_short, s_long}) {
        WeylElement c = compose(gen, w);
        if (seen.insert(c.mat).second) {
          next.push_back(c);
          all.push_back(c);
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(all.begin(), all.end());
  if (all.size() != 12) throw InvariantError("g2 Weyl group closure has wrong size");
  return all;
}

}  // namespace

const std::vector<WeylElement>& g2_weyl_group() {
  static const std::vector<WeylElement> group = build_g2_group();
  return group;
}

WeylEnumerator::WeylEnumerator(AlgebraKind kind) : kind_(kind) {
  check_weyl_guard(kind);
  order_ = weyl_order(kind);
  if (kind.family == Family::G2) {
    g2_elements_ = g2_weyl_group();
    return;
  }
  perm_.resize(kind.rank);
  std::iota(perm_.begin(), perm_.end(), 0);
  mask_count_ = kind.family == Family::SL ? 1 : (uint64_t{1} << kind.rank);
}

bool WeylEnumerator::advance() {
  if (kind_.family == Family::G2) {
    ++g2_pos_;
    return g2_pos_ < g2_elements_.size();
  }
  while (true) {
    ++mask_;
    if (mask_ >= mask_count_) {
      mask_ = 0;
      if (!std::next_permutation(perm_.begin(), perm_.end())) return false;
    }
    if (kind_.family == Family::SO_EVEN && (__builtin_popcountll(mask_) & 1)) continue;
    return true;
  }
}

void WeylEnumerator::fill(WeylElement& out) const {
  out.kind = kind_;
  if (kind_.family == Family::G2) {
    out.mat = g2_elements_[g2_pos_].mat;
    out.images.clear();
    out.signs.clear();
    return;
  }
  out.images = perm_;
  out.signs.assign(kind_.rank, 1);
  // Bit (rank-1-i) drives coordinate i, so incrementing the mask walks the
  // sign vectors in lexicographic order with +1 before -1.
  for (int i = 0; i < kind_.rank; ++i)
    if ((mask_ >> (kind_.rank - 1 - i)) & 1) out.signs[i] = -1;
}

bool WeylEnumerator::next(WeylElement& out) {
  if (done_) return false;
  if (first_) {
    first_ = false;
    fill(out);
    return true;
  }
  if (!advance()) {
    done_ = true;
    return false;
  }
  fill(out);
  return true;
}

std::vector<WeylElement> all_weyl(AlgebraKind kind) {
  WeylEnumerator en(kind);
  std::vector<WeylElement> out;
  out.reserve(en.order());
  WeylElement w;
  while (en.next(w)) out.push_back(w);
  return out;
}

std::vector<WeylElement> weyl_generators(AlgebraKind kind) {
  if (kind.family == Family::G2) {
    return {g2_from_mat({-1, 1, 0, 1}), g2_from_mat({0, 1, 1, 0})};
  }
  std::vector<WeylElement> gens;
  for (int i = 0; i + 1 < kind.rank; ++i) gens.push_back(weyl_transposition(kind, i, i + 1));
  switch (kind.family) {
    case Family::SP:
    case Family::SO_ODD:
      gens.push_back(weyl_sign_flip(kind, {kind.rank - 1}));
      break;
    case Family::SO_EVEN:
      gens.push_back(weyl_sign_flip(kind, {kind.rank - 2, kind.rank - 1}));
      break;
    default:
      break;
  }
  return gens;
}

std::string root_to_string(AlgebraKind kind, const RootVector& v) {
  if (kind.family == Family::G2) {
    return "(" + std::to_string(v[0]) + "," + std::to_string(v[1]) + ")";
  }
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (v[i] > 0 && !first) os << "+";
    if (v[i] == -1) os << "-";
    else if (v[i] != 1) os << v[i];
    os << "e" << i + 1;
    first = false;
  }
  return first ? "0" : os.str();
}

}  // namespace cartanstab::roots
