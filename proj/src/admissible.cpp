#include "cartanstab/admissible.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "cartanstab/errors.hpp"

namespace cartanstab::admissible {

using ratlin::SubspaceBasis;

std::string AdmissibleSystem::str() const {
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < roots.size(); ++i)
    os << (i ? ", " : "") << roots::root_to_string(kind, roots[i]);
  os << "}";
  return os.str();
}

namespace {

RootVector add(const RootVector& a, const RootVector& b) {
  RootVector out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

RootVector sub(const RootVector& a, const RootVector& b) {
  RootVector out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

bool is_negation(const RootVector& a, const RootVector& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != -b[i]) return false;
  return true;
}

/// alpha and beta strongly orthogonal: neither sum nor difference is a root.
bool strongly_orthogonal(AlgebraKind kind, const RootVector& a, const RootVector& b) {
  return !roots::is_root(kind, add(a, b)) && !roots::is_root(kind, sub(a, b));
}

bool double_is_root(AlgebraKind kind, const RootVector& a) {
  return roots::is_root(kind, add(a, a));
}

}  // namespace

bool is_admissible(AlgebraKind kind, const std::vector<RootVector>& roots_in) {
  for (const auto& r : roots_in)
    if (!roots::is_root(kind, r))
      throw std::invalid_argument("is_admissible: " + roots::root_to_string(kind, r) +
                                  " is not a root of " + kind.display());
  for (size_t i = 0; i < roots_in.size(); ++i) {
    if (double_is_root(kind, roots_in[i])) return false;
    for (size_t j = i + 1; j < roots_in.size(); ++j) {
      if (roots_in[i] == roots_in[j] || is_negation(roots_in[i], roots_in[j])) return false;
      if (!strongly_orthogonal(kind, roots_in[i], roots_in[j])) return false;
    }
  }
  return true;
}

AdmissibleSystem make_system(AlgebraKind kind, std::vector<RootVector> roots_in) {
  if (!is_admissible(kind, roots_in))
    throw std::invalid_argument("root set is not admissible for " + kind.display());
  std::sort(roots_in.begin(), roots_in.end());
  AdmissibleSystem f;
  f.kind = kind;
  f.span = ratlin::span_int(roots_in, kind.coord_len());
  f.roots = std::move(roots_in);
  if (f.span.dim() != static_cast<int>(f.roots.size()))
    throw InvariantError("strongly orthogonal roots must be linearly independent");
  return f;
}

std::vector<AdmissibleSystem> enumerate_admissible(AlgebraKind kind) {
  roots::check_weyl_guard(kind);
  const auto positive = roots::positive_roots(kind);
  const int m = static_cast<int>(positive.size());

  std::vector<bool> self_ok(m);
  for (int i = 0; i < m; ++i) self_ok[i] = !double_is_root(kind, positive[i]);
  std::vector<std::vector<bool>> compatible(m, std::vector<bool>(m, false));
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      compatible[i][j] = strongly_orthogonal(kind, positive[i], positive[j]);

  std::vector<AdmissibleSystem> out;
  std::vector<int> chosen;
  auto emit = [&] {
    std::vector<RootVector> roots_list;
    roots_list.reserve(chosen.size());
    for (int idx : chosen) roots_list.push_back(positive[idx]);
    AdmissibleSystem f;
    f.kind = kind;
    f.roots = roots_list;
    f.span = ratlin::span_int(roots_list, kind.coord_len());
    if (f.span.dim() != static_cast<int>(f.roots.size()))
      throw InvariantError("strongly orthogonal roots must be linearly independent");
    out.push_back(std::move(f));
  };
  auto rec = [&](auto&& self, int start) -> void {
    emit();
    for (int i = start; i < m; ++i) {
      if (!self_ok[i]) continue;
      bool ok = true;
      for (int idx : chosen) {
        if (!compatible[idx][i]) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      chosen.push_back(i);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

SubspaceBasis transformed_span(const WeylElement& w, const AdmissibleSystem& f) {
  std::vector<std::vector<ratlin::Rational>> rows;
  rows.reserve(f.span.dim());
  for (int r = 0; r < f.span.dim(); ++r)
    rows.push_back(roots::apply_rational(w, f.span.basis_row(r)));
  return ratlin::span(rows, f.kind.coord_len());
}

bool fixes(const WeylElement& w, const AdmissibleSystem& f) {
  if (w.kind != f.kind) throw std::invalid_argument("fixes: kind mismatch");
  return transformed_span(w, f) == f.span;
}

int ClassReport::class_of_span(const SubspaceBasis& span) const {
  auto it = span_to_class.find(span);
  if (it == span_to_class.end())
    throw std::invalid_argument("span does not belong to any admissible system");
  return it->second;
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), size_t{0});
  }
  size_t find(size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(size_t a, size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<size_t> parent_;
};

SubspaceBasis transform_subspace(const WeylElement& w, const SubspaceBasis& s, int ambient) {
  std::vector<std::vector<ratlin::Rational>> rows;
  rows.reserve(s.dim());
  for (int r = 0; r < s.dim(); ++r) rows.push_back(roots::apply_rational(w, s.basis_row(r)));
  return ratlin::span(rows, ambient);
}

}  // namespace

ClassReport classify(AlgebraKind kind) {
  const auto systems = enumerate_admissible(kind);

  // Register distinct spans, keeping the lexicographically least realizing
  // root list per span (independent of the enumeration order).
  std::map<SubspaceBasis, int> span_index;
  std::vector<const SubspaceBasis*> spans;
  std::vector<const AdmissibleSystem*> least_system;
  for (const auto& sys : systems) {
    auto [it, inserted] = span_index.try_emplace(sys.span, static_cast<int>(spans.size()));
    if (inserted) {
      spans.push_back(&it->first);
      least_system.push_back(&sys);
    } else if (sys.roots < least_system[it->second]->roots) {
      least_system[it->second] = &sys;
    }
  }

  UnionFind uf(spans.size());
  const auto generators = roots::weyl_generators(kind);
  for (size_t i = 0; i < spans.size(); ++i) {
    for (const auto& g : generators) {
      SubspaceBasis image = transform_subspace(g, *spans[i], kind.coord_len());
      auto it = span_index.find(image);
      if (it == span_index.end())
        throw InvariantError("Weyl image of an admissible span is not an admissible span");
      uf.unite(i, static_cast<size_t>(it->second));
    }
  }

  struct Orbit {
    int rep_span = -1;  // index with the lexicographically least RREF
    uint64_t size = 0;
  };
  std::map<size_t, Orbit> orbits;
  for (size_t i = 0; i < spans.size(); ++i) {
    Orbit& o = orbits[uf.find(i)];
    ++o.size;
    if (o.rep_span < 0 || *spans[i] < *spans[o.rep_span]) o.rep_span = static_cast<int>(i);
  }

  ClassReport report;
  report.kind = kind;
  for (const auto& [root_idx, orbit] : orbits) {
    CartanClass cls;
    cls.representative = *least_system[orbit.rep_span];
    cls.orbit_size_spans = orbit.size;
    cls.vector_part_dim = kind.dim_m() - static_cast<int>(cls.representative.roots.size());
    report.classes.push_back(std::move(cls));
  }
  std::sort(report.classes.begin(), report.classes.end(),
            [](const CartanClass& a, const CartanClass& b) {
              if (a.representative.roots.size() != b.representative.roots.size())
                return a.representative.roots.size() < b.representative.roots.size();
              return a.representative.span < b.representative.span;
            });
  std::map<size_t, int> root_to_id;
  for (size_t i = 0; i < report.classes.size(); ++i) report.classes[i].id = static_cast<int>(i) + 1;
  for (size_t i = 0; i < spans.size(); ++i) {
    const SubspaceBasis& rep = *spans[orbits[uf.find(i)].rep_span];
    for (const auto& cls : report.classes) {
      if (cls.representative.span == rep) {
        report.span_to_class.emplace(*spans[i], cls.id);
        break;
      }
    }
  }
  if (report.span_to_class.size() != spans.size())
    throw InvariantError("classify: span-to-class table incomplete");
  return report;
}

namespace {

RootVector e_minus(int n, int i, int j) {  // e_i - e_j, 1-based arguments
  RootVector v(n, 0);
  v[i - 1] = 1;
  v[j - 1] = -1;
  return v;
}

RootVector e_plus(int n, int i, int j) {
  RootVector v(n, 0);
  v[i - 1] = 1;
  v[j - 1] = 1;
  return v;
}

RootVector e_single(int n, int i, int value) {
  RootVector v(n, 0);
  v[i - 1] = value;
  return v;
}

/// B/D family F(k,l): k pairs carrying both e(2i-1)+-e(2i), then l difference
/// roots pairing e(2k+i) with e(2k+l+i).
std::vector<RootVector> bd_family(int n, int k, int l) {
  std::vector<RootVector> roots_list;
  for (int i = 1; i <= k; ++i) {
    roots_list.push_back(e_plus(n, 2 * i - 1, 2 * i));
    roots_list.push_back(e_minus(n, 2 * i - 1, 2 * i));
  }
  for (int i = 1; i <= l; ++i) roots_list.push_back(e_minus(n, 2 * k + i, 2 * k + l + i));
  return roots_list;
}

}  // namespace

std::vector<AdmissibleSystem> representative_family(AlgebraKind kind) {
  const int n = kind.rank;
  std::vector<AdmissibleSystem> family;
  switch (kind.family) {
    case roots::Family::SL:
      for (int k = 0; k <= n / 2; ++k) {
        std::vector<RootVector> roots_list;
        for (int i = 1; i <= k; ++i) roots_list.push_back(e_minus(n, 2 * i - 1, 2 * i));
        family.push_back(make_system(kind, std::move(roots_list)));
      }
      return family;
    case roots::Family::SP:
      for (int k = 0; k <= n; ++k) {
        for (int l = 0; k + 2 * l <= n; ++l) {
          std::vector<RootVector> roots_list;
          for (int i = 1; i <= k; ++i) roots_list.push_back(e_single(n, i, 2));
          for (int i = 1; i <= l; ++i)
            roots_list.push_back(e_minus(n, k + 2 * i - 1, k + 2 * i));
          family.push_back(make_system(kind, std::move(roots_list)));
        }
      }
      return family;
    case roots::Family::SO_ODD: {
      for (int k = 0; 2 * k <= n; ++k)
        for (int l = 0; 2 * k + 2 * l <= n; ++l)
          family.push_back(make_system(kind, bd_family(n, k, l)));
      for (int k = 0; 2 * k + 1 <= n; ++k) {
        for (int l = 0; 2 * k + 2 * l + 1 <= n; ++l) {
          auto roots_list = bd_family(n, k, l);
          roots_list.push_back(e_single(n, 2 * k + 2 * l + 1, 1));
          family.push_back(make_system(kind, std::move(roots_list)));
        }
      }
      return family;
    }
    case roots::Family::SO_EVEN: {
      for (int k = 0; 2 * k <= n; ++k)
        for (int l = 0; 2 * k + 2 * l <= n; ++l)
          family.push_back(make_system(kind, bd_family(n, k, l)));
      if (n % 2 == 0) {
        // One class is missed by every F(k,l) when n is even (its systems
        // need an odd number of plus-type difference roots); take the
        // canonical classify representative for it.
        const ClassReport report = classify(kind);
        std::vector<bool> hit(report.classes.size() + 1, false);
        for (const auto& f : family) hit[report.class_of_span(f.span)] = true;
        for (const auto& cls : report.classes)
          if (!hit[cls.id]) family.push_back(cls.representative);
      }
      return family;
    }
    case roots::Family::G2:
      throw std::invalid_argument(
          "g2 has no catalogued representative family; use classify representatives");
  }
  return family;
}

std::vector<int> family_class_ids(const ClassReport& report,
                                  const std::vector<AdmissibleSystem>& family) {
  std::vector<int> ids;
  std::vector<int> hits(report.classes.size() + 1, 0);
  for (const auto& f : family) {
    const int id = report.class_of_span(f.span);
    ids.push_back(id);
    ++hits[id];
  }
  for (const auto& cls : report.classes) {
    if (hits[cls.id] != 1)
      throw InvariantError("family does not meet class " + std::to_string(cls.id) +
                           " exactly once (" + std::to_string(hits[cls.id]) + " hits)");
  }
  return ids;
}

}  // namespace cartanstab::admissible
