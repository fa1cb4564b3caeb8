#include "cartanstab/stabilizer.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "cartanstab/errors.hpp"
#include "cartanstab/threads.hpp"

namespace cartanstab::stabilizer {

using ratlin::SubspaceBasis;

bool StabilizerReport::contains(const WeylElement& w) const {
  return std::binary_search(elements.begin(), elements.end(), w);
}

namespace {

/// Family members whose span no Weyl element can move (the zero span and
/// W-invariant spans) never reject anything; drop them from the scan and
/// order the rest by span dimension so cheap discriminating checks run
/// first. The accepted set is unchanged.
std::vector<const AdmissibleSystem*> scan_order(const AlgebraKind kind,
                                                const std::vector<AdmissibleSystem>& family) {
  const auto generators = roots::weyl_generators(kind);
  std::vector<const AdmissibleSystem*> checks;
  for (const auto& f : family) {
    bool invariant = true;
    for (const auto& g : generators) {
      if (!admissible::fixes(g, f)) {
        invariant = false;
        break;
      }
    }
    if (!invariant) checks.push_back(&f);
  }
  std::sort(checks.begin(), checks.end(),
            [](const AdmissibleSystem* a, const AdmissibleSystem* b) {
              return a->span.dim() < b->span.dim();
            });
  return checks;
}

bool fixes_all(const WeylElement& w, const std::vector<const AdmissibleSystem*>& checks) {
  for (const AdmissibleSystem* f : checks)
    if (!admissible::fixes(w, *f)) return false;
  return true;
}

void verify_subgroup(AlgebraKind kind, const std::vector<WeylElement>& elements) {
  const auto id = roots::weyl_identity(kind);
  auto member = [&](const WeylElement& w) {
    return std::binary_search(elements.begin(), elements.end(), w);
  };
  if (!member(id)) throw InvariantError("stabilizer does not contain the identity");
  for (const auto& a : elements) {
    if (!member(roots::inverse(a)))
      throw InvariantError("stabilizer not closed under inverses");
    for (const auto& b : elements)
      if (!member(roots::compose(a, b)))
        throw InvariantError("stabilizer not closed under composition");
  }
}

std::vector<WeylElement> pick_generators(AlgebraKind kind,
                                         const std::vector<WeylElement>& elements) {
  std::vector<WeylElement> gens;
  std::vector<WeylElement> closed = {roots::weyl_identity(kind)};
  for (const auto& w : elements) {
    if (std::find(closed.begin(), closed.end(), w) != closed.end()) continue;
    gens.push_back(w);
    closed = group_closure(kind, gens);
    if (closed.size() == elements.size()) break;
  }
  return gens;
}

}  // namespace

std::vector<WeylElement> group_closure(AlgebraKind kind,
                                       const std::vector<WeylElement>& elements) {
  std::set<WeylElement> seen;
  seen.insert(roots::weyl_identity(kind));
  std::vector<WeylElement> frontier(seen.begin(), seen.end());
  for (const auto& w : elements)
    if (seen.insert(w).second) frontier.push_back(w);
  std::vector<WeylElement> gens(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<WeylElement> next;
    for (const auto& w : frontier) {
      for (const auto& g : gens) {
        WeylElement c = roots::compose(g, w);
        if (seen.insert(c).second) next.push_back(c);
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

StabilizerReport family_stabilizer(AlgebraKind kind,
                                   const std::vector<AdmissibleSystem>& family) {
  roots::check_weyl_guard(kind);
  if (family.empty()) throw std::invalid_argument("family_stabilizer: empty family");
  for (const auto& f : family)
    if (f.kind != kind) throw std::invalid_argument("family_stabilizer: kind mismatch");

  const auto checks = scan_order(kind, family);
  const uint64_t order = roots::weyl_order(kind);
  const int workers = order > 100000 ? thread_budget() : 1;

  std::vector<WeylElement> found;
  if (workers <= 1) {
    roots::WeylEnumerator en(kind);
    WeylElement w;
    while (en.next(w))
      if (fixes_all(w, checks)) found.push_back(w);
  } else {
    std::vector<std::vector<WeylElement>> partial(workers);
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) {
      pool.emplace_back([&, t] {
        roots::WeylEnumerator en(kind);
        WeylElement w;
        uint64_t index = 0;
        while (en.next(w)) {
          if (index++ % workers != static_cast<uint64_t>(t)) continue;
          if (fixes_all(w, checks)) partial[t].push_back(w);
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& p : partial) found.insert(found.end(), p.begin(), p.end());
  }
  std::sort(found.begin(), found.end());
  verify_subgroup(kind, found);

  StabilizerReport report;
  report.kind = kind;
  report.family = family;
  report.order = found.size();
  report.generators_hint = pick_generators(kind, found);
  report.elements = std::move(found);
  return report;
}

namespace {

std::vector<int> upto(int count) {
  std::vector<int> v(count);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

}  // namespace

StabilizerClaim expected_stabilizer(AlgebraKind kind) {
  const int n = kind.rank;
  StabilizerClaim claim;
  claim.kind = kind;
  switch (kind.family) {
    case roots::Family::SL: {
      std::vector<WeylElement> gens;
      for (int i = 0; 2 * i + 1 < n; ++i)
        gens.push_back(roots::weyl_transposition(kind, 2 * i, 2 * i + 1));
      for (auto& w : group_closure(kind, gens))
        if (!w.is_identity()) claim.nontrivial.push_back(std::move(w));
      claim.source = "catalog:sl";
      claim.description =
          "products of the adjacent transpositions (2i-1, 2i); order 2^floor(n/2)";
      break;
    }
    case roots::Family::SP:
      claim.nontrivial.push_back(roots::weyl_flip_all(kind));
      claim.source = "catalog:sp";
      claim.description = "unique nontrivial element: the global sign flip";
      break;
    case roots::Family::SO_ODD:
      if (n % 2 == 0) {
        claim.nontrivial.push_back(roots::weyl_flip_all(kind));
        claim.description = "unique nontrivial element: the global sign flip";
      } else {
        claim.nontrivial.push_back(roots::weyl_sign_flip(kind, {n - 1}));
        claim.nontrivial.push_back(roots::weyl_sign_flip(kind, upto(n - 1)));
        claim.nontrivial.push_back(roots::weyl_flip_all(kind));
        claim.description =
            "three nontrivial elements: flip e_n, flip e_1..e_(n-1), flip all";
      }
      claim.source = "catalog:so-odd";
      break;
    case roots::Family::SO_EVEN:
      if (n == 4 || n == 5) {
        WeylElement perm = roots::weyl_transposition(kind, 0, 1);
        std::swap(perm.images[2], perm.images[3]);
        claim.nontrivial.push_back(std::move(perm));
        claim.nontrivial.push_back(roots::weyl_sign_flip(kind, {0, 1, 2, 3}));
        claim.closure_completes_claim = true;
        claim.description =
            "(1 2)(3 4) and the sign flip of e_1..e_4; products omitted from the list";
      } else if (n >= 6 && n % 2 == 0) {
        claim.nontrivial.push_back(roots::weyl_flip_all(kind));
        claim.description = "unique nontrivial element: the global sign flip";
      } else if (n >= 7) {
        claim.nontrivial.push_back(roots::weyl_sign_flip(kind, upto(n - 1)));
        claim.description = "unique nontrivial element: the sign flip of e_1..e_(n-1)";
      } else {
        throw std::invalid_argument("no catalogued stabilizer claim for " + kind.display());
      }
      claim.source = "catalog:so-even";
      break;
    case roots::Family::G2: {
      WeylElement minus_id;
      minus_id.kind = kind;
      minus_id.mat = {-1, 0, 0, -1};
      claim.nontrivial.push_back(std::move(minus_id));
      claim.source = "catalog:g2";
      claim.description = "the center of the Weyl group: identity and -identity";
      break;
    }
  }
  // Degenerate ranks can make catalogued formulas collide with the identity
  // or with each other (so-odd n = 1); canonicalize the claim set.
  std::sort(claim.nontrivial.begin(), claim.nontrivial.end());
  claim.nontrivial.erase(std::unique(claim.nontrivial.begin(), claim.nontrivial.end()),
                         claim.nontrivial.end());
  std::erase_if(claim.nontrivial, [](const WeylElement& w) { return w.is_identity(); });
  return claim;
}

StabilizerComparison compare_with_expected(AlgebraKind kind) {
  StabilizerComparison cmp;
  cmp.claimed = expected_stabilizer(kind);

  std::vector<AdmissibleSystem> family;
  std::vector<int> family_ids;
  if (kind.family == roots::Family::G2) {
    const auto report = admissible::classify(kind);
    for (const auto& cls : report.classes) {
      family.push_back(cls.representative);
      family_ids.push_back(cls.id);
    }
  } else {
    family = admissible::representative_family(kind);
    const auto report = admissible::classify(kind);
    family_ids = admissible::family_class_ids(report, family);
  }
  cmp.computed = family_stabilizer(kind, family);
  cmp.computed.family_class_ids = std::move(family_ids);

  std::vector<WeylElement> computed_nontrivial;
  for (const auto& w : cmp.computed.elements)
    if (!w.is_identity()) computed_nontrivial.push_back(w);

  auto render = [](const std::vector<WeylElement>& ws) {
    std::ostringstream os;
    for (size_t i = 0; i < ws.size(); ++i) os << (i ? "; " : "") << ws[i].str();
    return os.str();
  };

  if (computed_nontrivial == cmp.claimed.nontrivial) {
    cmp.verdict = Verdict::MATCH;
    return cmp;
  }
  std::vector<WeylElement> closure = group_closure(kind, cmp.claimed.nontrivial);
  std::sort(closure.begin(), closure.end());
  if (cmp.computed.elements == closure &&
      closure.size() > cmp.claimed.nontrivial.size() + 1) {
    cmp.verdict = Verdict::SUPERSET;
    cmp.detail = "computed group is the closure of the claimed elements; extra: ";
    std::vector<WeylElement> extra;
    for (const auto& w : computed_nontrivial)
      if (!std::binary_search(cmp.claimed.nontrivial.begin(),
                              cmp.claimed.nontrivial.end(), w))
        extra.push_back(w);
    cmp.detail += render(extra);
    return cmp;
  }
  cmp.verdict = Verdict::MISMATCH;
  cmp.detail = "computed nontrivial [" + render(computed_nontrivial) + "] vs claimed [" +
               render(cmp.claimed.nontrivial) + "]";
  return cmp;
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::MATCH: return "MATCH";
    case Verdict::SUPERSET: return "SUPERSET";
    case Verdict::MISMATCH: return "MISMATCH";
  }
  return "?";
}

}  // namespace cartanstab::stabilizer
