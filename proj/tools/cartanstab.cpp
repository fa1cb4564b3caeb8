#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>

#include "CLI11.hpp"

#include "cartanstab/admissible.hpp"
#include "cartanstab/cache.hpp"
#include "cartanstab/errors.hpp"
#include "cartanstab/liealg.hpp"
#include "cartanstab/report_io.hpp"
#include "cartanstab/roots.hpp"
#include "cartanstab/stabilizer.hpp"
#include "cartanstab/version.hpp"

namespace {

using cartanstab::GuardError;
using cartanstab::InvariantError;
using cartanstab::roots::AlgebraKind;
using cartanstab::roots::Family;
namespace admissible = cartanstab::admissible;
namespace liealg = cartanstab::liealg;
namespace report = cartanstab::report;
namespace stab = cartanstab::stabilizer;

struct Options {
  std::string algebra;
  int rank = 0;
  int max_rank = 0;
  std::string format = "text";
  std::string cache_path;
};

int min_rank(Family family) {
  switch (family) {
    case Family::SL: return 2;
    case Family::SO_EVEN: return 2;
    case Family::G2: return 2;
    default: return 1;
  }
}

void emit(const Options& opt, const report::json& payload) {
  if (opt.format == "json")
    std::cout << report::dump(payload["json"]);
  else
    std::cout << payload["text"].get<std::string>();
}

/// Runs `compute` (which returns {json, text} payload + exit code), serving
/// and filling the JSON-lines cache when a path was given.
int with_cache(const Options& opt, const std::string& command,
               const std::function<std::pair<report::json, int>()>& compute) {
  std::optional<cartanstab::cache::CacheFile> cache;
  if (!opt.cache_path.empty()) cache.emplace(opt.cache_path);
  const cartanstab::cache::CacheKey key{opt.algebra, opt.rank, command};
  if (cache) {
    if (auto hit = cache->lookup(key)) {
      emit(opt, hit->payload);
      return hit->exit_code;
    }
  }
  auto [payload, exit_code] = compute();
  if (cache) cache->store(key, payload, exit_code);
  emit(opt, payload);
  return exit_code;
}

int run_classify(const Options& opt) {
  const AlgebraKind kind = AlgebraKind::from_name(opt.algebra, opt.rank);
  return with_cache(opt, "classify", [&] {
    const auto result = admissible::classify(kind);
    report::json payload;
    payload["json"] = report::class_report_json(result);
    payload["text"] = report::class_report_text(result);
    return std::make_pair(payload, 0);
  });
}

int run_stabilizer(const Options& opt) {
  const AlgebraKind kind = AlgebraKind::from_name(opt.algebra, opt.rank);
  return with_cache(opt, "stabilizer", [&] {
    const auto cmp = stab::compare_with_expected(kind);
    report::json payload;
    payload["json"] = report::stabilizer_json(cmp);
    payload["text"] = report::stabilizer_text(cmp);
    return std::make_pair(payload, cmp.verdict == stab::Verdict::MISMATCH ? 1 : 0);
  });
}

int run_verify(const Options& opt) {
  const AlgebraKind kind = AlgebraKind::from_name(opt.algebra, opt.rank);
  return with_cache(opt, "verify", [&] {
    const auto run = liealg::run_verification(kind);
    report::json payload;
    payload["json"] = report::verification_json(run);
    payload["text"] = report::verification_text(run);
    return std::make_pair(payload, run.all_ok ? 0 : 1);
  });
}

int run_table(const Options& opt) {
  const Family family = AlgebraKind::family_from_name(opt.algebra);
  int lo = min_rank(family);
  int hi = family == Family::G2 ? 2 : opt.max_rank;
  if (hi < lo) throw std::invalid_argument("--max-rank below the smallest valid rank");

  report::json rows = report::json::array();
  std::ostringstream text;
  text << "algebra rank classes stabilizer_order verdict\n";
  int exit_code = 0;
  for (int rank = lo; rank <= hi; ++rank) {
    const AlgebraKind kind = AlgebraKind::from_name(opt.algebra, rank);
    cartanstab::roots::check_weyl_guard(kind);
    const auto classes = admissible::classify(kind);
    std::string verdict = "-";
    uint64_t order = 0;
    try {
      const auto cmp = stab::compare_with_expected(kind);
      order = cmp.computed.order;
      verdict = stab::verdict_name(cmp.verdict);
      if (cmp.verdict == stab::Verdict::MISMATCH) exit_code = 1;
    } catch (const std::invalid_argument&) {
      // No catalogued claim for this rank; report the computed order only.
      auto family_systems = admissible::representative_family(kind);
      order = stab::family_stabilizer(kind, family_systems).order;
    }
    rows.push_back({{"rank", rank},
                    {"classes", classes.classes.size()},
                    {"stabilizer_order", order},
                    {"verdict", verdict}});
    text << opt.algebra << " " << rank << " " << classes.classes.size() << " " << order
         << " " << verdict << "\n";
  }
  report::json payload;
  payload["json"] = {{"algebra", opt.algebra}, {"rows", rows}};
  payload["text"] = text.str();
  emit(opt, payload);
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cartan subalgebra classes, Weyl stabilizers and exact matrix verification "
               "for split classical Lie algebras"};
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&](CLI::App* sub, bool need_rank) {
    sub->add_option("--algebra", opt.algebra, "sl, sp, so-odd, so-even or g2")->required();
    auto* rank = sub->add_option("--rank", opt.rank, "coordinate rank n");
    if (need_rank) rank->default_val(0);
    sub->add_option("--format", opt.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->default_val("text");
    sub->add_option("--cache", opt.cache_path, "JSON-lines result cache path");
  };

  CLI::App* classify = app.add_subcommand("classify", "conjugacy classes of Cartan subalgebras");
  add_common(classify, true);
  CLI::App* stabilizer =
      app.add_subcommand("stabilizer", "Weyl subgroup fixing every representative system");
  add_common(stabilizer, true);
  CLI::App* verify =
      app.add_subcommand("verify", "matrix-level check that lifted elements fix all Cartans");
  add_common(verify, true);
  CLI::App* table = app.add_subcommand("table", "per-rank summary");
  add_common(table, false);
  table->add_option("--max-rank", opt.max_rank, "largest rank in the table")->required();

  app.set_version_flag("--version", cartanstab::kEngineVersion);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (classify->parsed()) return run_classify(opt);
    if (stabilizer->parsed()) return run_stabilizer(opt);
    if (verify->parsed()) return run_verify(opt);
    if (table->parsed()) return run_table(opt);
  } catch (const GuardError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvariantError& e) {
    std::cerr << "invariant failure: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
