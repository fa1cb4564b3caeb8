#include "cartanstab/report_io.hpp"

#include <sstream>

namespace cartanstab::report {

json weyl_to_json(const roots::WeylElement& w) {
  json j;
  if (w.is_g2()) {
    j["matrix"] = json::array();
    for (int r = 0; r < 2; ++r) {
      json row = json::array();
      for (int c = 0; c < 2; ++c) row.push_back(std::to_string(w.mat[2 * r + c]));
      j["matrix"].push_back(row);
    }
    return j;
  }
  json perm = json::array();
  for (int img : w.images) perm.push_back(img + 1);
  j["perm"] = perm;
  j["signs"] = w.signs;
  return j;
}

json span_to_json(const ratlin::SubspaceBasis& s) {
  json rows = json::array();
  for (int r = 0; r < s.dim(); ++r) {
    json row = json::array();
    for (const auto& x : s.basis_row(r)) row.push_back(ratlin::to_string(x));
    rows.push_back(row);
  }
  return rows;
}

json matrix_to_json(const ratlin::MatrixQ& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(ratlin::to_string(m.at(r, c)));
    rows.push_back(row);
  }
  return rows;
}

json class_report_json(const admissible::ClassReport& report) {
  json j;
  j["algebra"] = report.kind.name();
  j["rank"] = report.kind.rank;
  j["classes"] = json::array();
  for (const auto& cls : report.classes) {
    json c;
    c["id"] = cls.id;
    c["roots"] = cls.representative.roots;
    c["vector_part_dim"] = cls.vector_part_dim;
    c["orbit_size_spans"] = cls.orbit_size_spans;
    c["span"] = span_to_json(cls.representative.span);
    j["classes"].push_back(c);
  }
  return j;
}

std::string class_report_text(const admissible::ClassReport& report) {
  std::ostringstream os;
  os << report.kind.display() << ": " << report.classes.size()
     << " conjugacy classes of Cartan subalgebras\n";
  for (const auto& cls : report.classes) {
    os << "  class " << cls.id << ": representative " << cls.representative.str()
       << ", vector part dim " << cls.vector_part_dim << ", toroidal dim "
       << cls.representative.roots.size() << ", span orbit size " << cls.orbit_size_spans
       << "\n";
  }
  return os.str();
}

json stabilizer_json(const stabilizer::StabilizerComparison& cmp) {
  json j;
  j["algebra"] = cmp.computed.kind.name();
  j["rank"] = cmp.computed.kind.rank;
  j["order"] = cmp.computed.order;
  j["elements"] = json::array();
  for (const auto& w : cmp.computed.elements) j["elements"].push_back(weyl_to_json(w));
  j["generators_hint"] = json::array();
  for (const auto& w : cmp.computed.generators_hint)
    j["generators_hint"].push_back(weyl_to_json(w));
  j["family_used"] = cmp.computed.family_class_ids;
  j["verdict"] = stabilizer::verdict_name(cmp.verdict);
  if (!cmp.detail.empty()) j["detail"] = cmp.detail;
  j["claim"] = {{"source", cmp.claimed.source},
                {"description", cmp.claimed.description}};
  return j;
}

std::string stabilizer_text(const stabilizer::StabilizerComparison& cmp) {
  std::ostringstream os;
  os << cmp.computed.kind.display() << ": stabilizer of the representative family has order "
     << cmp.computed.order << "\n";
  for (const auto& w : cmp.computed.elements) os << "  " << w.str() << "\n";
  os << "expected: " << cmp.claimed.description << "\n";
  os << "verdict: " << stabilizer::verdict_name(cmp.verdict) << "\n";
  if (!cmp.detail.empty()) os << "detail: " << cmp.detail << "\n";
  return os.str();
}

json verification_json(const liealg::VerificationRun& run) {
  json j;
  j["algebra"] = run.kind.name();
  j["rank"] = run.kind.rank;
  j["cartans"] = json::array();
  for (const auto& c : run.cartans) {
    j["cartans"].push_back({{"class_id", c.class_id},
                            {"dim", c.dim},
                            {"toroidal_dim", c.toroidal_dim},
                            {"is_cartan", c.cartan_ok}});
  }
  j["k_elements"] = json::array();
  for (const auto& k : run.k_elements) {
    j["k_elements"].push_back({{"matrix", matrix_to_json(k.k)},
                               {"induced_weyl", weyl_to_json(k.w)},
                               {"round_trip_ok", k.round_trip_ok},
                               {"fixes_all", k.fixes_all}});
  }
  if (run.negative) {
    j["negative_control"] = {{"matrix", matrix_to_json(run.negative->k)},
                             {"induced_weyl", weyl_to_json(run.negative->w)},
                             {"fixes_all", run.negative->fixes_all}};
  }
  j["stabilizer_order"] = run.stab.order;
  j["all_ok"] = run.all_ok;
  j["caveats"] = json::array(
      {"K membership certified as form-preserving, orthogonal, det 1; membership in the "
       "identity component is not certified"});
  return j;
}

std::string verification_text(const liealg::VerificationRun& run) {
  std::ostringstream os;
  os << run.kind.display() << ": " << run.cartans.size() << " class Cartan subalgebras, "
     << "stabilizer order " << run.stab.order << "\n";
  for (const auto& c : run.cartans)
    os << "  class " << c.class_id << ": dim " << c.dim << " (toroidal " << c.toroidal_dim
       << ") " << (c.cartan_ok ? "ok" : "FAIL") << "\n";
  for (const auto& k : run.k_elements)
    os << "  lift of " << k.w.str() << ": round trip " << (k.round_trip_ok ? "ok" : "FAIL")
       << ", fixes all Cartans " << (k.fixes_all ? "yes" : "NO") << "\n";
  if (run.negative)
    os << "  negative control " << run.negative->w.str() << ": fixes all Cartans "
       << (run.negative->fixes_all ? "YES (unexpected)" : "no (expected)") << "\n";
  os << (run.all_ok ? "verification passed" : "VERIFICATION FAILED") << "\n";
  return os.str();
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace cartanstab::report
