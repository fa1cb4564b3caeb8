#pragma once

#include <string>

#include "json.hpp"  // vendored nlohmann/json

#include "cartanstab/admissible.hpp"
#include "cartanstab/liealg.hpp"
#include "cartanstab/stabilizer.hpp"

namespace cartanstab::report {

using json = nlohmann::json;

/// {"perm":[1-based images],"signs":[1,-1,...]} or {"matrix":[["a",...],...]}.
json weyl_to_json(const roots::WeylElement& w);
json span_to_json(const ratlin::SubspaceBasis& s);
json matrix_to_json(const ratlin::MatrixQ& m);

json class_report_json(const admissible::ClassReport& report);
std::string class_report_text(const admissible::ClassReport& report);

json stabilizer_json(const stabilizer::StabilizerComparison& cmp);
std::string stabilizer_text(const stabilizer::StabilizerComparison& cmp);

json verification_json(const liealg::VerificationRun& run);
std::string verification_text(const liealg::VerificationRun& run);

/// Serialized with sorted keys and fixed indentation, so identical data is
/// byte-identical.
std::string dump(const json& j);

}  // namespace cartanstab::report
