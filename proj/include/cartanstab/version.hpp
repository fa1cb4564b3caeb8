#pragma once

namespace cartanstab {

inline constexpr const char* kEngineVersion = "0.1.0";

}  // namespace cartanstab
