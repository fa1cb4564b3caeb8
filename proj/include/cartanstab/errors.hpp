#pragma once

#include <stdexcept>
#include <string>

namespace cartanstab {

/// Requested computation exceeds a hard size guard (Weyl enumeration bound,
/// matrix dimension bound). CLI maps this to exit code 2.
class GuardError : public std::runtime_error {
 public:
  explicit GuardError(const std::string& what) : std::runtime_error(what) {}
};

/// An internal invariant that must hold mathematically was violated at
/// runtime (non-abelian Cartan candidate, failed lift, ...). CLI maps this
/// to exit code 1.
class InvariantError : public std::runtime_error {
 public:
  explicit InvariantError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cartanstab
