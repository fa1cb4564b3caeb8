#pragma once

namespace cartanstab {

/// Worker count for internal parallelism. Reads CARTANSTAB_THREADS; 0 or
/// unset means auto (hardware concurrency). Always at least 1.
int thread_budget();

}  // namespace cartanstab
