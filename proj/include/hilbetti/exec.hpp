#pragma once

namespace hilbetti {

/// Execution policy for the heavy kernels (inclusion-exclusion sums, box
/// scans, enumeration searches). Every kernel has a serial implementation
/// that is the reference for the OpenMP one; both must produce identical
/// results, which the test suite asserts.
enum class Exec {
    Serial,
    Parallel,
};

}  // namespace hilbetti
