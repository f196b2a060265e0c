#pragma once

#include <stdexcept>

namespace driftlens {

// Bad inputs or violated invariants (bad config, malformed file, shape mismatch).
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Numeric failure mid-computation (non-finite loss, non-finite gradient).
struct ComputeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Filesystem and serialization failures, including checksum mismatches.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace driftlens
