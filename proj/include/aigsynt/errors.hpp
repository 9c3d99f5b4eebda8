#pragma once

#include <stdexcept>
#include <string>

namespace aigsynt {

// A configured resource cap was hit (BDD nodes, reachability steps,
// wall-clock budget). Callers map this to their resource verdict.
struct ResourceLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NodeLimitError : ResourceLimitError {
  explicit NodeLimitError(std::size_t cap)
      : ResourceLimitError("BDD node limit of " + std::to_string(cap) +
                           " nodes exceeded")
  {
  }
};

// Handles from different BDD managers were mixed in one operation.
struct ManagerMismatchError : std::logic_error {
  ManagerMismatchError()
      : std::logic_error("BDD handles belong to different managers")
  {
  }
};

// The candidate does not line up with the specification (rules R2/R3/R5),
// so variables cannot be classified.
struct UnalignedCandidate : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Circuit shape outside what this operation supports (multiple outputs,
// uninitialized latches, extension properties).
struct UnsupportedCircuit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace aigsynt
