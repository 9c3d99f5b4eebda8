#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "aigsynt/aig.hpp"
#include "aigsynt/synth_spec.hpp"

namespace aigsynt {

// New-line counts derived from the candidate header: c controllable inputs
// removed, l latches and a AND-gates added.
struct HeaderDelta {
  std::uint32_t c = 0;
  std::uint32_t l = 0;
  std::uint32_t a = 0;

  bool operator==(const HeaderDelta&) const = default;
};

struct CheckViolation {
  std::string rule;     // "R1".."R9", or "duplicate-definition"
  std::string message;
  std::vector<std::uint32_t> lines;  // canonical candidate line numbers
};

struct CheckReport {
  bool pass = false;
  std::vector<CheckViolation> violations;
  HeaderDelta delta;
};

// Role of each candidate variable relative to the specification.
enum class VarClass : std::uint8_t {
  Constant,
  OriginalInput,  // uncontrollable input kept from the spec
  OriginalLatch,
  OriginalGate,
  NewLatch,
  NewGate,
  Undefined,
};

struct VarInfo {
  VarClass cls = VarClass::Undefined;
  // True for controllable input variables that reappear as a new latch or
  // new gate definition.
  bool redefined_controllable = false;
};

// Decides whether `candidate` has the legal shape of a solution for `spec`:
//
//   R1  header arithmetic  I' = I-c, L' >= L, A' >= A, M' = I'+L'+A'
//   R2  uncontrollable input lines unchanged, controllable ones removed
//   R3  original latch lines unchanged and first, new latches after them
//   R4  output list identical
//   R5  original AND-gate lines unchanged and first, new gates after them
//   R6  every controllable variable redefined exactly once (new latch/gate)
//   R7  new definitions only read uncontrollable inputs, latches, new gates
//       and constants, never original AND-gates
//   R8  new AND-gates are free of combinational cycles
//   R9  symbol table identical
//
// All failures are reported as violations; nothing throws. Rules R6-R8 are
// skipped when R2/R3/R5 misalignment makes variable classification
// meaningless. Candidates are expected from parse_ascii with cycles and
// duplicate definitions deferred; a duplicate definition of a
// non-controllable variable is reported under "duplicate-definition".
CheckReport check_solution(const SynthesisSpec& spec, const Aig& candidate);

// Classification table for vars 0..M' used by rules R6-R8. Throws
// UnalignedCandidate when R2/R3/R5 alignment fails.
std::vector<VarInfo> merged_dependency_closure(const Aig& candidate,
                                               const SynthesisSpec& spec);

const char* var_class_name(VarClass cls);

// Human-readable and machine-readable renderings of a report.
std::string report_to_text(const CheckReport& report);
std::string report_to_json(const CheckReport& report);

}  // namespace aigsynt
