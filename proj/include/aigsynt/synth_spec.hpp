#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "aigsynt/aig.hpp"

namespace aigsynt {

// Reserved symbol-name prefix marking inputs the controller drives.
inline constexpr std::string_view controllable_prefix = "controllable_";

bool is_controllable_name(std::string_view name);

// Input partition of a single-output specification. Positions are 0-based
// ordinals into Aig::inputs; together the two sets cover every input.
struct SynthesisSpec {
  Aig aig;
  std::vector<std::uint32_t> controllable;
  std::vector<std::uint32_t> uncontrollable;
};

struct ClassifyResult {
  std::optional<SynthesisSpec> spec;
  std::string error;  // empty on success
  std::vector<std::string> warnings;

  bool ok() const { return spec.has_value(); }
};

// Splits inputs by the reserved prefix. Inputs without a symbol entry are
// environment-controlled. Requires exactly one output and no extension
// properties; latch or output symbols carrying the prefix only warn.
ClassifyResult classify(const Aig& aig);

// Selection for mark_controllable: input positions or symbol names.
using InputSelector = std::variant<std::uint32_t, std::string>;

struct MarkResult {
  std::optional<Aig> aig;
  std::string error;
  std::vector<std::string> warnings;

  bool ok() const { return aig.has_value(); }
};

// Renames the selected inputs by prepending the reserved prefix, creating
// `controllable_<position>` entries for inputs that had no name. Everything
// outside the symbol table is left untouched. Already-controllable inputs
// are kept as they are, with a warning.
MarkResult mark_controllable(const Aig& aig,
                             const std::vector<InputSelector>& selection);

}  // namespace aigsynt
