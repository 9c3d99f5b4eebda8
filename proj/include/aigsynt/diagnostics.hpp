#pragma once

#include <cstdint>
#include <string>

namespace aigsynt {

// One rejected rule with the 1-based line it was detected on. Rule
// identifiers are stable strings; tests match on them.
struct ParseDiagnostic {
  std::uint32_t line = 0;
  std::string rule;
  std::string message;
};

// The complete set of rule identifiers a parse can emit.
namespace rules {
inline constexpr const char* bad_magic = "bad-magic";
inline constexpr const char* malformed_header = "malformed-header";
inline constexpr const char* malformed_line = "malformed-line";
inline constexpr const char* malformed_symbol = "malformed-symbol";
inline constexpr const char* malformed_reset = "malformed-reset";
inline constexpr const char* count_mismatch = "count-mismatch";
inline constexpr const char* odd_literal = "odd-literal";
inline constexpr const char* literal_out_of_range = "literal-out-of-range";
inline constexpr const char* duplicate_definition = "duplicate-definition";
inline constexpr const char* duplicate_symbol = "duplicate-symbol";
inline constexpr const char* symbol_out_of_range = "symbol-out-of-range";
inline constexpr const char* cyclic_gates = "cyclic-gates";
inline constexpr const char* unsupported_property_body =
    "unsupported-property-body";
}  // namespace rules

}  // namespace aigsynt
