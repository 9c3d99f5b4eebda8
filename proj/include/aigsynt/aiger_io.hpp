#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "aigsynt/aig.hpp"
#include "aigsynt/diagnostics.hpp"

namespace aigsynt {

struct ParseOptions {
  // Deferred rules do not fail the parse; the value is kept and the
  // diagnostics land in ParseResult::deferred. The solution checker uses
  // this to report combinational loops and double redefinitions under its
  // own rule numbers.
  bool defer_cycles = false;
  bool defer_duplicates = false;
};

struct ParseResult {
  std::optional<Aig> aig;
  std::vector<ParseDiagnostic> diagnostics;
  std::vector<ParseDiagnostic> deferred;

  bool ok() const { return aig.has_value() && diagnostics.empty(); }
};

// Reads the ASCII AIGER format, version 20071012, with reset-literal and
// B/C/J/F header extensions. Fields are separated by blanks; the parser
// tolerates repeated blanks and trailing carriage returns. Justice and
// fairness sections are not supported and rejected with a dedicated
// diagnostic. Variable indices are capped at 2^26 and larger headers are
// rejected as malformed.
ParseResult parse_ascii(std::string_view text, const ParseOptions& opts = {});

// Canonical serialization: single spaces, '\n' line ends, reset field
// omitted when Zero, extension counts emitted up to the last nonzero one,
// symbols ordered inputs/latches/outputs by position. parse(write(a)) is
// structurally equal to a, and write is a fixpoint on its own output.
std::string write_ascii(const Aig& aig);

ParseResult parse_file(const std::string& path, const ParseOptions& opts = {});
void write_file(const Aig& aig, const std::string& path);

}  // namespace aigsynt
