#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "aigsynt/literal.hpp"

namespace aigsynt {

// Optional trailing header counts (bad states, invariant constraints,
// justice, fairness). Omitted fields default to 0.
struct ExtensionHeader {
  std::uint32_t b = 0;
  std::uint32_t c = 0;
  std::uint32_t j = 0;
  std::uint32_t f = 0;

  bool any() const { return b || c || j || f; }
  bool operator==(const ExtensionHeader&) const = default;
};

// "aag M I L O A [B C J F]"
struct Header {
  Var m = 0;
  std::uint32_t i = 0;
  std::uint32_t l = 0;
  std::uint32_t o = 0;
  std::uint32_t a = 0;
  ExtensionHeader ext;

  bool operator==(const Header&) const = default;
};

enum class Reset : std::uint8_t {
  Zero,               // default initial value 0
  One,                // initial value 1
  SelfUninitialized,  // reset literal equals the latch literal
};

struct LatchDef {
  Lit lit = 0;   // even
  Lit next = 0;  // update function literal
  Reset reset = Reset::Zero;

  bool operator==(const LatchDef&) const = default;
};

struct AndDef {
  Lit lhs = 0;  // even, defined exactly once
  Lit rhs0 = 0;
  Lit rhs1 = 0;

  bool operator==(const AndDef&) const = default;
};

enum class SymbolKind : std::uint8_t { Input, Latch, Output };

// Names a definition by its 0-based ordinal within its section, not by
// variable index.
struct SymbolEntry {
  SymbolKind kind = SymbolKind::Input;
  std::uint32_t position = 0;
  std::string name;

  bool operator==(const SymbolEntry&) const = default;
};

// How each variable is defined. Gate indexes point into Aig::gates.
enum class VarDef : std::uint8_t { Undefined, Constant, Input, Latch, Gate };

// Parsed and structurally checked circuit. Immutable after assembly; all
// operations on it are pure functions, so values can be shared freely
// across threads.
struct Aig {
  Header header;
  std::vector<Lit> inputs;
  std::vector<LatchDef> latches;
  std::vector<Lit> outputs;
  std::vector<AndDef> gates;
  std::vector<Lit> bads;        // bad-state literals (extension B)
  std::vector<Lit> constraints; // invariant constraints (extension C)
  std::vector<SymbolEntry> symbols;  // in file order
  std::vector<std::string> comments;

  // Filled in by assemble(): definition site per variable index (0..m) and
  // a topological order of gates (indexes into `gates`). When the gate
  // dependency graph has a cycle, `gates_acyclic` is false and the order is
  // only partial; evaluation and BDD construction require acyclicity.
  std::vector<VarDef> var_def;
  std::vector<std::uint32_t> def_index;  // ordinal within its section
  std::vector<std::uint32_t> gate_topo;
  bool gates_acyclic = true;

  VarDef def_of(Var v) const
  {
    return v < var_def.size() ? var_def[v] : VarDef::Undefined;
  }
  const AndDef* gate_of(Var v) const
  {
    return def_of(v) == VarDef::Gate ? &gates[def_index[v]] : nullptr;
  }
  const LatchDef* latch_of(Var v) const
  {
    return def_of(v) == VarDef::Latch ? &latches[def_index[v]] : nullptr;
  }
};

// A structural rule violated during assembly. `section`/`index` identify
// the offending definition so the parser can map it back to a line.
struct AssembleViolation {
  enum class Section : std::uint8_t {
    Head, Input, Latch, Output, Gate, Bad, Constraint, Symbol
  };
  std::string rule;
  std::string message;
  Section section = Section::Head;
  std::uint32_t index = 0;
};

struct AssembleOptions {
  // Keep the Aig value even when gates are cyclic or a variable is defined
  // more than once. The solution checker wants such values so it can report
  // the corresponding rule violations itself.
  bool defer_cycles = false;
  bool defer_duplicates = false;
};

struct AssembleResult {
  std::optional<Aig> aig;
  std::vector<AssembleViolation> violations;

  bool ok() const { return violations.empty() && aig.has_value(); }
};

// Structural checks over raw parts: counts match the header, literals stay
// within 2m+1, inputs/latch/gate definitions are even and unique, symbol
// positions are in range and unique, gates are acyclic. On success the
// returned Aig has var_def/gate_topo populated.
AssembleResult assemble_aig(Header header,
                            std::vector<Lit> inputs,
                            std::vector<LatchDef> latches,
                            std::vector<Lit> outputs,
                            std::vector<AndDef> gates,
                            std::vector<Lit> bads,
                            std::vector<Lit> constraints,
                            std::vector<SymbolEntry> symbols,
                            std::vector<std::string> comments,
                            const AssembleOptions& opts = {});

// Convenience for programmatic construction; throws std::invalid_argument
// listing the violations when the parts do not form a valid circuit.
Aig make_aig(Header header,
             std::vector<Lit> inputs,
             std::vector<LatchDef> latches,
             std::vector<Lit> outputs,
             std::vector<AndDef> gates,
             std::vector<SymbolEntry> symbols = {},
             std::vector<std::string> comments = {});

}  // namespace aigsynt
