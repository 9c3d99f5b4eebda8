#include "aigsynt/aig.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "aigsynt/diagnostics.hpp"

namespace aigsynt {

namespace {

using Section = AssembleViolation::Section;

struct Checker {
  const Header& header;
  std::vector<AssembleViolation>& out;

  void violation(const char* rule, std::string message, Section section,
                 std::uint32_t index)
  {
    out.push_back({rule, std::move(message), section, index});
  }

  bool lit_in_range(Lit l, Section section, std::uint32_t index)
  {
    if (l <= max_lit(header.m)) return true;
    violation(rules::literal_out_of_range,
              "literal " + std::to_string(l) + " exceeds 2*" +
                  std::to_string(header.m) + "+1",
              section, index);
    return false;
  }
};

}  // namespace

AssembleResult assemble_aig(Header header,
                            std::vector<Lit> inputs,
                            std::vector<LatchDef> latches,
                            std::vector<Lit> outputs,
                            std::vector<AndDef> gates,
                            std::vector<Lit> bads,
                            std::vector<Lit> constraints,
                            std::vector<SymbolEntry> symbols,
                            std::vector<std::string> comments,
                            const AssembleOptions& opts)
{
  AssembleResult result;
  Checker chk{header, result.violations};

  if (inputs.size() != header.i)
    chk.violation(rules::count_mismatch,
                  "header announces " + std::to_string(header.i) +
                      " inputs, body has " + std::to_string(inputs.size()),
                  Section::Head, 0);
  if (latches.size() != header.l)
    chk.violation(rules::count_mismatch, "latch count does not match header",
                  Section::Head, 0);
  if (outputs.size() != header.o)
    chk.violation(rules::count_mismatch, "output count does not match header",
                  Section::Head, 0);
  if (gates.size() != header.a)
    chk.violation(rules::count_mismatch, "AND-gate count does not match header",
                  Section::Head, 0);
  if (bads.size() != header.ext.b || constraints.size() != header.ext.c)
    chk.violation(rules::count_mismatch,
                  "extension property count does not match header",
                  Section::Head, 0);

  // Definition uniqueness across inputs, latch literals and gate left-hand
  // sides. Variable 0 is the constant and can never be defined.
  std::vector<VarDef> var_def(header.m + 1, VarDef::Undefined);
  std::vector<std::uint32_t> def_index(header.m + 1, 0);
  var_def[0] = VarDef::Constant;

  auto define = [&](Lit lit, VarDef kind, std::uint32_t index,
                    Section section) {
    if (lit_sign(lit)) {
      chk.violation(rules::odd_literal,
                    std::string(section == Section::Input ? "input"
                                : section == Section::Latch ? "latch"
                                                            : "AND-gate") +
                        " literal must be even",
                    section, index);
      return;
    }
    if (!chk.lit_in_range(lit, section, index)) return;
    Var v = lit_var(lit);
    if (var_def[v] != VarDef::Undefined) {
      chk.violation(rules::duplicate_definition,
                    "variable " + std::to_string(v) + " defined twice",
                    section, index);
      if (!opts.defer_duplicates) return;
      // Keep the first definition; the checker classifies the second.
      return;
    }
    var_def[v] = kind;
    def_index[v] = index;
  };

  for (std::uint32_t n = 0; n < inputs.size(); ++n)
    define(inputs[n], VarDef::Input, n, Section::Input);
  for (std::uint32_t n = 0; n < latches.size(); ++n) {
    define(latches[n].lit, VarDef::Latch, n, Section::Latch);
    chk.lit_in_range(latches[n].next, Section::Latch, n);
  }
  for (std::uint32_t n = 0; n < gates.size(); ++n) {
    define(gates[n].lhs, VarDef::Gate, n, Section::Gate);
    chk.lit_in_range(gates[n].rhs0, Section::Gate, n);
    chk.lit_in_range(gates[n].rhs1, Section::Gate, n);
  }
  for (std::uint32_t n = 0; n < outputs.size(); ++n)
    chk.lit_in_range(outputs[n], Section::Output, n);
  for (std::uint32_t n = 0; n < bads.size(); ++n)
    chk.lit_in_range(bads[n], Section::Bad, n);
  for (std::uint32_t n = 0; n < constraints.size(); ++n)
    chk.lit_in_range(constraints[n], Section::Constraint, n);

  // Symbol ordinals index definition order and must be unique per kind.
  {
    std::vector<std::vector<bool>> seen(3);
    seen[0].assign(inputs.size(), false);
    seen[1].assign(latches.size(), false);
    seen[2].assign(outputs.size(), false);
    for (std::uint32_t n = 0; n < symbols.size(); ++n) {
      const SymbolEntry& s = symbols[n];
      std::size_t kind = static_cast<std::size_t>(s.kind);
      std::size_t limit = seen[kind].size();
      if (s.position >= limit) {
        chk.violation(rules::symbol_out_of_range,
                      "symbol ordinal " + std::to_string(s.position) +
                          " out of range",
                      Section::Symbol, n);
        continue;
      }
      if (seen[kind][s.position]) {
        chk.violation(rules::duplicate_symbol,
                      "duplicate symbol position " + std::to_string(s.position),
                      Section::Symbol, n);
        continue;
      }
      seen[kind][s.position] = true;
    }
  }

  // Kahn's algorithm over gate-to-gate dependencies. Definition order in
  // the file is irrelevant; only true cycles are rejected.
  std::vector<std::uint32_t> topo;
  bool acyclic = true;
  {
    std::uint32_t n_gates = static_cast<std::uint32_t>(gates.size());
    std::vector<std::uint32_t> indegree(n_gates, 0);
    std::vector<std::vector<std::uint32_t>> dependents(n_gates);
    auto gate_index_of = [&](Lit l) -> std::int64_t {
      Var v = lit_var(l);
      if (v <= header.m && var_def[v] == VarDef::Gate) return def_index[v];
      return -1;
    };
    for (std::uint32_t n = 0; n < n_gates; ++n) {
      for (Lit rhs : {gates[n].rhs0, gates[n].rhs1}) {
        std::int64_t dep = gate_index_of(rhs);
        if (dep >= 0) {
          dependents[static_cast<std::uint32_t>(dep)].push_back(n);
          ++indegree[n];
        }
      }
    }
    topo.reserve(n_gates);
    for (std::uint32_t n = 0; n < n_gates; ++n)
      if (indegree[n] == 0) topo.push_back(n);
    for (std::size_t head = 0; head < topo.size(); ++head)
      for (std::uint32_t succ : dependents[topo[head]])
        if (--indegree[succ] == 0) topo.push_back(succ);
    if (topo.size() != n_gates) {
      acyclic = false;
      chk.violation(rules::cyclic_gates,
                    "AND-gate definitions form a combinational cycle",
                    Section::Gate, 0);
    }
  }

  bool fatal = false;
  for (const AssembleViolation& v : result.violations) {
    if (v.rule == rules::cyclic_gates && opts.defer_cycles) continue;
    if (v.rule == rules::duplicate_definition && opts.defer_duplicates)
      continue;
    fatal = true;
  }
  if (fatal) return result;

  Aig aig;
  aig.header = header;
  aig.inputs = std::move(inputs);
  aig.latches = std::move(latches);
  aig.outputs = std::move(outputs);
  aig.gates = std::move(gates);
  aig.bads = std::move(bads);
  aig.constraints = std::move(constraints);
  aig.symbols = std::move(symbols);
  aig.comments = std::move(comments);
  aig.var_def = std::move(var_def);
  aig.def_index = std::move(def_index);
  aig.gate_topo = std::move(topo);
  aig.gates_acyclic = acyclic;
  result.aig = std::move(aig);
  return result;
}

Aig make_aig(Header header,
             std::vector<Lit> inputs,
             std::vector<LatchDef> latches,
             std::vector<Lit> outputs,
             std::vector<AndDef> gates,
             std::vector<SymbolEntry> symbols,
             std::vector<std::string> comments)
{
  AssembleResult r =
      assemble_aig(header, std::move(inputs), std::move(latches),
                   std::move(outputs), std::move(gates), {}, {},
                   std::move(symbols), std::move(comments));
  if (!r.ok()) {
    std::ostringstream msg;
    msg << "invalid circuit:";
    for (const AssembleViolation& v : r.violations)
      msg << " [" << v.rule << "] " << v.message << ";";
    throw std::invalid_argument(msg.str());
  }
  return std::move(*r.aig);
}

}  // namespace aigsynt
