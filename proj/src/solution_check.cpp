#include "aigsynt/solution_check.hpp"

#include <algorithm>
#include <sstream>

#include "aigsynt/errors.hpp"
#include "json.hpp"

namespace aigsynt {

namespace {

// Canonical 1-based line numbers of candidate definitions (header is
// line 1, sections in file order).
struct LineMap {
  std::uint32_t inputs, latches, outputs, gates;

  explicit LineMap(const Aig& aig)
  {
    inputs = 2;
    latches = inputs + static_cast<std::uint32_t>(aig.inputs.size());
    outputs = latches + static_cast<std::uint32_t>(aig.latches.size());
    gates = outputs + static_cast<std::uint32_t>(aig.outputs.size() +
                                                 aig.bads.size() +
                                                 aig.constraints.size());
  }
};

struct RuleCheck {
  const SynthesisSpec& spec;
  const Aig& cand;
  LineMap lines;
  CheckReport report;

  RuleCheck(const SynthesisSpec& s, const Aig& c) : spec(s), cand(c), lines(c)
  {
  }

  void fail(const char* rule, std::string message,
            std::vector<std::uint32_t> at = {})
  {
    report.violations.push_back({rule, std::move(message), std::move(at)});
  }

  std::vector<Var> controllable_vars() const
  {
    std::vector<Var> vars;
    for (std::uint32_t pos : spec.controllable)
      vars.push_back(lit_var(spec.aig.inputs[pos]));
    return vars;
  }

  void check_header()
  {
    const Header& s = spec.aig.header;
    const Header& c = cand.header;
    std::uint32_t removed = static_cast<std::uint32_t>(spec.controllable.size());
    if (c.i + removed != s.i)
      fail("R1",
           "input count must drop by the " + std::to_string(removed) +
               " controllable inputs: expected " +
               std::to_string(s.i - removed) + ", header says " +
               std::to_string(c.i),
           {1});
    if (c.l < s.l)
      fail("R1", "latch count may not shrink", {1});
    if (c.a < s.a)
      fail("R1", "AND-gate count may not shrink", {1});
    if (c.o != s.o)
      fail("R1", "output count must stay unchanged", {1});
    if (c.m != c.i + c.l + c.a)
      fail("R1",
           "maximum variable index must equal I'+L'+A' = " +
               std::to_string(c.i + c.l + c.a) + ", header says " +
               std::to_string(c.m),
           {1});
    if (c.ext.any() || !cand.bads.empty() || !cand.constraints.empty())
      fail("R1", "solution header may not introduce extension properties", {1});
  }

  // R2/R3/R5 variant: original lines must form the exact prefix (latches,
  // gates) or the exact full section (inputs after removing controllables).
  bool check_inputs()
  {
    std::vector<Lit> expected;
    for (std::uint32_t pos : spec.uncontrollable)
      expected.push_back(spec.aig.inputs[pos]);
    if (cand.inputs == expected) return true;
    fail("R2",
         "input section must list exactly the uncontrollable inputs in their "
         "original order",
         {lines.inputs});
    return false;
  }

  bool check_latches()
  {
    const auto& orig = spec.aig.latches;
    bool ok = cand.latches.size() >= orig.size();
    for (std::size_t n = 0; ok && n < orig.size(); ++n)
      ok = cand.latches[n] == orig[n];
    if (ok) return true;
    fail("R3",
         "original latch definitions must be preserved verbatim, in order, "
         "before any new latches",
         {lines.latches});
    return false;
  }

  void check_outputs()
  {
    if (cand.outputs == spec.aig.outputs) return;
    fail("R4", "output definitions must be identical to the specification",
         {lines.outputs});
  }

  bool check_gates()
  {
    const auto& orig = spec.aig.gates;
    bool ok = cand.gates.size() >= orig.size();
    for (std::size_t n = 0; ok && n < orig.size(); ++n)
      ok = cand.gates[n] == orig[n];
    if (ok) return true;
    fail("R5",
         "original AND-gate definitions must be preserved verbatim, in "
         "order, before any new gates",
         {lines.gates});
    return false;
  }

  void check_symbols()
  {
    if (cand.symbols == spec.aig.symbols) return;
    fail("R9", "symbol table must remain unchanged");
  }

  // Classification plus R6/R7/R8; only meaningful once aligned.
  void check_new_definitions(const std::vector<VarInfo>& info)
  {
    std::vector<Var> cvars = controllable_vars();

    // R6 and stray duplicates. Definition count per variable across the
    // whole candidate; lenient parsing lets duplicates through to here.
    std::vector<std::uint32_t> def_count(cand.header.m + 1, 0);
    for (Lit in : cand.inputs) ++def_count[lit_var(in)];
    for (const LatchDef& l : cand.latches) ++def_count[lit_var(l.lit)];
    for (const AndDef& g : cand.gates) ++def_count[lit_var(g.lhs)];

    for (Var v : cvars) {
      std::uint32_t defs = v <= cand.header.m ? def_count[v] : 0;
      if (defs == 1 && info[v].redefined_controllable) continue;
      fail("R6",
           "controllable variable " + std::to_string(v) +
               " must be redefined exactly once as a new latch or new "
               "AND-gate (found " +
               std::to_string(defs) + " definitions)");
    }
    for (Var v = 1; v <= cand.header.m; ++v) {
      if (def_count[v] > 1 &&
          std::find(cvars.begin(), cvars.end(), v) == cvars.end())
        fail("duplicate-definition",
             "variable " + std::to_string(v) + " is defined " +
                 std::to_string(def_count[v]) + " times");
    }

    auto operand_legal = [&](Lit operand) {
      Var v = lit_var(operand);
      if (v > cand.header.m) return false;
      switch (info[v].cls) {
        case VarClass::Constant:
        case VarClass::OriginalInput:
        case VarClass::OriginalLatch:
        case VarClass::NewLatch:
        case VarClass::NewGate:
          return true;
        case VarClass::OriginalGate:
        case VarClass::Undefined:
          return false;
      }
      return false;
    };
    auto r7 = [&](Lit operand, const std::string& what, std::uint32_t line) {
      if (operand_legal(operand)) return;
      Var v = lit_var(operand);
      fail("R7",
           what + " reads literal " + std::to_string(operand) + " (" +
               var_class_name(v <= cand.header.m ? info[v].cls
                                                 : VarClass::Undefined) +
               "); only uncontrollable inputs, latches, new AND-gates and "
               "constants are allowed",
           {line});
    };

    std::size_t first_new_latch = spec.aig.latches.size();
    for (std::size_t n = first_new_latch; n < cand.latches.size(); ++n)
      r7(cand.latches[n].next,
         "new latch " + std::to_string(lit_var(cand.latches[n].lit)),
         lines.latches + static_cast<std::uint32_t>(n));
    std::size_t first_new_gate = spec.aig.gates.size();
    for (std::size_t n = first_new_gate; n < cand.gates.size(); ++n) {
      std::string what =
          "new AND-gate " + std::to_string(lit_var(cand.gates[n].lhs));
      std::uint32_t line = lines.gates + static_cast<std::uint32_t>(n);
      r7(cand.gates[n].rhs0, what, line);
      r7(cand.gates[n].rhs1, what, line);
    }

    check_new_gate_cycles(info, first_new_gate);
  }

  // R8: Kahn over the new-gate subgraph. Latches break sequential cycles
  // and R7 already bans original gates, so only new-gate edges matter.
  void check_new_gate_cycles(const std::vector<VarInfo>& info,
                             std::size_t first_new_gate)
  {
    std::size_t count = cand.gates.size() - first_new_gate;
    if (count == 0) return;

    // gate var -> dense index among new gates
    std::vector<std::int64_t> dense(cand.header.m + 1, -1);
    for (std::size_t n = 0; n < count; ++n)
      dense[lit_var(cand.gates[first_new_gate + n].lhs)] =
          static_cast<std::int64_t>(n);

    std::vector<std::uint32_t> indegree(count, 0);
    std::vector<std::vector<std::uint32_t>> dependents(count);
    for (std::size_t n = 0; n < count; ++n) {
      const AndDef& gate = cand.gates[first_new_gate + n];
      for (Lit rhs : {gate.rhs0, gate.rhs1}) {
        Var v = lit_var(rhs);
        if (v <= cand.header.m && info[v].cls == VarClass::NewGate &&
            dense[v] >= 0) {
          dependents[static_cast<std::size_t>(dense[v])].push_back(
              static_cast<std::uint32_t>(n));
          ++indegree[n];
        }
      }
    }
    std::vector<std::uint32_t> order;
    order.reserve(count);
    for (std::uint32_t n = 0; n < count; ++n)
      if (indegree[n] == 0) order.push_back(n);
    for (std::size_t head = 0; head < order.size(); ++head)
      for (std::uint32_t succ : dependents[order[head]])
        if (--indegree[succ] == 0) order.push_back(succ);
    if (order.size() == count) return;

    std::vector<std::uint32_t> cycle_lines;
    for (std::uint32_t n = 0; n < count; ++n)
      if (indegree[n] > 0)
        cycle_lines.push_back(lines.gates +
                              static_cast<std::uint32_t>(first_new_gate + n));
    fail("R8", "new AND-gates form a combinational cycle", cycle_lines);
  }
};

std::optional<std::vector<VarInfo>> classify_vars(const Aig& cand,
                                                  const SynthesisSpec& spec)
{
  // Requires alignment: original latches/gates are the section prefixes and
  // the input section is exactly the uncontrollable inputs.
  RuleCheck probe(spec, cand);
  if (!probe.check_inputs() || !probe.check_latches() || !probe.check_gates())
    return std::nullopt;

  std::vector<VarInfo> info(cand.header.m + 1);
  info[0].cls = VarClass::Constant;

  std::vector<bool> controllable(spec.aig.header.m + 1, false);
  for (std::uint32_t pos : spec.controllable)
    controllable[lit_var(spec.aig.inputs[pos])] = true;

  auto classify = [&](Var v, VarClass cls, bool is_new) {
    if (v > cand.header.m) return;
    info[v].cls = cls;
    if (is_new && v < controllable.size() && controllable[v])
      info[v].redefined_controllable = true;
  };

  for (Lit in : cand.inputs) classify(lit_var(in), VarClass::OriginalInput, false);
  for (std::size_t n = 0; n < cand.latches.size(); ++n)
    classify(lit_var(cand.latches[n].lit),
             n < spec.aig.latches.size() ? VarClass::OriginalLatch
                                         : VarClass::NewLatch,
             n >= spec.aig.latches.size());
  for (std::size_t n = 0; n < cand.gates.size(); ++n)
    classify(lit_var(cand.gates[n].lhs),
             n < spec.aig.gates.size() ? VarClass::OriginalGate
                                       : VarClass::NewGate,
             n >= spec.aig.gates.size());
  return info;
}

}  // namespace

const char* var_class_name(VarClass cls)
{
  switch (cls) {
    case VarClass::Constant: return "constant";
    case VarClass::OriginalInput: return "original-input";
    case VarClass::OriginalLatch: return "original-latch";
    case VarClass::OriginalGate: return "original-gate";
    case VarClass::NewLatch: return "new-latch";
    case VarClass::NewGate: return "new-gate";
    case VarClass::Undefined: return "undefined";
  }
  return "undefined";
}

std::vector<VarInfo> merged_dependency_closure(const Aig& candidate,
                                               const SynthesisSpec& spec)
{
  auto info = classify_vars(candidate, spec);
  if (!info)
    throw UnalignedCandidate(
        "candidate sections do not align with the specification (R2/R3/R5)");
  return std::move(*info);
}

CheckReport check_solution(const SynthesisSpec& spec, const Aig& candidate)
{
  RuleCheck chk(spec, candidate);
  chk.check_header();
  bool inputs_ok = chk.check_inputs();
  bool latches_ok = chk.check_latches();
  chk.check_outputs();
  bool gates_ok = chk.check_gates();
  chk.check_symbols();

  if (inputs_ok && latches_ok && gates_ok) {
    auto info = classify_vars(candidate, spec);
    chk.check_new_definitions(*info);
  }

  CheckReport report = std::move(chk.report);
  report.pass = report.violations.empty();
  report.delta.c = static_cast<std::uint32_t>(spec.controllable.size());
  report.delta.l = candidate.header.l >= spec.aig.header.l
                       ? candidate.header.l - spec.aig.header.l
                       : 0;
  report.delta.a = candidate.header.a >= spec.aig.header.a
                       ? candidate.header.a - spec.aig.header.a
                       : 0;
  return report;
}

std::string report_to_text(const CheckReport& report)
{
  std::ostringstream out;
  if (report.pass) {
    out << "solution shape OK (c=" << report.delta.c << ", l=" << report.delta.l
        << ", a=" << report.delta.a << ")\n";
    return out.str();
  }
  out << report.violations.size() << " violation"
      << (report.violations.size() == 1 ? "" : "s") << ":\n";
  for (const CheckViolation& v : report.violations) {
    out << "  [" << v.rule << "] " << v.message;
    if (!v.lines.empty()) {
      out << " (line";
      if (v.lines.size() > 1) out << "s";
      for (std::size_t n = 0; n < v.lines.size(); ++n)
        out << (n ? "," : " ") << v.lines[n];
      out << ")";
    }
    out << "\n";
  }
  return out.str();
}

std::string report_to_json(const CheckReport& report)
{
  nlohmann::json doc;
  doc["pass"] = report.pass;
  doc["delta"] = {{"c", report.delta.c},
                  {"l", report.delta.l},
                  {"a", report.delta.a}};
  doc["violations"] = nlohmann::json::array();
  for (const CheckViolation& v : report.violations)
    doc["violations"].push_back(
        {{"rule", v.rule}, {"message", v.message}, {"lines", v.lines}});
  return doc.dump(2) + "\n";
}

}  // namespace aigsynt
