#include "aigsynt/eval.hpp"

#include <cassert>
#include <stdexcept>

namespace aigsynt {

Assignment eval_combinational(const Aig& aig, const Bits& latch_values,
                              const Bits& input_values)
{
  if (latch_values.size() != aig.latches.size() ||
      input_values.size() != aig.inputs.size())
    throw std::invalid_argument("bit vector size does not match circuit");
  if (!aig.gates_acyclic)
    throw std::invalid_argument("cannot evaluate a cyclic circuit");

  Assignment a(aig.header.m + 1);
  for (std::size_t n = 0; n < aig.inputs.size(); ++n)
    a.set_var(lit_var(aig.inputs[n]), input_values[n] != 0);
  for (std::size_t n = 0; n < aig.latches.size(); ++n)
    a.set_var(lit_var(aig.latches[n].lit), latch_values[n] != 0);
  for (std::uint32_t g : aig.gate_topo) {
    const AndDef& gate = aig.gates[g];
    a.set_var(lit_var(gate.lhs), a.lit(gate.rhs0) && a.lit(gate.rhs1));
  }
  return a;
}

StepResult step(const Aig& aig, const Bits& latch_values,
                const Bits& input_values)
{
  Assignment a = eval_combinational(aig, latch_values, input_values);
  StepResult r;
  r.next_latches.reserve(aig.latches.size());
  for (const LatchDef& latch : aig.latches)
    r.next_latches.push_back(a.lit(latch.next) ? 1 : 0);
  r.outputs.reserve(aig.outputs.size());
  for (Lit out : aig.outputs) r.outputs.push_back(a.lit(out) ? 1 : 0);
  return r;
}

std::vector<InitialBit> initial_states(const Aig& aig)
{
  std::vector<InitialBit> init;
  init.reserve(aig.latches.size());
  for (const LatchDef& latch : aig.latches) {
    switch (latch.reset) {
      case Reset::Zero: init.push_back(InitialBit::Zero); break;
      case Reset::One: init.push_back(InitialBit::One); break;
      case Reset::SelfUninitialized: init.push_back(InitialBit::Either); break;
    }
  }
  return init;
}

bool has_uninitialized_latch(const Aig& aig)
{
  for (const LatchDef& latch : aig.latches)
    if (latch.reset == Reset::SelfUninitialized) return true;
  return false;
}

}  // namespace aigsynt
