#pragma once

#include <cstdint>
#include <vector>

#include "aigsynt/aig.hpp"

namespace aigsynt {

// Total assignment of every variable; literals resolve through it.
class Assignment {
 public:
  explicit Assignment(std::size_t num_vars) : value_(num_vars, 0) {}

  bool var(Var v) const { return value_[v] != 0; }
  void set_var(Var v, bool b) { value_[v] = b ? 1 : 0; }
  bool lit(Lit l) const { return var(lit_var(l)) ^ lit_sign(l); }

  std::size_t size() const { return value_.size(); }

 private:
  std::vector<std::uint8_t> value_;
};

using Bits = std::vector<std::uint8_t>;

// Resolves every literal of the circuit under the given latch and input
// values. Gates are evaluated in topological order; variables the file never
// defines read as 0. Requires gates_acyclic.
Assignment eval_combinational(const Aig& aig, const Bits& latch_values,
                              const Bits& input_values);

struct StepResult {
  Bits next_latches;
  Bits outputs;
};

// One synchronous step: next latch values come from each latch's update
// literal, outputs are sampled from the same combinational assignment.
StepResult step(const Aig& aig, const Bits& latch_values,
                const Bits& input_values);

// Initial value per latch. Either means the latch starts uninitialized and
// both values are possible.
enum class InitialBit : std::uint8_t { Zero, One, Either };

std::vector<InitialBit> initial_states(const Aig& aig);

// True when some latch is uninitialized (reset literal = the latch itself).
bool has_uninitialized_latch(const Aig& aig);

}  // namespace aigsynt
