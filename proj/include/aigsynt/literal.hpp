#pragma once

#include <cstdint>

namespace aigsynt {

// AIGER literal: even numbers are variables, odd numbers their negations.
// 0 is constant false, 1 is constant true.
using Lit = std::uint32_t;
using Var = std::uint32_t;

constexpr Lit lit_false = 0;
constexpr Lit lit_true = 1;

constexpr bool lit_sign(Lit l) { return l & 1u; }
constexpr Lit lit_strip(Lit l) { return l & ~1u; }
constexpr Lit lit_not(Lit l) { return l ^ 1u; }
constexpr Var lit_var(Lit l) { return l >> 1; }
constexpr Lit var_lit(Var v, bool negate = false)
{
  return (v << 1) | (negate ? 1u : 0u);
}
constexpr bool lit_is_constant(Lit l) { return l <= 1; }

// Largest literal a file with maximum variable index m may contain.
constexpr Lit max_lit(Var m) { return 2 * m + 1; }

}  // namespace aigsynt
