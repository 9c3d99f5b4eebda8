#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "aigsynt/literal.hpp"

namespace aigsynt {

class BddManager;

// Canonical function handle. Two handles of one manager denote the same
// Boolean function iff they are identical.
class BddRef {
 public:
  BddRef() = default;

  bool operator==(const BddRef& other) const = default;

  std::uint32_t id() const { return index_; }
  const BddManager* manager() const { return manager_; }

 private:
  friend class BddManager;
  BddRef(std::uint32_t index, const BddManager* manager)
      : index_(index), manager_(manager)
  {
  }

  std::uint32_t index_ = 0;
  const BddManager* manager_ = nullptr;
};

// Reduced ordered BDD store with a fixed variable order (variable index =
// level). No dynamic reordering, no garbage collection; a node cap turns
// blowup into NodeLimitError. Plain nodes, no complement edges.
//
// A manager is single-threaded. Distinct managers are independent and may
// run on different threads; handles must never cross managers.
class BddManager {
 public:
  static constexpr std::size_t default_node_cap = std::size_t{1} << 22;

  explicit BddManager(std::uint32_t num_vars,
                      std::size_t node_cap = default_node_cap);

  std::uint32_t num_vars() const { return num_vars_; }
  std::size_t node_count() const { return nodes_.size(); }

  BddRef bdd_false() const { return make_ref(0); }
  BddRef bdd_true() const { return make_ref(1); }
  BddRef var(Var v);
  BddRef nvar(Var v);
  BddRef constant(bool b) const { return b ? bdd_true() : bdd_false(); }

  bool is_false(BddRef f) const { return check(f) == 0; }
  bool is_true(BddRef f) const { return check(f) == 1; }
  bool is_constant(BddRef f) const { return check(f) <= 1; }

  // if-then-else; all other connectives are phrased through it.
  BddRef ite(BddRef f, BddRef g, BddRef h);
  BddRef bdd_not(BddRef f) { return ite(f, bdd_false(), bdd_true()); }
  BddRef bdd_and(BddRef f, BddRef g) { return ite(f, g, bdd_false()); }
  BddRef bdd_or(BddRef f, BddRef g) { return ite(f, bdd_true(), g); }
  BddRef bdd_xor(BddRef f, BddRef g) { return ite(f, bdd_not(g), g); }
  BddRef bdd_xnor(BddRef f, BddRef g) { return ite(f, g, bdd_not(g)); }
  BddRef implies(BddRef f, BddRef g) { return ite(f, g, bdd_true()); }

  BddRef exists(std::span<const Var> vars, BddRef f);
  BddRef forall(std::span<const Var> vars, BddRef f);

  // Simultaneous substitution of variables by functions.
  BddRef compose(BddRef f,
                 const std::vector<std::pair<Var, BddRef>>& substitution);
  BddRef cofactor(BddRef f, Var v, bool value);

  bool eval(BddRef f, std::span<const std::uint8_t> var_values) const;

  // Some satisfying assignment of f, unset variables defaulting to 0;
  // deterministic (prefers the low branch). f must not be constant false.
  std::vector<std::uint8_t> pick_assignment(BddRef f) const;

  std::vector<Var> support(BddRef f) const;

  // Drops memoized operation results; node handles stay valid.
  void clear_op_cache();

  // Test aid: walks the node store and verifies the canonicity invariants
  // (no node with equal children, no duplicate (var,high,low), children
  // strictly below their parent). Throws std::logic_error on violation.
  void check_canonical() const;

 private:
  struct Node {
    std::uint32_t var;  // terminal_var for the two terminals
    std::uint32_t high;
    std::uint32_t low;
  };
  static constexpr std::uint32_t terminal_var = 0xFFFFFFFFu;

  struct CacheEntry {
    std::uint64_t key = 0;
    std::uint32_t a = 0, b = 0, c = 0;
    std::uint32_t result = 0;
  };

  BddRef make_ref(std::uint32_t index) const { return BddRef(index, this); }
  std::uint32_t check(BddRef f) const;
  std::uint32_t unique(std::uint32_t var, std::uint32_t high,
                       std::uint32_t low);
  std::uint32_t ite_rec(std::uint32_t f, std::uint32_t g, std::uint32_t h);
  std::uint32_t exists_rec(std::uint32_t f, std::uint32_t cube);
  std::uint32_t cube_of(std::span<const Var> vars);

  void grow_unique_table();
  std::uint32_t* unique_slot(std::uint32_t var, std::uint32_t high,
                             std::uint32_t low);

  std::uint32_t num_vars_;
  std::size_t node_cap_;
  std::vector<Node> nodes_;

  // Open-addressing unique table holding node indexes; 0 marks an empty
  // slot (the false terminal is never hashed).
  std::vector<std::uint32_t> table_;
  std::size_t table_mask_ = 0;

  // Lossy direct-mapped cache for ite/exists results.
  std::vector<CacheEntry> cache_;
  std::size_t cache_mask_ = 0;
};

}  // namespace aigsynt
