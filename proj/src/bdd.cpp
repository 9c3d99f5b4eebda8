#include "aigsynt/bdd.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "aigsynt/errors.hpp"

namespace aigsynt {

namespace {

constexpr std::size_t initial_table_size = 1u << 12;
constexpr std::size_t op_cache_size = 1u << 18;

inline std::uint64_t mix(std::uint64_t x)
{
  x ^= x >> 33;
  x *= 0xff51afd7ed558ccdULL;
  x ^= x >> 33;
  x *= 0xc4ceb9fe1a85ec53ULL;
  x ^= x >> 33;
  return x;
}

inline std::uint64_t hash3(std::uint32_t a, std::uint32_t b, std::uint32_t c)
{
  return mix((std::uint64_t{a} << 32) ^ (std::uint64_t{b} << 11) ^ c);
}

// Operation tags for the shared cache key.
constexpr std::uint32_t op_ite = 1;
constexpr std::uint32_t op_exists = 2;

}  // namespace

BddManager::BddManager(std::uint32_t num_vars, std::size_t node_cap)
    : num_vars_(num_vars), node_cap_(std::max<std::size_t>(node_cap, 16))
{
  nodes_.push_back({terminal_var, 0, 0});  // 0: constant false
  nodes_.push_back({terminal_var, 1, 1});  // 1: constant true
  table_.assign(initial_table_size, 0);
  table_mask_ = initial_table_size - 1;
  cache_.assign(op_cache_size, CacheEntry{});
  cache_mask_ = op_cache_size - 1;
}

std::uint32_t BddManager::check(BddRef f) const
{
  if (f.manager() != this) throw ManagerMismatchError();
  return f.id();
}

std::uint32_t* BddManager::unique_slot(std::uint32_t var, std::uint32_t high,
                                       std::uint32_t low)
{
  std::size_t slot = hash3(var, high, low) & table_mask_;
  for (;;) {
    std::uint32_t idx = table_[slot];
    if (idx == 0) return &table_[slot];
    const Node& node = nodes_[idx];
    if (node.var == var && node.high == high && node.low == low)
      return &table_[slot];
    slot = (slot + 1) & table_mask_;
  }
}

void BddManager::grow_unique_table()
{
  std::vector<std::uint32_t> old = std::move(table_);
  table_.assign(old.size() * 2, 0);
  table_mask_ = table_.size() - 1;
  for (std::uint32_t idx : old) {
    if (idx == 0) continue;
    const Node& node = nodes_[idx];
    *unique_slot(node.var, node.high, node.low) = idx;
  }
}

std::uint32_t BddManager::unique(std::uint32_t var, std::uint32_t high,
                                 std::uint32_t low)
{
  if (high == low) return high;
  std::uint32_t* slot = unique_slot(var, high, low);
  if (*slot != 0) return *slot;
  if (nodes_.size() >= node_cap_) throw NodeLimitError(node_cap_);
  std::uint32_t idx = static_cast<std::uint32_t>(nodes_.size());
  nodes_.push_back({var, high, low});
  *slot = idx;
  if (nodes_.size() * 10 > table_.size() * 7) grow_unique_table();
  return idx;
}

BddRef BddManager::var(Var v)
{
  if (v >= num_vars_) throw std::out_of_range("BDD variable out of range");
  return make_ref(unique(v, 1, 0));
}

BddRef BddManager::nvar(Var v)
{
  if (v >= num_vars_) throw std::out_of_range("BDD variable out of range");
  return make_ref(unique(v, 0, 1));
}

std::uint32_t BddManager::ite_rec(std::uint32_t f, std::uint32_t g,
                                  std::uint32_t h)
{
  if (f == 1) return g;
  if (f == 0) return h;
  if (g == h) return g;
  if (g == 1 && h == 0) return f;

  std::size_t slot = hash3(f ^ (op_ite << 28), g, h) & cache_mask_;
  CacheEntry& entry = cache_[slot];
  std::uint64_t key = (std::uint64_t{op_ite} << 62) | 1;
  if (entry.key == key && entry.a == f && entry.b == g && entry.c == h)
    return entry.result;

  std::uint32_t top = nodes_[f].var;
  if (g > 1) top = std::min(top, nodes_[g].var);
  if (h > 1) top = std::min(top, nodes_[h].var);

  auto cof = [&](std::uint32_t x, bool hi) {
    if (x <= 1 || nodes_[x].var != top) return x;
    return hi ? nodes_[x].high : nodes_[x].low;
  };
  std::uint32_t hi = ite_rec(cof(f, true), cof(g, true), cof(h, true));
  std::uint32_t lo = ite_rec(cof(f, false), cof(g, false), cof(h, false));
  std::uint32_t result = hi == lo ? hi : unique(top, hi, lo);

  entry = {key, f, g, h, result};
  return result;
}

BddRef BddManager::ite(BddRef f, BddRef g, BddRef h)
{
  return make_ref(ite_rec(check(f), check(g), check(h)));
}

std::uint32_t BddManager::cube_of(std::span<const Var> vars)
{
  std::vector<Var> sorted(vars.begin(), vars.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::uint32_t cube = 1;
  for (auto it = sorted.rbegin(); it != sorted.rend(); ++it) {
    if (*it >= num_vars_) throw std::out_of_range("BDD variable out of range");
    cube = unique(*it, cube, 0);
  }
  return cube;
}

std::uint32_t BddManager::exists_rec(std::uint32_t f, std::uint32_t cube)
{
  if (f <= 1 || cube == 1) return f;
  while (cube != 1 && nodes_[cube].var < nodes_[f].var)
    cube = nodes_[cube].high;
  if (cube == 1) return f;

  std::size_t slot = hash3(f ^ (op_exists << 28), cube, 0x9e37u) & cache_mask_;
  CacheEntry& entry = cache_[slot];
  std::uint64_t key = (std::uint64_t{op_exists} << 62) | 1;
  if (entry.key == key && entry.a == f && entry.b == cube) return entry.result;

  const Node& node = nodes_[f];
  std::uint32_t result;
  if (node.var == nodes_[cube].var) {
    std::uint32_t rest = nodes_[cube].high;
    std::uint32_t hi = exists_rec(node.high, rest);
    if (hi == 1) {
      result = 1;  // short circuit: or(1, x) = 1
    } else {
      std::uint32_t lo = exists_rec(node.low, rest);
      result = ite_rec(hi, 1, lo);
    }
  } else {
    std::uint32_t hi = exists_rec(node.high, cube);
    std::uint32_t lo = exists_rec(node.low, cube);
    result = hi == lo ? hi : unique(node.var, hi, lo);
  }

  entry = {key, f, cube, 0, result};
  return result;
}

BddRef BddManager::exists(std::span<const Var> vars, BddRef f)
{
  return make_ref(exists_rec(check(f), cube_of(vars)));
}

BddRef BddManager::forall(std::span<const Var> vars, BddRef f)
{
  return bdd_not(exists(vars, bdd_not(f)));
}

BddRef BddManager::compose(
    BddRef f, const std::vector<std::pair<Var, BddRef>>& substitution)
{
  std::vector<std::uint32_t> target(num_vars_, terminal_var);
  for (const auto& [v, g] : substitution) {
    if (v >= num_vars_) throw std::out_of_range("BDD variable out of range");
    target[v] = check(g);
  }
  std::unordered_map<std::uint32_t, std::uint32_t> memo;
  auto rec = [&](auto&& self, std::uint32_t node) -> std::uint32_t {
    if (node <= 1) return node;
    auto it = memo.find(node);
    if (it != memo.end()) return it->second;
    const Node& n = nodes_[node];
    std::uint32_t hi = self(self, n.high);
    std::uint32_t lo = self(self, n.low);
    std::uint32_t guard =
        target[n.var] != terminal_var ? target[n.var] : unique(n.var, 1, 0);
    std::uint32_t result = ite_rec(guard, hi, lo);
    memo.emplace(node, result);
    return result;
  };
  return make_ref(rec(rec, check(f)));
}

BddRef BddManager::cofactor(BddRef f, Var v, bool value)
{
  return compose(f, {{v, constant(value)}});
}

bool BddManager::eval(BddRef f, std::span<const std::uint8_t> var_values) const
{
  std::uint32_t node = check(f);
  while (node > 1) {
    const Node& n = nodes_[node];
    bool bit = n.var < var_values.size() && var_values[n.var] != 0;
    node = bit ? n.high : n.low;
  }
  return node == 1;
}

std::vector<std::uint8_t> BddManager::pick_assignment(BddRef f) const
{
  std::uint32_t node = check(f);
  if (node == 0)
    throw std::logic_error("pick_assignment on unsatisfiable function");
  std::vector<std::uint8_t> values(num_vars_, 0);
  while (node > 1) {
    const Node& n = nodes_[node];
    if (n.low != 0) {
      node = n.low;
    } else {
      values[n.var] = 1;
      node = n.high;
    }
  }
  return values;
}

std::vector<Var> BddManager::support(BddRef f) const
{
  std::vector<bool> seen_var(num_vars_, false);
  std::unordered_set<std::uint32_t> visited;
  std::vector<std::uint32_t> stack{check(f)};
  while (!stack.empty()) {
    std::uint32_t node = stack.back();
    stack.pop_back();
    if (node <= 1 || !visited.insert(node).second) continue;
    const Node& n = nodes_[node];
    seen_var[n.var] = true;
    stack.push_back(n.high);
    stack.push_back(n.low);
  }
  std::vector<Var> vars;
  for (Var v = 0; v < num_vars_; ++v)
    if (seen_var[v]) vars.push_back(v);
  return vars;
}

void BddManager::clear_op_cache()
{
  std::fill(cache_.begin(), cache_.end(), CacheEntry{});
}

void BddManager::check_canonical() const
{
  std::unordered_set<std::uint64_t> seen;
  for (std::uint32_t idx = 2; idx < nodes_.size(); ++idx) {
    const Node& n = nodes_[idx];
    if (n.var >= num_vars_)
      throw std::logic_error("node with out-of-range variable");
    if (n.high == n.low) throw std::logic_error("node with equal children");
    for (std::uint32_t child : {n.high, n.low}) {
      if (child >= nodes_.size()) throw std::logic_error("dangling child");
      if (child > 1 && nodes_[child].var <= n.var)
        throw std::logic_error("child does not respect the variable order");
    }
    std::uint64_t sig = (std::uint64_t{n.var} << 48) ^
                        (std::uint64_t{n.high} << 24) ^ n.low;
    if (!seen.insert(sig).second)
      throw std::logic_error("duplicate (var, high, low) node");
  }
}

}  // namespace aigsynt
