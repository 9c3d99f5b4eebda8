#include "aigsynt/synth_spec.hpp"

#include <algorithm>

namespace aigsynt {

bool is_controllable_name(std::string_view name)
{
  return name.substr(0, controllable_prefix.size()) == controllable_prefix;
}

ClassifyResult classify(const Aig& aig)
{
  ClassifyResult result;
  if (aig.outputs.size() != 1) {
    result.error = "synthesis requires exactly one output, file has " +
                   std::to_string(aig.outputs.size());
    return result;
  }
  if (aig.header.ext.any()) {
    result.error =
        "extension properties (B/C/J/F) are not supported for synthesis";
    return result;
  }

  std::vector<bool> is_controllable(aig.inputs.size(), false);
  for (const SymbolEntry& s : aig.symbols) {
    if (!is_controllable_name(s.name)) continue;
    if (s.kind == SymbolKind::Input) {
      is_controllable[s.position] = true;
    } else {
      result.warnings.push_back(
          "reserved prefix on a non-input symbol has no effect: " + s.name);
    }
  }

  SynthesisSpec spec;
  spec.aig = aig;
  for (std::uint32_t pos = 0; pos < aig.inputs.size(); ++pos) {
    if (is_controllable[pos])
      spec.controllable.push_back(pos);
    else
      spec.uncontrollable.push_back(pos);
  }
  result.spec = std::move(spec);
  return result;
}

MarkResult mark_controllable(const Aig& aig,
                             const std::vector<InputSelector>& selection)
{
  MarkResult result;

  // Symbol name per input position, if any.
  std::vector<const SymbolEntry*> named(aig.inputs.size(), nullptr);
  for (const SymbolEntry& s : aig.symbols)
    if (s.kind == SymbolKind::Input && s.position < named.size())
      named[s.position] = &s;

  std::vector<std::uint32_t> positions;
  for (const InputSelector& sel : selection) {
    if (const auto* pos = std::get_if<std::uint32_t>(&sel)) {
      if (*pos >= aig.inputs.size()) {
        result.error = "unknown input position " + std::to_string(*pos);
        return result;
      }
      positions.push_back(*pos);
    } else {
      const std::string& name = std::get<std::string>(sel);
      auto it = std::find_if(named.begin(), named.end(),
                             [&](const SymbolEntry* s) {
                               return s != nullptr && s->name == name;
                             });
      if (it == named.end()) {
        result.error = "unknown input name `" + name + "`";
        return result;
      }
      positions.push_back(
          static_cast<std::uint32_t>(std::distance(named.begin(), it)));
    }
  }
  std::sort(positions.begin(), positions.end());
  positions.erase(std::unique(positions.begin(), positions.end()),
                  positions.end());

  Aig marked = aig;
  for (std::uint32_t pos : positions) {
    SymbolEntry* entry = nullptr;
    for (SymbolEntry& s : marked.symbols)
      if (s.kind == SymbolKind::Input && s.position == pos) entry = &s;
    if (entry != nullptr) {
      if (is_controllable_name(entry->name)) {
        result.warnings.push_back("input " + std::to_string(pos) +
                                  " is already controllable: " + entry->name);
        continue;
      }
      entry->name.insert(0, controllable_prefix);
    } else {
      SymbolEntry fresh;
      fresh.kind = SymbolKind::Input;
      fresh.position = pos;
      fresh.name = std::string(controllable_prefix) + std::to_string(pos);
      marked.symbols.push_back(std::move(fresh));
    }
  }
  result.aig = std::move(marked);
  return result;
}

}  // namespace aigsynt
