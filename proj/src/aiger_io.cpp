#include "aigsynt/aiger_io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace aigsynt {

namespace {

constexpr Var max_supported_var = 1u << 26;

struct Line {
  std::uint32_t number = 0;  // 1-based
  std::string_view text;
};

std::vector<Line> split_lines(std::string_view text)
{
  std::vector<Line> lines;
  std::uint32_t number = 1;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view body = nl == std::string_view::npos
                                ? text.substr(pos)
                                : text.substr(pos, nl - pos);
    if (!body.empty() && body.back() == '\r') body.remove_suffix(1);
    lines.push_back({number++, body});
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  return lines;
}

std::vector<std::string_view> tokens_of(std::string_view line)
{
  std::vector<std::string_view> toks;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    std::size_t start = pos;
    while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t') ++pos;
    if (pos > start) toks.push_back(line.substr(start, pos - start));
  }
  return toks;
}

bool parse_number(std::string_view tok, std::uint64_t& out)
{
  if (tok.empty()) return false;
  auto [ptr, ec] =
      std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc{} && ptr == tok.data() + tok.size();
}

class Parser {
 public:
  Parser(std::string_view text, const ParseOptions& opts)
      : lines_(split_lines(text)), opts_(opts)
  {
  }

  ParseResult run()
  {
    if (!parse_header()) return std::move(result_);
    parse_body();
    if (fatal_) return std::move(result_);
    assemble();
    return std::move(result_);
  }

 private:
  std::vector<Line> lines_;
  ParseOptions opts_;
  ParseResult result_;
  std::size_t cursor_ = 0;  // next unread line
  bool fatal_ = false;

  Header header_;
  std::vector<Lit> inputs_;
  std::vector<LatchDef> latches_;
  std::vector<Lit> outputs_;
  std::vector<AndDef> gates_;
  std::vector<Lit> bads_;
  std::vector<Lit> constraints_;
  std::vector<SymbolEntry> symbols_;
  std::vector<std::string> comments_;

  // Line number per definition, for mapping assembly violations back.
  std::vector<std::uint32_t> input_ln_, latch_ln_, output_ln_, gate_ln_,
      bad_ln_, constraint_ln_, symbol_ln_;

  std::uint32_t current_line() const
  {
    if (cursor_ < lines_.size()) return lines_[cursor_].number;
    return lines_.empty() ? 1 : lines_.back().number;
  }

  void diagnose(std::uint32_t line, const char* rule, std::string message)
  {
    result_.diagnostics.push_back({line, rule, std::move(message)});
  }

  bool parse_header()
  {
    if (lines_.empty()) {
      diagnose(1, rules::bad_magic, "empty file, expected `aag` header");
      return false;
    }
    const Line& line = lines_[0];
    auto toks = tokens_of(line.text);
    ++cursor_;
    if (toks.empty() || toks[0] != "aag") {
      if (!toks.empty() && toks[0] == "aig")
        diagnose(line.number, rules::bad_magic,
                 "binary `aig` files are not supported, expected `aag`");
      else
        diagnose(line.number, rules::bad_magic, "expected `aag` header magic");
      return false;
    }
    if (toks.size() < 6 || toks.size() > 10) {
      diagnose(line.number, rules::malformed_header,
               "header needs `aag M I L O A` with up to four extension counts");
      return false;
    }
    std::uint64_t fields[9] = {0};
    for (std::size_t n = 1; n < toks.size(); ++n) {
      if (!parse_number(toks[n], fields[n - 1])) {
        diagnose(line.number, rules::malformed_header,
                 "header field is not a number");
        return false;
      }
    }
    if (fields[0] > max_supported_var) {
      diagnose(line.number, rules::malformed_header,
               "maximum variable index exceeds supported limit");
      return false;
    }
    for (std::size_t n = 1; n < 9; ++n) {
      if (fields[n] > max_supported_var) {
        diagnose(line.number, rules::malformed_header, "header count too large");
        return false;
      }
    }
    header_.m = static_cast<Var>(fields[0]);
    header_.i = static_cast<std::uint32_t>(fields[1]);
    header_.l = static_cast<std::uint32_t>(fields[2]);
    header_.o = static_cast<std::uint32_t>(fields[3]);
    header_.a = static_cast<std::uint32_t>(fields[4]);
    header_.ext.b = static_cast<std::uint32_t>(fields[5]);
    header_.ext.c = static_cast<std::uint32_t>(fields[6]);
    header_.ext.j = static_cast<std::uint32_t>(fields[7]);
    header_.ext.f = static_cast<std::uint32_t>(fields[8]);
    if (header_.ext.j || header_.ext.f) {
      diagnose(line.number, rules::unsupported_property_body,
               "justice/fairness sections are not supported");
      return false;
    }
    return true;
  }

  // Reads `count` definition lines with `want` numeric fields each,
  // stopping early on truncation. `sink` receives the parsed numbers.
  template <typename Sink>
  void read_section(std::uint32_t count, const char* what, std::size_t min_tok,
                    std::size_t max_tok, Sink sink)
  {
    for (std::uint32_t n = 0; n < count; ++n) {
      if (cursor_ >= lines_.size()) {
        diagnose(current_line(), rules::count_mismatch,
                 std::string("file ends before all ") + what +
                     " definitions were read");
        fatal_ = true;
        return;
      }
      const Line& line = lines_[cursor_++];
      auto toks = tokens_of(line.text);
      std::uint64_t nums[3] = {0};
      bool good = toks.size() >= min_tok && toks.size() <= max_tok;
      for (std::size_t t = 0; good && t < toks.size(); ++t)
        good = parse_number(toks[t], nums[t]) && nums[t] <= 2 * std::uint64_t{max_supported_var} + 1;
      if (!good) {
        diagnose(line.number, rules::malformed_line,
                 std::string("malformed ") + what + " definition");
        fatal_ = true;
        continue;
      }
      sink(line.number, nums, toks.size());
    }
  }

  void parse_body()
  {
    read_section(header_.i, "input", 1, 1,
                 [&](std::uint32_t ln, const std::uint64_t* v, std::size_t) {
                   inputs_.push_back(static_cast<Lit>(v[0]));
                   input_ln_.push_back(ln);
                 });
    read_section(header_.l, "latch", 2, 3,
                 [&](std::uint32_t ln, const std::uint64_t* v, std::size_t n) {
                   LatchDef latch;
                   latch.lit = static_cast<Lit>(v[0]);
                   latch.next = static_cast<Lit>(v[1]);
                   if (n == 3) {
                     Lit reset = static_cast<Lit>(v[2]);
                     if (reset == 0)
                       latch.reset = Reset::Zero;
                     else if (reset == 1)
                       latch.reset = Reset::One;
                     else if (reset == latch.lit)
                       latch.reset = Reset::SelfUninitialized;
                     else {
                       diagnose(ln, rules::malformed_reset,
                                "reset literal must be 0, 1 or the latch itself");
                       fatal_ = true;
                     }
                   }
                   latches_.push_back(latch);
                   latch_ln_.push_back(ln);
                 });
    read_section(header_.o, "output", 1, 1,
                 [&](std::uint32_t ln, const std::uint64_t* v, std::size_t) {
                   outputs_.push_back(static_cast<Lit>(v[0]));
                   output_ln_.push_back(ln);
                 });
    read_section(header_.ext.b, "bad-state", 1, 1,
                 [&](std::uint32_t ln, const std::uint64_t* v, std::size_t) {
                   bads_.push_back(static_cast<Lit>(v[0]));
                   bad_ln_.push_back(ln);
                 });
    read_section(header_.ext.c, "invariant-constraint", 1, 1,
                 [&](std::uint32_t ln, const std::uint64_t* v, std::size_t) {
                   constraints_.push_back(static_cast<Lit>(v[0]));
                   constraint_ln_.push_back(ln);
                 });
    read_section(header_.a, "AND-gate", 3, 3,
                 [&](std::uint32_t ln, const std::uint64_t* v, std::size_t) {
                   gates_.push_back({static_cast<Lit>(v[0]),
                                     static_cast<Lit>(v[1]),
                                     static_cast<Lit>(v[2])});
                   gate_ln_.push_back(ln);
                 });
    if (!fatal_) parse_symbols_and_comments();
  }

  void parse_symbols_and_comments()
  {
    while (cursor_ < lines_.size()) {
      const Line& line = lines_[cursor_];
      if (line.text == "c") {
        ++cursor_;
        while (cursor_ < lines_.size())
          comments_.emplace_back(lines_[cursor_++].text);
        return;
      }
      // Skip a single trailing blank line (file ending in "\n").
      if (line.text.empty() && cursor_ + 1 == lines_.size()) {
        ++cursor_;
        return;
      }
      SymbolKind kind;
      switch (line.text.empty() ? '\0' : line.text[0]) {
        case 'i': kind = SymbolKind::Input; break;
        case 'l': kind = SymbolKind::Latch; break;
        case 'o': kind = SymbolKind::Output; break;
        default:
          diagnose(line.number, rules::malformed_symbol,
                   "expected a symbol entry (i/l/o) or the comment marker `c`");
          fatal_ = true;
          ++cursor_;
          continue;
      }
      std::size_t pos = 1;
      while (pos < line.text.size() && line.text[pos] >= '0' &&
             line.text[pos] <= '9')
        ++pos;
      std::uint64_t ordinal = 0;
      if (pos == 1 || !parse_number(line.text.substr(1, pos - 1), ordinal) ||
          pos >= line.text.size() || line.text[pos] != ' ' ||
          pos + 1 >= line.text.size()) {
        diagnose(line.number, rules::malformed_symbol,
                 "symbol entry needs an ordinal and a non-empty name");
        fatal_ = true;
        ++cursor_;
        continue;
      }
      SymbolEntry entry;
      entry.kind = kind;
      entry.position = static_cast<std::uint32_t>(
          std::min<std::uint64_t>(ordinal, max_supported_var));
      entry.name = std::string(line.text.substr(pos + 1));
      symbols_.push_back(std::move(entry));
      symbol_ln_.push_back(line.number);
      ++cursor_;
    }
  }

  std::uint32_t line_of(const AssembleViolation& v) const
  {
    using Section = AssembleViolation::Section;
    auto pick = [&](const std::vector<std::uint32_t>& ln) {
      return v.index < ln.size() ? ln[v.index] : std::uint32_t{1};
    };
    switch (v.section) {
      case Section::Input: return pick(input_ln_);
      case Section::Latch: return pick(latch_ln_);
      case Section::Output: return pick(output_ln_);
      case Section::Gate: return pick(gate_ln_);
      case Section::Bad: return pick(bad_ln_);
      case Section::Constraint: return pick(constraint_ln_);
      case Section::Symbol: return pick(symbol_ln_);
      case Section::Head: return 1;
    }
    return 1;
  }

  void assemble()
  {
    AssembleOptions opts;
    opts.defer_cycles = opts_.defer_cycles;
    opts.defer_duplicates = opts_.defer_duplicates;
    AssembleResult r = assemble_aig(
        header_, std::move(inputs_), std::move(latches_), std::move(outputs_),
        std::move(gates_), std::move(bads_), std::move(constraints_),
        std::move(symbols_), std::move(comments_), opts);
    for (const AssembleViolation& v : r.violations) {
      bool deferred = (v.rule == rules::cyclic_gates && opts.defer_cycles) ||
                      (v.rule == rules::duplicate_definition &&
                       opts.defer_duplicates);
      ParseDiagnostic d{line_of(v), v.rule, v.message};
      if (deferred)
        result_.deferred.push_back(std::move(d));
      else
        result_.diagnostics.push_back(std::move(d));
    }
    if (result_.diagnostics.empty()) result_.aig = std::move(r.aig);
  }
};

void append_number(std::string& out, std::uint64_t value)
{
  out += std::to_string(value);
}

}  // namespace

ParseResult parse_ascii(std::string_view text, const ParseOptions& opts)
{
  return Parser(text, opts).run();
}

std::string write_ascii(const Aig& aig)
{
  std::string out;
  out.reserve(16 * (aig.header.i + aig.header.l + aig.header.a + 8));

  out += "aag";
  for (std::uint64_t field : {std::uint64_t{aig.header.m},
                              std::uint64_t{aig.header.i},
                              std::uint64_t{aig.header.l},
                              std::uint64_t{aig.header.o},
                              std::uint64_t{aig.header.a}}) {
    out += ' ';
    append_number(out, field);
  }
  const ExtensionHeader& ext = aig.header.ext;
  std::size_t ext_fields = ext.f ? 4 : ext.j ? 3 : ext.c ? 2 : ext.b ? 1 : 0;
  const std::uint32_t ext_vals[4] = {ext.b, ext.c, ext.j, ext.f};
  for (std::size_t n = 0; n < ext_fields; ++n) {
    out += ' ';
    append_number(out, ext_vals[n]);
  }
  out += '\n';

  for (Lit in : aig.inputs) {
    append_number(out, in);
    out += '\n';
  }
  for (const LatchDef& latch : aig.latches) {
    append_number(out, latch.lit);
    out += ' ';
    append_number(out, latch.next);
    if (latch.reset == Reset::One) out += " 1";
    if (latch.reset == Reset::SelfUninitialized) {
      out += ' ';
      append_number(out, latch.lit);
    }
    out += '\n';
  }
  for (Lit o : aig.outputs) {
    append_number(out, o);
    out += '\n';
  }
  for (Lit b : aig.bads) {
    append_number(out, b);
    out += '\n';
  }
  for (Lit c : aig.constraints) {
    append_number(out, c);
    out += '\n';
  }
  for (const AndDef& gate : aig.gates) {
    append_number(out, gate.lhs);
    out += ' ';
    append_number(out, gate.rhs0);
    out += ' ';
    append_number(out, gate.rhs1);
    out += '\n';
  }

  for (SymbolKind kind :
       {SymbolKind::Input, SymbolKind::Latch, SymbolKind::Output}) {
    std::vector<const SymbolEntry*> entries;
    for (const SymbolEntry& s : aig.symbols)
      if (s.kind == kind) entries.push_back(&s);
    std::sort(entries.begin(), entries.end(),
              [](const SymbolEntry* a, const SymbolEntry* b) {
                return a->position < b->position;
              });
    char tag = kind == SymbolKind::Input ? 'i'
               : kind == SymbolKind::Latch ? 'l'
                                           : 'o';
    for (const SymbolEntry* s : entries) {
      out += tag;
      append_number(out, s->position);
      out += ' ';
      out += s->name;
      out += '\n';
    }
  }

  if (!aig.comments.empty()) {
    out += "c\n";
    for (const std::string& comment : aig.comments) {
      out += comment;
      out += '\n';
    }
  }
  return out;
}

ParseResult parse_file(const std::string& path, const ParseOptions& opts)
{
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    ParseResult r;
    r.diagnostics.push_back({0, "io-error", "cannot open " + path});
    return r;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  std::string text = buffer.str();
  return parse_ascii(text, opts);
}

void write_file(const Aig& aig, const std::string& path)
{
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << write_ascii(aig);
}

}  // namespace aigsynt
