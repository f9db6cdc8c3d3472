#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nusp/compiler.hpp"
#include "nusp/network.hpp"
#include "nusp/runtime.hpp"
#include "nusp/turing.hpp"

namespace nusp {

struct Diagnostic {
  std::size_t line = 0;
  std::string message;
};

template <typename T>
struct Parsed {
  std::optional<T> value;
  std::vector<Diagnostic> diagnostics;
  bool ok() const { return value.has_value(); }
};

// Text formats. Tokens are bare identifiers or double-quoted strings with
// backslash escapes; '~' stands for the empty word. Lines starting with '#'
// are comments. Emission is canonical: token-sorted sets, declaration-ordered
// nodes, so structurally equal values print byte-identically.

Parsed<Network> parse_network(std::string_view text);
std::string emit_network(const Network& net);

// Network file prefixed with the node and symbol legends as comments.
std::string emit_compiled_network(const CompiledNetwork& cn);

Parsed<TuringMachine> parse_machine(std::string_view text);
std::string emit_machine(const TuringMachine& m);

// Line-delimited run record: one line per transition with per-node word
// counts and the number of lost words, full contents on demand.
std::string emit_trace(const Trace& trace, const Network& net, const Verdict& verdict,
                       bool full);

struct TraceDocument {
  std::vector<std::string> node_names;
  Trace trace;
  std::optional<Verdict> verdict;
};

Parsed<TraceDocument> parse_trace(std::string_view text);

// Token quoting, shared by the emitters.
std::string quote_token(const std::string& token);
std::string render_word(const Word& w);

}  // namespace nusp
