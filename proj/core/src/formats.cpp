#include "nusp/formats.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace nusp {
namespace {

bool bare_char(char c) {
  if (std::isalnum(static_cast<unsigned char>(c))) return true;
  return std::string_view("_.'$^{}<>|+=-").find(c) != std::string_view::npos;
}

bool needs_quotes(const std::string& token) {
  if (token == "~") return true;
  return !std::all_of(token.begin(), token.end(), bare_char);
}

// Splits one line into tokens. Punctuation ( ) , ; are tokens of their own,
// quoted strings keep any character, '#' outside quotes starts a comment.
std::optional<std::vector<std::string>> tokenize_line(const std::string& line,
                                                      std::string& error) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '#') break;
    if (c == '(' || c == ')' || c == ',' || c == ';' || c == '~') {
      out.emplace_back(1, c);
      ++i;
      continue;
    }
    if (c == '"') {
      std::string tok;
      ++i;
      bool closed = false;
      while (i < line.size()) {
        char d = line[i];
        if (d == '\\') {
          if (i + 1 >= line.size()) {
            error = "dangling escape in quoted token";
            return std::nullopt;
          }
          tok.push_back(line[i + 1]);
          i += 2;
          continue;
        }
        if (d == '"') {
          closed = true;
          ++i;
          break;
        }
        tok.push_back(d);
        ++i;
      }
      if (!closed) {
        error = "unterminated quoted token";
        return std::nullopt;
      }
      if (tok.empty()) {
        error = "empty quoted token";
        return std::nullopt;
      }
      out.push_back("\x01" + tok);  // marker: quoted, bypasses '~' meaning
      continue;
    }
    std::string tok;
    while (i < line.size() && bare_char(line[i])) {
      tok.push_back(line[i]);
      ++i;
    }
    if (tok.empty()) {
      error = std::string("unexpected character '") + c + "'";
      return std::nullopt;
    }
    out.push_back(tok);
  }
  return out;
}

bool was_quoted(const std::string& tok) { return !tok.empty() && tok[0] == '\x01'; }
std::string unmark(const std::string& tok) { return was_quoted(tok) ? tok.substr(1) : tok; }

struct LineReader {
  std::vector<std::pair<std::size_t, std::vector<std::string>>> lines;

  explicit LineReader(std::string_view text, std::vector<Diagnostic>& diags) {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t end = text.find('\n', pos);
      std::string line(text.substr(pos, end == std::string_view::npos
                                            ? std::string_view::npos
                                            : end - pos));
      ++line_no;
      std::string error;
      auto toks = tokenize_line(line, error);
      if (!toks) {
        diags.push_back({line_no, error});
      } else if (!toks->empty()) {
        lines.emplace_back(line_no, std::move(*toks));
      }
      if (end == std::string_view::npos) break;
      pos = end + 1;
    }
  }
};

}  // namespace

std::string quote_token(const std::string& token) {
  if (!needs_quotes(token)) return token;
  std::string out = "\"";
  for (char c : token) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string render_word(const Word& w) {
  if (w.empty()) return "~";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out.push_back(' ');
    out += quote_token(w[i].text());
  }
  return out;
}

namespace {

// ---- network ----

struct NetworkBuilder {
  Network net;
  std::vector<Diagnostic>& diags;
  std::optional<std::size_t> current;  // node being filled
  std::vector<std::tuple<std::size_t, std::string, std::string>> raw_edges;
  std::optional<std::pair<std::size_t, std::string>> raw_input, raw_halt;
  bool have_markers = false;

  explicit NetworkBuilder(std::vector<Diagnostic>& d) : diags(d) {}

  void error(std::size_t line, const std::string& msg) { diags.push_back({line, msg}); }
};

// Word components for rule lines: '~' or a token sequence.
std::optional<Word> parse_component(const std::vector<std::string>& toks,
                                    std::size_t begin, std::size_t end) {
  if (begin >= end) return std::nullopt;
  if (end - begin == 1 && !was_quoted(toks[begin]) && toks[begin] == "~") {
    return Word{};
  }
  std::vector<Symbol> syms;
  for (std::size_t i = begin; i < end; ++i) {
    const std::string& t = toks[i];
    if (t == "(" || t == ")" || t == "," || t == ";") return std::nullopt;
    syms.push_back(Symbol::intern(unmark(t)));
  }
  return Word(std::move(syms));
}

// rule ( C , C ) ; ( C , C )
std::optional<SplicingRule> parse_rule_line(const std::vector<std::string>& toks) {
  std::vector<Word> components;
  std::size_t i = 1;  // past 'rule'
  auto expect = [&](const char* p) {
    if (i < toks.size() && !was_quoted(toks[i]) && toks[i] == p) {
      ++i;
      return true;
    }
    return false;
  };
  auto component_until = [&](const char* stop) -> std::optional<Word> {
    std::size_t start = i;
    while (i < toks.size() && (was_quoted(toks[i]) || toks[i] != stop)) ++i;
    return parse_component(toks, start, i);
  };
  for (int pair = 0; pair < 2; ++pair) {
    if (pair == 1 && !expect(";")) return std::nullopt;
    if (!expect("(")) return std::nullopt;
    auto first = component_until(",");
    if (!first || !expect(",")) return std::nullopt;
    auto second = component_until(")");
    if (!second || !expect(")")) return std::nullopt;
    components.push_back(std::move(*first));
    components.push_back(std::move(*second));
  }
  if (i != toks.size()) return std::nullopt;
  return SplicingRule{components[0], components[1], components[2], components[3]};
}

}  // namespace

Parsed<Network> parse_network(std::string_view text) {
  Parsed<Network> result;
  NetworkBuilder b(result.diagnostics);
  LineReader reader(text, result.diagnostics);

  auto symbols_from = [&](const std::vector<std::string>& toks, std::size_t from) {
    SymbolSet out;
    for (std::size_t i = from; i < toks.size(); ++i) {
      out.insert(Symbol::intern(unmark(toks[i])));
    }
    return out;
  };

  for (auto& [line, toks] : reader.lines) {
    const std::string head = was_quoted(toks[0]) ? "" : toks[0];
    if (head == "alphabet") {
      if (toks.size() < 2) {
        b.error(line, "alphabet needs 'input' or 'network'");
        continue;
      }
      if (toks[1] == "input") {
        b.net.input_alphabet = symbols_from(toks, 2);
      } else if (toks[1] == "network") {
        b.net.network_alphabet = symbols_from(toks, 2);
      } else {
        b.error(line, "unknown alphabet kind '" + unmark(toks[1]) + "'");
      }
    } else if (head == "markers") {
      if (toks.size() != 3) {
        b.error(line, "markers needs exactly two symbols");
        continue;
      }
      b.net.left_marker = Symbol::intern(unmark(toks[1]));
      b.net.right_marker = Symbol::intern(unmark(toks[2]));
      b.have_markers = true;
    } else if (head == "persistence") {
      if (toks.size() != 2 || (toks[1] != "literal" && toks[1] != "preserve")) {
        b.error(line, "persistence must be 'literal' or 'preserve'");
        continue;
      }
      b.net.persistence =
          toks[1] == "literal" ? Persistence::literal : Persistence::preserve;
    } else if (head == "node") {
      if (toks.size() != 2) {
        b.error(line, "node needs exactly one name");
        continue;
      }
      std::string name = unmark(toks[1]);
      if (b.net.find_node(name)) {
        b.error(line, "duplicate node name '" + name + "'");
        b.current.reset();
        continue;
      }
      b.net.node_names.push_back(name);
      b.net.processors.emplace_back();
      b.current = b.net.node_names.size() - 1;
    } else if (head == "mode" || head == "permit" || head == "forbid" ||
               head == "axiom" || head == "rule") {
      if (!b.current) {
        b.error(line, "'" + head + "' outside a node block");
        continue;
      }
      UniformProcessor& p = b.net.processors[*b.current];
      if (head == "mode") {
        if (toks.size() != 2 || (toks[1] != "s" && toks[1] != "w")) {
          b.error(line, "mode must be 's' or 'w'");
          continue;
        }
        p.filter.mode = toks[1] == "s" ? FilterMode::strong : FilterMode::weak;
      } else if (head == "permit") {
        p.filter.permitting = symbols_from(toks, 1);
      } else if (head == "forbid") {
        p.filter.forbidding = symbols_from(toks, 1);
      } else if (head == "axiom") {
        auto w = parse_component(toks, 1, toks.size());
        if (!w) {
          b.error(line, "malformed axiom");
          continue;
        }
        p.axioms.insert(std::move(*w));
      } else {
        auto r = parse_rule_line(toks);
        if (!r) {
          b.error(line, "malformed rule, expected (u1,u2);(v1,v2)");
          continue;
        }
        p.rules.push_back(std::move(*r));
      }
    } else if (head == "edge") {
      if (toks.size() != 3) {
        b.error(line, "edge needs exactly two node names");
        continue;
      }
      b.raw_edges.emplace_back(line, unmark(toks[1]), unmark(toks[2]));
    } else if (head == "input-node") {
      if (toks.size() != 2) {
        b.error(line, "input-node needs exactly one name");
        continue;
      }
      b.raw_input = {line, unmark(toks[1])};
    } else if (head == "halt-node") {
      if (toks.size() != 2) {
        b.error(line, "halt-node needs exactly one name");
        continue;
      }
      b.raw_halt = {line, unmark(toks[1])};
    } else {
      b.error(line, "unknown section '" + unmark(toks[0]) + "'");
    }
  }

  if (!b.have_markers) result.diagnostics.push_back({0, "missing markers line"});
  if (b.net.node_names.empty()) result.diagnostics.push_back({0, "no nodes declared"});

  for (auto& [line, from, to] : b.raw_edges) {
    auto a = b.net.find_node(from);
    auto c = b.net.find_node(to);
    if (!a) b.error(line, "edge references undeclared node '" + from + "'");
    if (!c) b.error(line, "edge references undeclared node '" + to + "'");
    if (a && c) b.net.edges.emplace_back(*a, *c);
  }
  auto resolve = [&](const std::optional<std::pair<std::size_t, std::string>>& raw,
                     const char* what, std::size_t& slot) {
    if (!raw) {
      result.diagnostics.push_back({0, std::string("missing ") + what + " line"});
      return;
    }
    auto ix = b.net.find_node(raw->second);
    if (!ix) {
      b.error(raw->first, std::string(what) + " references undeclared node '" +
                              raw->second + "'");
      return;
    }
    slot = *ix;
  };
  resolve(b.raw_input, "input-node", b.net.input_node);
  resolve(b.raw_halt, "halt-node", b.net.halt_node);

  // Undeclared-symbol checks, once the alphabet is known.
  if (!b.net.network_alphabet.empty()) {
    auto check_word = [&](const Word& w, const std::string& where) {
      for (Symbol s : w) {
        if (!b.net.network_alphabet.count(s)) {
          result.diagnostics.push_back(
              {0, where + " uses undeclared symbol '" + s.text() + "'"});
          return;
        }
      }
    };
    for (std::size_t i = 0; i < b.net.processors.size(); ++i) {
      const UniformProcessor& p = b.net.processors[i];
      const std::string& name = b.net.node_names[i];
      for (const Word& a : p.axioms) check_word(a, "node '" + name + "' axiom");
      for (const SplicingRule& r : p.rules) {
        check_word(r.first_keep, "node '" + name + "' rule");
        check_word(r.first_cut, "node '" + name + "' rule");
        check_word(r.second_cut, "node '" + name + "' rule");
        check_word(r.second_keep, "node '" + name + "' rule");
      }
      for (Symbol s : p.filter.permitting) {
        check_word(Word({s}), "node '" + name + "' permit");
      }
      for (Symbol s : p.filter.forbidding) {
        check_word(Word({s}), "node '" + name + "' forbid");
      }
    }
  }

  if (result.diagnostics.empty()) result.value = std::move(b.net);
  return result;
}

namespace {

std::string render_rule_line(const SplicingRule& r) {
  return "rule (" + render_word(r.first_keep) + " , " + render_word(r.first_cut) +
         ") ; (" + render_word(r.second_cut) + " , " + render_word(r.second_keep) +
         ")";
}

bool rule_text_less(const SplicingRule& a, const SplicingRule& b) {
  WordTextLess less;
  auto tup = [](const SplicingRule& r) {
    return std::array<const Word*, 4>{&r.first_keep, &r.first_cut, &r.second_cut,
                                      &r.second_keep};
  };
  auto ta = tup(a);
  auto tb = tup(b);
  for (int i = 0; i < 4; ++i) {
    if (less(*ta[i], *tb[i])) return true;
    if (less(*tb[i], *ta[i])) return false;
  }
  return false;
}

void emit_symbols(std::ostringstream& os, const SymbolSet& set) {
  std::vector<Symbol> sorted(set.begin(), set.end());
  std::sort(sorted.begin(), sorted.end(), SymbolTextLess{});
  for (Symbol s : sorted) os << ' ' << quote_token(s.text());
}

}  // namespace

std::string emit_network(const Network& net) {
  std::ostringstream os;
  os << "alphabet input";
  emit_symbols(os, net.input_alphabet);
  os << "\nalphabet network";
  emit_symbols(os, net.network_alphabet);
  os << "\nmarkers " << quote_token(net.left_marker.text()) << ' '
     << quote_token(net.right_marker.text()) << "\n";
  os << "persistence "
     << (net.persistence == Persistence::literal ? "literal" : "preserve") << "\n";

  for (std::size_t i = 0; i < net.node_count(); ++i) {
    const UniformProcessor& p = net.processors[i];
    os << "\nnode " << quote_token(net.node_names[i]) << "\n";
    os << "  mode " << (p.filter.mode == FilterMode::strong ? 's' : 'w') << "\n";
    os << "  permit";
    emit_symbols(os, p.filter.permitting);
    os << "\n  forbid";
    emit_symbols(os, p.filter.forbidding);
    os << "\n";
    std::vector<Word> axioms(p.axioms.begin(), p.axioms.end());
    std::sort(axioms.begin(), axioms.end(), WordTextLess{});
    for (const Word& a : axioms) os << "  axiom " << render_word(a) << "\n";
    std::vector<SplicingRule> rules = p.rules;
    std::sort(rules.begin(), rules.end(), rule_text_less);
    rules.erase(std::unique(rules.begin(), rules.end()), rules.end());
    for (const SplicingRule& r : rules) os << "  " << render_rule_line(r) << "\n";
  }

  os << "\n";
  std::vector<std::pair<std::string, std::string>> edges;
  for (auto [a, b] : net.edges) {
    std::string na = net.node_names[a];
    std::string nb = net.node_names[b];
    if (nb < na) std::swap(na, nb);
    edges.emplace_back(std::move(na), std::move(nb));
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  for (auto& [a, b] : edges) {
    os << "edge " << quote_token(a) << ' ' << quote_token(b) << "\n";
  }
  os << "input-node " << quote_token(net.node_names[net.input_node]) << "\n";
  os << "halt-node " << quote_token(net.node_names[net.halt_node]) << "\n";
  return os.str();
}

std::string emit_compiled_network(const CompiledNetwork& cn) {
  std::ostringstream os;
  os << "# compiled simulating network, "
     << (cn.persistence == Persistence::literal ? "literal" : "preserve")
     << " persistence\n";
  os << "# accepting runs take at most " << cn.overhead_slope << "*depth + "
     << cn.overhead_intercept << " steps\n#\n";
  for (const auto& [name, role] : cn.node_legend) {
    os << "# node " << name << " : " << role << "\n";
  }
  os << "#\n";
  for (const auto& [sym, meaning] : cn.symbol_legend) {
    os << "# symbol " << quote_token(sym.text()) << " : " << meaning << "\n";
  }
  os << "\n" << emit_network(cn.network);
  return os.str();
}

// ---- machine ----

Parsed<TuringMachine> parse_machine(std::string_view text) {
  Parsed<TuringMachine> result;
  TuringMachine m;
  bool have_blank = false, have_initial = false;
  LineReader reader(text, result.diagnostics);
  auto error = [&](std::size_t line, const std::string& msg) {
    result.diagnostics.push_back({line, msg});
  };

  for (auto& [line, toks] : reader.lines) {
    const std::string head = was_quoted(toks[0]) ? "" : toks[0];
    if (head == "states") {
      for (std::size_t i = 1; i < toks.size(); ++i) m.states.push_back(unmark(toks[i]));
    } else if (head == "input-alphabet") {
      for (std::size_t i = 1; i < toks.size(); ++i) {
        m.input_alphabet.insert(Symbol::intern(unmark(toks[i])));
      }
    } else if (head == "tape-alphabet") {
      for (std::size_t i = 1; i < toks.size(); ++i) {
        m.tape_alphabet.insert(Symbol::intern(unmark(toks[i])));
      }
    } else if (head == "blank") {
      if (toks.size() != 2) {
        error(line, "blank needs exactly one symbol");
        continue;
      }
      m.blank = Symbol::intern(unmark(toks[1]));
      have_blank = true;
    } else if (head == "initial") {
      if (toks.size() != 2) {
        error(line, "initial needs exactly one state");
        continue;
      }
      m.initial_state = unmark(toks[1]);
      have_initial = true;
    } else if (head == "accepting") {
      for (std::size_t i = 1; i < toks.size(); ++i) m.accepting.insert(unmark(toks[i]));
    } else if (head == "trans") {
      // trans q a -> s b R
      if (toks.size() != 7 || toks[3] != "->" ||
          (toks[6] != "R" && toks[6] != "L")) {
        error(line, "malformed transition, expected 'trans q a -> s b R|L'");
        continue;
      }
      TmTransition t;
      t.from = unmark(toks[1]);
      t.read = Symbol::intern(unmark(toks[2]));
      t.to = unmark(toks[4]);
      t.write = Symbol::intern(unmark(toks[5]));
      t.move = toks[6] == "R" ? HeadMove::right : HeadMove::left;
      m.transitions.push_back(std::move(t));
    } else {
      error(line, "unknown section '" + unmark(toks[0]) + "'");
    }
  }

  if (!have_blank) result.diagnostics.push_back({0, "missing blank line"});
  if (!have_initial) result.diagnostics.push_back({0, "missing initial line"});
  if (m.states.empty()) result.diagnostics.push_back({0, "no states declared"});

  if (result.diagnostics.empty()) {
    ValidationReport report = validate(m);
    for (const std::string& v : report.violations) {
      result.diagnostics.push_back({0, v});
    }
  }
  if (result.diagnostics.empty()) result.value = std::move(m);
  return result;
}

std::string emit_machine(const TuringMachine& m) {
  std::ostringstream os;
  os << "states";
  for (const std::string& q : m.states) os << ' ' << quote_token(q);
  os << "\ninput-alphabet";
  emit_symbols(os, m.input_alphabet);
  os << "\ntape-alphabet";
  emit_symbols(os, m.tape_alphabet);
  os << "\nblank " << quote_token(m.blank.text());
  os << "\ninitial " << quote_token(m.initial_state);
  os << "\naccepting";
  for (const std::string& q : m.accepting) os << ' ' << quote_token(q);
  os << "\n";
  for (const TmTransition& t : m.transitions) {
    os << "trans " << quote_token(t.from) << ' ' << quote_token(t.read.text())
       << " -> " << quote_token(t.to) << ' ' << quote_token(t.write.text()) << ' '
       << (t.move == HeadMove::right ? 'R' : 'L') << "\n";
  }
  return os.str();
}

// ---- trace ----

std::string emit_trace(const Trace& trace, const Network& net, const Verdict& verdict,
                       bool full) {
  std::ostringstream os;
  os << "nodes";
  for (const std::string& n : net.node_names) os << ' ' << quote_token(n);
  os << "\n";
  for (const TraceEvent& e : trace.events) {
    os << "step " << e.index << ' '
       << (e.kind == StepKind::splice ? "splice" : "communicate") << " cells";
    for (std::size_t n : e.node_sizes) os << ' ' << n;
    os << " lost " << e.lost << "\n";
    if (full && e.contents) {
      for (std::size_t i = 0; i < e.contents->size(); ++i) {
        std::vector<Word> words((*e.contents)[i].begin(), (*e.contents)[i].end());
        std::sort(words.begin(), words.end(), WordTextLess{});
        for (const Word& w : words) {
          os << "  word " << quote_token(net.node_names[i]) << " : " << render_word(w)
             << "\n";
        }
      }
      if (e.lost_words) {
        std::vector<Word> words(e.lost_words->begin(), e.lost_words->end());
        std::sort(words.begin(), words.end(), WordTextLess{});
        for (const Word& w : words) os << "  lost-word : " << render_word(w) << "\n";
      }
    }
  }
  os << "verdict " << to_string(verdict.kind) << ' ' << verdict.step << "\n";
  return os.str();
}

Parsed<TraceDocument> parse_trace(std::string_view text) {
  Parsed<TraceDocument> result;
  TraceDocument doc;
  LineReader reader(text, result.diagnostics);
  auto error = [&](std::size_t line, const std::string& msg) {
    result.diagnostics.push_back({line, msg});
  };

  for (auto& [line, toks] : reader.lines) {
    const std::string head = was_quoted(toks[0]) ? "" : toks[0];
    if (head == "nodes") {
      for (std::size_t i = 1; i < toks.size(); ++i) {
        doc.node_names.push_back(unmark(toks[i]));
      }
    } else if (head == "step") {
      TraceEvent e;
      std::size_t i = 1;
      if (i >= toks.size()) {
        error(line, "step line too short");
        continue;
      }
      e.index = std::stoul(toks[i++]);
      if (i >= toks.size() || (toks[i] != "splice" && toks[i] != "communicate")) {
        error(line, "step kind must be splice or communicate");
        continue;
      }
      e.kind = toks[i++] == "splice" ? StepKind::splice : StepKind::communicate;
      if (i >= toks.size() || toks[i] != "cells") {
        error(line, "missing cells section");
        continue;
      }
      ++i;
      while (i < toks.size() && toks[i] != "lost") {
        e.node_sizes.push_back(std::stoul(toks[i++]));
      }
      if (i >= toks.size() || toks[i] != "lost" || i + 1 >= toks.size()) {
        error(line, "missing lost count");
        continue;
      }
      e.lost = std::stoul(toks[i + 1]);
      doc.trace.events.push_back(std::move(e));
    } else if (head == "word" || head == "lost-word") {
      continue;  // contents lines are informational
    } else if (head == "verdict") {
      if (toks.size() != 3) {
        error(line, "verdict line needs kind and step");
        continue;
      }
      Verdict v;
      const std::string& kind = toks[1];
      if (kind == "accepted") v.kind = VerdictKind::accepted;
      else if (kind == "step-limit") v.kind = VerdictKind::step_limit_reached;
      else if (kind == "resource-limit") v.kind = VerdictKind::resource_limit_reached;
      else if (kind == "cycle") v.kind = VerdictKind::cycle_detected;
      else if (kind == "exhausted") v.kind = VerdictKind::exhausted;
      else {
        error(line, "unknown verdict kind '" + kind + "'");
        continue;
      }
      v.step = std::stoul(toks[2]);
      doc.verdict = v;
    } else {
      error(line, "unknown trace line '" + unmark(toks[0]) + "'");
    }
  }

  if (result.diagnostics.empty()) result.value = std::move(doc);
  return result;
}

}  // namespace nusp
