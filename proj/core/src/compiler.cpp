#include "nusp/compiler.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <vector>

namespace nusp {
namespace {

// The simulation works on circular tape words
//
//   <state-or-phase marker> X $ Y >'
//
// read as: the tape is Y followed by X, the marker's mode says where the head
// is. Mode F puts the head on the first symbol of X (right after the marker),
// mode B on the last symbol of Y (right before >'). Both cells the machine
// can touch next sit at the word ends, where splicing rules can reach them,
// so every transition costs a constant number of splicing steps:
//
//   (q,a,s,b,R) from mode F: drop the verified a at the front, append b at
//     the back, stay in mode F. An emptied front means the head ran onto
//     fresh tape; Res inserts a blank then.
//   (q,a,s,b,L) from mode F: rewrite a to b in place, flip to mode B. The
//     head-at-front variant node checks the back is non-empty, a left move
//     off cell 0 has no legal encoding and the word is dropped.
//   (q,a,s,b,R) from mode B: rewrite the back cell, flip to mode F.
//   (q,a,s,b,L) from mode B: rewrite and rotate the back cell to the front,
//     requiring a second back symbol so the move cannot fall off the tape.
//
// Routing uses one weak filter per node: words enter on one marker, every
// splice swaps markers, and the final marker is the same filter's exit pass.
// Intermediate markers sit in no permitting set, so half-done words stay put,
// and every foreign marker is forbidden, so nothing flows backwards. Words
// that guess a transition whose read symbol does not match simply never
// splice again and vanish with the next splicing step (or leave and find no
// taker). Scaffold symbols E, G, J, K mark the cut-off halves of axioms and
// never survive into live words.

struct TransitionTokens {
  Symbol guess_f, guess_b;  // transition chosen, not yet verified
  Symbol f1;                // front work done
  Symbol b1;                // back commitment marker
  Symbol stamp_f1, stamp_f2, stamp_b1;
  // direction-specific
  Symbol f1r, b1r;  // blank-repair phases (right moves)
  Symbol b2;        // front insertion done (left moves)
};

Word word(std::vector<Symbol> syms) { return Word(std::move(syms)); }

SplicingRule rule(std::vector<Symbol> first_keep, std::vector<Symbol> first_cut,
                  std::vector<Symbol> second_cut, std::vector<Symbol> second_keep) {
  return SplicingRule{Word(std::move(first_keep)), Word(std::move(first_cut)),
                      Word(std::move(second_cut)), Word(std::move(second_keep))};
}

}  // namespace

CompiledNetwork compile(const TuringMachine& m, Persistence persistence) {
  ValidationReport mreport = validate(m);
  if (!mreport.ok()) {
    throw compile_error("invalid machine: " + mreport.violations.front());
  }

  // Duplicate transitions collapse; the size law counts distinct ones.
  std::vector<TmTransition> delta;
  for (const TmTransition& t : m.transitions) {
    if (std::find(delta.begin(), delta.end(), t) == delta.end()) delta.push_back(t);
  }
  if (delta.empty()) throw compile_error("machine has no transitions");

  std::vector<std::string> generated;
  auto fresh = [&](std::string text) {
    generated.push_back(text);
    return Symbol::intern(text);
  };

  Symbol lmark = fresh("<");
  Symbol rmark = fresh(">");
  Symbol rwork = fresh(">'");
  Symbol origin = fresh("$");
  Symbol E = fresh("E");
  Symbol G = fresh("G");
  Symbol J = fresh("J");
  Symbol K = fresh("K");
  Symbol acc = fresh("<^{acc}");

  std::map<std::string, Symbol> state_f, state_b;
  for (const std::string& q : m.states) {
    state_f.emplace(q, fresh("<^{" + q + ",F}"));
    state_b.emplace(q, fresh("<^{" + q + ",B}"));
  }

  std::vector<TransitionTokens> tok(delta.size());
  for (std::size_t i = 0; i < delta.size(); ++i) {
    std::string label = "t" + std::to_string(i + 1);
    TransitionTokens& tt = tok[i];
    tt.guess_f = fresh("<^{" + label + ".F}");
    tt.guess_b = fresh("<^{" + label + ".B}");
    tt.f1 = fresh("<^{" + label + ".f1}");
    tt.b1 = fresh("<^{" + label + ".b1}");
    tt.stamp_f1 = fresh(">'{" + label + ".f1}");
    tt.stamp_f2 = fresh(">'{" + label + ".f2}");
    tt.stamp_b1 = fresh(">'{" + label + ".b1}");
    if (delta[i].move == HeadMove::right) {
      tt.f1r = fresh("<^{" + label + ".f1r}");
      tt.b1r = fresh("<^{" + label + ".b1r}");
    } else {
      tt.b2 = fresh("<^{" + label + ".b2}");
    }
  }

  {
    std::set<std::string> seen;
    for (const std::string& g : generated) {
      if (!seen.insert(g).second) {
        throw compile_error("generated marker token '" + g +
                            "' is ambiguous; rename the colliding state");
      }
    }
    for (Symbol s : m.tape_alphabet) {
      if (seen.count(s.text())) {
        throw compile_error("tape symbol '" + s.text() +
                            "' collides with a generated marker token");
      }
    }
  }

  const Symbol B = m.blank;
  const Symbol q0f = state_f.at(m.initial_state);
  const bool has_accepting = !m.accepting.empty();

  // Everything a filter may legitimately forbid. Tape symbols, $ and the
  // plain working marker >' occur in every live word and stay out.
  SymbolSet all_special{lmark, rmark, E, G, J, K, acc};
  for (auto& [q, s] : state_f) all_special.insert(s);
  for (auto& [q, s] : state_b) all_special.insert(s);
  for (std::size_t i = 0; i < delta.size(); ++i) {
    const TransitionTokens& tt = tok[i];
    all_special.insert(tt.guess_f);
    all_special.insert(tt.guess_b);
    all_special.insert(tt.f1);
    all_special.insert(tt.b1);
    all_special.insert(tt.stamp_f1);
    all_special.insert(tt.stamp_f2);
    all_special.insert(tt.stamp_b1);
    if (delta[i].move == HeadMove::right) {
      all_special.insert(tt.f1r);
      all_special.insert(tt.b1r);
    } else {
      all_special.insert(tt.b2);
    }
  }
  auto forbid_except = [&](const SymbolSet& spare) {
    SymbolSet out;
    for (Symbol s : all_special) {
      if (!spare.count(s)) out.insert(s);
    }
    return out;
  };

  CompiledNetwork cn;
  cn.persistence = persistence;
  Network& net = cn.network;
  net.persistence = persistence;
  net.input_alphabet = m.input_alphabet;
  net.left_marker = lmark;
  net.right_marker = rmark;

  net.network_alphabet = m.tape_alphabet;
  for (Symbol s : m.input_alphabet) net.network_alphabet.insert(s);
  net.network_alphabet.insert({lmark, rmark, rwork, origin, E, G, J, K, acc});
  for (Symbol s : all_special) net.network_alphabet.insert(s);
  net.network_alphabet.insert(origin);
  net.network_alphabet.insert(rwork);

  auto add_node = [&](const std::string& name, UniformProcessor p,
                      const std::string& role) {
    net.node_names.push_back(name);
    net.processors.push_back(std::move(p));
    cn.node_legend[name] = role;
    return net.node_names.size() - 1;
  };

  // In: <w>  ->  <^{q0,F} w B $ >'  in two splicing steps. The two partial
  // rewrites commute; the half with $ is trapped by the forbidden < until
  // both halves are done.
  {
    UniformProcessor p;
    p.axioms.insert(word({q0f, E}));
    p.axioms.insert(word({G, B, origin, rwork}));
    p.rules.push_back(rule({q0f}, {E}, {lmark}, {}));
    p.rules.push_back(rule({}, {rmark}, {G}, {B}));
    p.filter.mode = FilterMode::weak;
    p.filter.permitting = {origin};
    SymbolSet spare{q0f};
    p.filter.forbidding = forbid_except(spare);
    add_node("In", std::move(p), "builds the initial circular tape word");
  }

  // Sim: swap the plain state marker for one transition guess per applicable
  // transition, all in different copies; accepting states gain the accept
  // marker here as well.
  {
    UniformProcessor p;
    for (std::size_t i = 0; i < delta.size(); ++i) {
      const TmTransition& t = delta[i];
      p.axioms.insert(word({tok[i].guess_f, J}));
      p.axioms.insert(word({tok[i].guess_b, J}));
      p.rules.push_back(rule({tok[i].guess_f}, {J}, {state_f.at(t.from)}, {}));
      p.rules.push_back(rule({tok[i].guess_b}, {J}, {state_b.at(t.from)}, {}));
    }
    if (has_accepting) {
      p.axioms.insert(word({acc, J}));
      for (const std::string& f : m.accepting) {
        p.rules.push_back(rule({acc}, {J}, {state_f.at(f)}, {}));
        p.rules.push_back(rule({acc}, {J}, {state_b.at(f)}, {}));
      }
    }
    p.filter.mode = FilterMode::weak;
    SymbolSet spare;
    for (auto& [q, s] : state_f) {
      p.filter.permitting.insert(s);
      spare.insert(s);
    }
    for (auto& [q, s] : state_b) {
      p.filter.permitting.insert(s);
      spare.insert(s);
    }
    for (std::size_t i = 0; i < delta.size(); ++i) {
      p.filter.permitting.insert(tok[i].guess_f);
      p.filter.permitting.insert(tok[i].guess_b);
      spare.insert(tok[i].guess_f);
      spare.insert(tok[i].guess_b);
    }
    if (has_accepting) {
      p.filter.permitting.insert(acc);
      spare.insert(acc);
    }
    p.filter.forbidding = forbid_except(spare);
    add_node("Sim", std::move(p),
             "guesses the next transition; stamps acceptance on accepting states");
  }

  // Res: strip the transit stamp, repair an emptied head side with a blank,
  // and restore the plain state marker (or the accept marker) so the cycle
  // can resume at Sim.
  {
    UniformProcessor p;
    p.axioms.insert(word({K, rwork}));
    SymbolSet spare;
    auto restore_exit = [&](Symbol target) {
      p.axioms.insert(word({target, J}));
      p.filter.permitting.insert(target);
      spare.insert(target);
    };
    for (auto& [q, s] : state_f) restore_exit(s);
    for (auto& [q, s] : state_b) restore_exit(s);
    if (has_accepting) restore_exit(acc);

    for (std::size_t i = 0; i < delta.size(); ++i) {
      const TmTransition& t = delta[i];
      const TransitionTokens& tt = tok[i];
      bool accepts = m.accepting.count(t.to) != 0;
      p.rules.push_back(rule({}, {tt.stamp_f2}, {K}, {rwork}));
      p.rules.push_back(rule({}, {tt.stamp_b1}, {K}, {rwork}));
      p.filter.permitting.insert(tt.stamp_f2);
      p.filter.permitting.insert(tt.stamp_b1);
      spare.insert(tt.stamp_f2);
      spare.insert(tt.stamp_b1);
      spare.insert(tt.f1);

      if (t.move == HeadMove::right) {
        Symbol out = state_f.at(t.to);
        p.rules.push_back(rule({out}, {J}, {tt.f1}, {}));
        p.rules.push_back(rule({tt.f1r, B}, {J}, {tt.f1}, {origin}));
        p.rules.push_back(rule({out}, {J}, {tt.f1r}, {B, origin}));
        p.rules.push_back(rule({out}, {J}, {tt.b1}, {}));
        p.rules.push_back(rule({tt.b1r, B}, {J}, {tt.b1}, {origin}));
        p.rules.push_back(rule({out}, {J}, {tt.b1r}, {B, origin}));
        p.axioms.insert(word({tt.f1r, B, J}));
        p.axioms.insert(word({tt.b1r, B, J}));
        spare.insert(tt.b1);
        spare.insert(tt.f1r);
        spare.insert(tt.b1r);
        if (accepts) {
          p.rules.push_back(rule({acc}, {J}, {tt.f1}, {}));
          p.rules.push_back(rule({acc}, {J}, {tt.f1r}, {B, origin}));
          p.rules.push_back(rule({acc}, {J}, {tt.b1}, {}));
          p.rules.push_back(rule({acc}, {J}, {tt.b1r}, {B, origin}));
        }
      } else {
        Symbol out = state_b.at(t.to);
        p.rules.push_back(rule({out}, {J}, {tt.f1}, {}));
        p.rules.push_back(rule({out}, {J}, {tt.b2}, {}));
        spare.insert(tt.b2);
        if (accepts) {
          p.rules.push_back(rule({acc}, {J}, {tt.f1}, {}));
          p.rules.push_back(rule({acc}, {J}, {tt.b2}, {}));
        }
      }
    }
    p.filter.mode = FilterMode::weak;
    p.filter.forbidding = forbid_except(spare);
    add_node("Res", std::move(p),
             "restores the plain state marker and feeds the cycle back to Sim");
  }

  // Halt: pure collector, no rules.
  {
    UniformProcessor p;
    p.filter.mode = FilterMode::weak;
    p.filter.permitting = {acc};
    SymbolSet spare{acc};
    for (std::size_t i = 0; i < delta.size(); ++i) {
      spare.insert(tok[i].stamp_f2);
      spare.insert(tok[i].stamp_b1);
    }
    p.filter.forbidding = forbid_except(spare);
    add_node("Halt", std::move(p), "collects accepted words");
  }

  for (std::size_t i = 0; i < delta.size(); ++i) {
    const TmTransition& t = delta[i];
    const TransitionTokens& tt = tok[i];
    std::string label = "t" + std::to_string(i + 1);
    std::ostringstream desc;
    desc << "(" << t.from << "," << t.read.text() << "," << t.to << ","
         << t.write.text() << "," << (t.move == HeadMove::right ? "R" : "L") << ")";

    // Head-at-front variant.
    {
      UniformProcessor p;
      if (t.move == HeadMove::right) {
        // Verify and drop the head symbol, then append the written one.
        p.rules.push_back(rule({tt.f1}, {J}, {tt.guess_f, t.read}, {}));
        p.rules.push_back(rule({}, {rwork}, {K}, {t.write, tt.stamp_f1}));
        p.axioms.insert(word({tt.f1, J}));
        p.axioms.insert(word({K, t.write, tt.stamp_f1}));
      } else {
        // Rewrite in place and flip to mode B, then certify the back is
        // non-empty; a left move at cell 0 never earns the stamp.
        p.rules.push_back(rule({tt.f1, t.write}, {J}, {tt.guess_f, t.read}, {}));
        p.axioms.insert(word({tt.f1, t.write, J}));
        for (Symbol c : m.tape_alphabet) {
          p.rules.push_back(rule({}, {c, rwork}, {K}, {c, tt.stamp_f1}));
          p.axioms.insert(word({K, c, tt.stamp_f1}));
        }
      }
      p.filter.mode = FilterMode::weak;
      p.filter.permitting = {tt.guess_f, tt.stamp_f1};
      SymbolSet spare{tt.guess_f, tt.f1, tt.stamp_f1};
      p.filter.forbidding = forbid_except(spare);
      add_node(label + "F", std::move(p),
               "transition " + desc.str() + ", head-at-front simulation");
    }

    // Head-at-back variant; also hands front-variant words through to Res.
    {
      UniformProcessor p;
      p.rules.push_back(rule({tt.b1}, {J}, {tt.guess_b}, {}));
      p.axioms.insert(word({tt.b1, J}));
      p.rules.push_back(rule({}, {tt.stamp_f1}, {K}, {tt.stamp_f2}));
      p.axioms.insert(word({K, tt.stamp_f2}));
      SymbolSet spare{tt.guess_b, tt.b1, tt.stamp_f1, tt.stamp_f2, tt.f1};
      p.filter.mode = FilterMode::weak;
      p.filter.permitting = {tt.guess_b, tt.stamp_f1, tt.stamp_f2};
      if (t.move == HeadMove::right) {
        // Rewrite the back cell and flip to mode F.
        p.rules.push_back(rule({}, {t.read, rwork}, {K}, {t.write, tt.stamp_b1}));
        p.axioms.insert(word({K, t.write, tt.stamp_b1}));
        p.filter.permitting.insert(tt.stamp_b1);
        spare.insert(tt.stamp_b1);
      } else {
        // Rewrite and rotate the back cell to the front. The pattern wants a
        // second back symbol, so the move cannot fall off cell 0.
        for (Symbol c : m.tape_alphabet) {
          p.rules.push_back(rule({}, {c, t.read, rwork}, {K}, {c, tt.stamp_b1}));
          p.axioms.insert(word({K, c, tt.stamp_b1}));
        }
        for (Symbol e : m.tape_alphabet) {
          p.rules.push_back(rule({tt.b2, t.write}, {J}, {tt.b1}, {e}));
        }
        p.rules.push_back(rule({tt.b2, t.write}, {J}, {tt.b1}, {origin}));
        p.axioms.insert(word({tt.b2, t.write, J}));
        p.filter.permitting.insert(tt.b2);
        spare.insert(tt.b2);
        spare.insert(tt.stamp_b1);
      }
      p.filter.forbidding = forbid_except(spare);
      add_node(label + "B", std::move(p),
               "transition " + desc.str() + ", head-at-back simulation");
    }
  }

  const std::size_t in_ix = 0, sim_ix = 1, res_ix = 2, halt_ix = 3;
  net.input_node = in_ix;
  net.halt_node = halt_ix;
  net.edges.emplace_back(in_ix, sim_ix);
  net.edges.emplace_back(sim_ix, halt_ix);
  net.edges.emplace_back(res_ix, sim_ix);
  net.edges.emplace_back(res_ix, halt_ix);
  for (std::size_t i = 0; i < delta.size(); ++i) {
    std::size_t t1 = 4 + 2 * i;
    std::size_t t2 = 5 + 2 * i;
    net.edges.emplace_back(sim_ix, t1);
    net.edges.emplace_back(sim_ix, t2);
    net.edges.emplace_back(t1, t2);
    net.edges.emplace_back(t2, res_ix);
  }

  // Every splice costs two transitions (the splice and the communication
  // after it), moves between nodes ride on communications already counted.
  // Worst move is a right-mover needing the blank repair: guess + hop, two
  // splices at the front node, hop, hand-through, hop, then unstamp, repair
  // and restore at Res, final hop = 14 transitions. Bootstrap takes 4 and
  // the accept stamp plus the hop into Halt take 2 more.
  cn.overhead_slope = 14;
  cn.overhead_intercept = 6;

  // Legend for everything beyond the machine's own input symbols and blank.
  auto legend = [&](Symbol s, const std::string& text) { cn.symbol_legend[s] = text; };
  for (Symbol s : m.tape_alphabet) {
    if (!m.input_alphabet.count(s) && s != B) legend(s, "tape work symbol of the machine");
  }
  legend(B, "blank symbol of the machine");
  legend(lmark, "input left end marker");
  legend(rmark, "input right end marker");
  legend(rwork, "working right end marker");
  legend(origin, "tape origin: the tape is the part after $ followed by the part before $");
  legend(E, "bootstrap scaffold, never part of a live word");
  legend(G, "bootstrap scaffold, never part of a live word");
  legend(J, "axiom scaffold cut away by front rules");
  legend(K, "axiom scaffold cut away by back rules");
  legend(acc, "acceptance marker, the only symbol Halt admits");
  for (auto& [q, s] : state_f) legend(s, "state " + q + ", head on the first cell after the marker");
  for (auto& [q, s] : state_b) legend(s, "state " + q + ", head on the last cell before the right marker");
  for (std::size_t i = 0; i < delta.size(); ++i) {
    const TransitionTokens& tt = tok[i];
    std::string n = std::to_string(i + 1);
    bool right = delta[i].move == HeadMove::right;
    legend(tt.guess_f, "transition " + n + " guessed, head at front, read symbol unverified");
    legend(tt.guess_b, "transition " + n + " guessed, head at back, read symbol unverified");
    legend(tt.f1, right ? "transition " + n + ": head symbol verified and removed"
                        : "transition " + n + ": head cell rewritten, awaiting back check");
    legend(tt.b1, right ? "transition " + n + ": committed to the back rewrite"
                        : "transition " + n + ": committed to the back rotation");
    legend(tt.stamp_f1, right ? "transition " + n + ": written symbol appended at the back"
                              : "transition " + n + ": back certified non-empty");
    legend(tt.stamp_f2, "transition " + n + ": handed through the pair node toward Res");
    legend(tt.stamp_b1, right ? "transition " + n + ": back cell rewritten"
                              : "transition " + n + ": back cell removed");
    if (right) {
      legend(tt.f1r, "transition " + n + ": blank inserted at the emptied head position");
      legend(tt.b1r, "transition " + n + ": blank inserted at the emptied head position");
    } else {
      legend(tt.b2, "transition " + n + ": rotated symbol inserted at the front");
    }
  }

  return cn;
}

Word encode_input(const CompiledNetwork& cn, const Word& w) {
  for (Symbol s : w) {
    if (!cn.network.input_alphabet.count(s)) {
      throw std::invalid_argument("input symbol '" + s.text() +
                                  "' is not in the machine's input alphabet");
    }
  }
  Word out({cn.network.left_marker});
  out.append(w);
  out.append(Word({cn.network.right_marker}));
  return out;
}

namespace {

std::string render_rule(const SplicingRule& r) {
  auto part = [](const Word& w) { return w.empty() ? std::string("~") : w.str(); };
  return "[(" + part(r.first_keep) + " , " + part(r.first_cut) + ") ; (" +
         part(r.second_cut) + " , " + part(r.second_keep) + ")]";
}

}  // namespace

std::string explain(const CompiledNetwork& cn) {
  const Network& net = cn.network;
  std::ostringstream os;
  os << "network with " << net.node_count() << " nodes, persistence "
     << (net.persistence == Persistence::literal ? "literal" : "preserve") << "\n";
  os << "accepting runs take at most " << cn.overhead_slope << "*depth + "
     << cn.overhead_intercept << " steps\n\n";
  os << "roles:\n";
  for (const std::string& name : net.node_names) {
    auto it = cn.node_legend.find(name);
    os << "  " << name << ": " << (it == cn.node_legend.end() ? "?" : it->second)
       << "\n";
  }
  os << "\n";
  for (std::size_t i = 0; i < net.node_count(); ++i) {
    const UniformProcessor& p = net.processors[i];
    os << "node " << net.node_names[i] << "\n";
    os << "  mode " << (p.filter.mode == FilterMode::strong ? "strong" : "weak") << "\n";
    os << "  permit:";
    for (Symbol s : p.filter.permitting) os << " " << s.text();
    os << "\n  forbid:";
    for (Symbol s : p.filter.forbidding) os << " " << s.text();
    os << "\n";
    for (const Word& a : p.axioms) os << "  axiom " << a.str() << "\n";
    for (const SplicingRule& r : p.rules) os << "  rule " << render_rule(r) << "\n";
  }
  os << "\nsymbols:\n";
  for (const auto& [sym, meaning] : cn.symbol_legend) {
    os << "  " << sym.text() << " : " << meaning << "\n";
  }
  return os.str();
}

}  // namespace nusp
