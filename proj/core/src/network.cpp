#include "nusp/network.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace nusp {

std::optional<std::size_t> Network::find_node(const std::string& name) const {
  for (std::size_t i = 0; i < node_names.size(); ++i) {
    if (node_names[i] == name) return i;
  }
  return std::nullopt;
}

std::vector<std::vector<std::size_t>> Network::adjacency() const {
  std::vector<std::set<std::size_t>> adj(node_count());
  for (auto [a, b] : edges) {
    if (a < node_count() && b < node_count() && a != b) {
      adj[a].insert(b);
      adj[b].insert(a);
    }
  }
  std::vector<std::vector<std::size_t>> out(node_count());
  for (std::size_t i = 0; i < adj.size(); ++i) {
    out[i].assign(adj[i].begin(), adj[i].end());
  }
  return out;
}

namespace {

bool word_over(const Word& w, const SymbolSet& alphabet) {
  return std::all_of(w.begin(), w.end(),
                     [&](Symbol s) { return alphabet.count(s) != 0; });
}

}  // namespace

ValidationReport validate(const Network& net) {
  ValidationReport report;
  auto violation = [&](const std::string& msg) { report.violations.push_back(msg); };
  auto warning = [&](const std::string& msg) { report.warnings.push_back(msg); };

  for (Symbol s : net.input_alphabet) {
    if (!net.network_alphabet.count(s)) {
      violation("input symbol '" + s.text() + "' missing from network alphabet");
    }
  }
  for (Symbol m : {net.left_marker, net.right_marker}) {
    if (net.input_alphabet.count(m)) {
      violation("marker '" + m.text() + "' must not belong to the input alphabet");
    }
    if (!net.network_alphabet.count(m)) {
      violation("marker '" + m.text() + "' missing from network alphabet");
    }
  }

  if (net.processors.size() != net.node_count()) {
    violation("processor count does not match node count");
  }
  if (net.node_count() == 0) {
    violation("network has no nodes");
    return report;
  }
  if (net.input_node >= net.node_count()) violation("input node out of range");
  if (net.halt_node >= net.node_count()) violation("halt node out of range");
  if (net.input_node == net.halt_node) {
    violation("input node and halt node must differ");
  }

  {
    std::set<std::string> seen;
    for (const std::string& name : net.node_names) {
      if (!seen.insert(name).second) violation("duplicate node name '" + name + "'");
    }
  }

  for (auto [a, b] : net.edges) {
    if (a >= net.node_count() || b >= net.node_count()) {
      std::ostringstream os;
      os << "edge {" << a << "," << b << "} references an unknown node";
      violation(os.str());
    } else if (a == b) {
      violation("self-loop on node '" + net.node_names[a] + "'");
    }
  }

  for (std::size_t i = 0; i < net.processors.size() && i < net.node_count(); ++i) {
    const UniformProcessor& p = net.processors[i];
    const std::string& name = net.node_names[i];
    for (Symbol s : p.filter.permitting) {
      if (p.filter.forbidding.count(s)) {
        violation("node '" + name + "': symbol '" + s.text() +
                  "' is both permitting and forbidding");
      }
      if (!net.network_alphabet.count(s)) {
        violation("node '" + name + "': permitting symbol '" + s.text() +
                  "' outside the network alphabet");
      }
    }
    for (Symbol s : p.filter.forbidding) {
      if (!net.network_alphabet.count(s)) {
        violation("node '" + name + "': forbidding symbol '" + s.text() +
                  "' outside the network alphabet");
      }
    }
    if (p.filter.permitting.empty()) warning("node '" + name + "': empty permitting set");
    if (p.filter.forbidding.empty()) warning("node '" + name + "': empty forbidding set");
    for (const Word& a : p.axioms) {
      if (!word_over(a, net.network_alphabet)) {
        violation("node '" + name + "': axiom '" + a.str() +
                  "' uses symbols outside the network alphabet");
      }
    }
    for (const SplicingRule& r : p.rules) {
      for (const Word* component :
           {&r.first_keep, &r.first_cut, &r.second_cut, &r.second_keep}) {
        if (!word_over(*component, net.network_alphabet)) {
          violation("node '" + name + "': rule component '" + component->str() +
                    "' uses symbols outside the network alphabet");
        }
      }
    }
  }

  return report;
}

}  // namespace nusp
