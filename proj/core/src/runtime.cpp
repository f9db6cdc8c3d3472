#include "nusp/runtime.hpp"

#include <algorithm>
#include <future>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace nusp {

std::string to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::accepted: return "accepted";
    case VerdictKind::step_limit_reached: return "step-limit";
    case VerdictKind::resource_limit_reached: return "resource-limit";
    case VerdictKind::cycle_detected: return "cycle";
    case VerdictKind::exhausted: return "exhausted";
  }
  return "unknown";
}

Configuration initial_configuration(const Network& net, const Word& w) {
  for (Symbol s : w) {
    if (!net.input_alphabet.count(s)) {
      throw std::invalid_argument("input symbol '" + s.text() +
                                  "' is not in the input alphabet");
    }
  }
  Configuration c;
  c.contents.resize(net.node_count());
  Word wrapped({net.left_marker});
  wrapped.append(w);
  wrapped.append(Word({net.right_marker}));
  c.contents[net.input_node].insert(std::move(wrapped));
  return c;
}

namespace {

// Runs fn(i) for every node index, chunked over the requested thread count.
// Results are written into index-addressed slots, so the schedule cannot
// influence the outcome.
template <typename Fn>
void for_each_node(std::size_t count, unsigned threads, Fn&& fn) {
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  unsigned workers = std::min<unsigned>(threads, static_cast<unsigned>(count));
  std::vector<std::future<void>> futures;
  futures.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    futures.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < count; i += workers) fn(i);
    }));
  }
  for (auto& f : futures) f.get();
}

struct StepOutcome {
  Configuration next;
  WordSet lost;
  std::optional<std::string> breach;  // resource limit description
};

StepOutcome splice_once(const Network& net, const Configuration& c,
                        const RunLimits* limits, unsigned threads) {
  StepOutcome out;
  out.next.contents.resize(net.node_count());
  std::vector<std::optional<std::string>> breaches(net.node_count());

  for_each_node(net.node_count(), threads, [&](std::size_t i) {
    const UniformProcessor& p = net.processors[i];
    WordSet pool = c.contents[i];
    pool.insert(p.axioms.begin(), p.axioms.end());
    WordSet produced = splice_all(p.rules, pool);
    if (net.persistence == Persistence::preserve) {
      produced.insert(c.contents[i].begin(), c.contents[i].end());
    }
    if (limits) {
      for (const Word& w : produced) {
        if (w.size() > limits->max_word_length) {
          breaches[i] = "word longer than " + std::to_string(limits->max_word_length) +
                        " at node '" + net.node_names[i] + "'";
          break;
        }
      }
      if (!breaches[i] && produced.size() > limits->max_words_per_node) {
        breaches[i] = "more than " + std::to_string(limits->max_words_per_node) +
                      " words at node '" + net.node_names[i] + "'";
      }
    }
    out.next.contents[i] = std::move(produced);
  });

  for (auto& b : breaches) {
    if (b) {
      out.breach = std::move(b);
      break;
    }
  }
  return out;
}

StepOutcome communicate_once(const Network& net, const Configuration& c,
                             const RunLimits* limits, unsigned threads) {
  StepOutcome out;
  std::size_t n = net.node_count();
  out.next.contents.resize(n);
  auto adjacency = net.adjacency();

  // Phase 1: which words leave each node.
  std::vector<WordSet> leaving(n);
  for_each_node(n, threads, [&](std::size_t i) {
    leaving[i] = filter_words(c.contents[i], net.processors[i].filter);
  });

  // Phase 2: retained plus admitted arrivals, per receiving node.
  std::vector<std::optional<std::string>> breaches(n);
  for_each_node(n, threads, [&](std::size_t i) {
    WordSet next;
    for (const Word& w : c.contents[i]) {
      if (!leaving[i].count(w)) next.insert(w);
    }
    for (std::size_t y : adjacency[i]) {
      for (const Word& w : leaving[y]) {
        if (passes(w, net.processors[i].filter)) next.insert(w);
      }
    }
    if (limits && next.size() > limits->max_words_per_node) {
      breaches[i] = "more than " + std::to_string(limits->max_words_per_node) +
                    " words at node '" + net.node_names[i] + "'";
    }
    out.next.contents[i] = std::move(next);
  });

  // Phase 3: words sent out that no neighbour admits are lost.
  std::vector<WordSet> lost_per_node(n);
  for_each_node(n, threads, [&](std::size_t i) {
    for (const Word& w : leaving[i]) {
      bool taken = false;
      for (std::size_t y : adjacency[i]) {
        if (passes(w, net.processors[y].filter)) {
          taken = true;
          break;
        }
      }
      if (!taken) lost_per_node[i].insert(w);
    }
  });
  for (const WordSet& s : lost_per_node) out.lost.insert(s.begin(), s.end());

  for (auto& b : breaches) {
    if (b) {
      out.breach = std::move(b);
      break;
    }
  }
  return out;
}

// Canonical fingerprint for cycle detection. Word sets iterate in a fixed
// order, so encoding node by node is already canonical within a process.
std::string encode(const Configuration& c, bool splice_next) {
  std::ostringstream os;
  os << (splice_next ? 's' : 'c');
  for (const WordSet& node : c.contents) {
    os << '|';
    for (const Word& w : node) {
      for (Symbol s : w) os << s.id() << ',';
      os << ';';
    }
  }
  return os.str();
}

}  // namespace

Configuration splicing_step(const Network& net, const Configuration& c) {
  return splice_once(net, c, nullptr, 1).next;
}

CommunicationResult communication_step(const Network& net, const Configuration& c) {
  StepOutcome out = communicate_once(net, c, nullptr, 1);
  return {std::move(out.next), std::move(out.lost)};
}

bool is_halting(const Network& net, const Configuration& c) {
  return !c.contents[net.halt_node].empty();
}

RunResult run(const Network& net, const Word& input, const RunLimits& limits,
              const RunOptions& options) {
  ValidationReport report = validate(net);
  if (!report.ok()) {
    throw std::invalid_argument("invalid network: " + report.violations.front());
  }

  // Nothing can reappear once all nodes are empty and no node can splice
  // from its axioms alone.
  bool axioms_inert = true;
  for (const UniformProcessor& p : net.processors) {
    if (!splice_all(p.rules, p.axioms).empty()) {
      axioms_inert = false;
      break;
    }
  }

  RunResult result;
  Configuration current = initial_configuration(net, input);
  std::unordered_set<std::string> seen;
  seen.insert(encode(current, true));

  for (std::size_t step = 0;; ++step) {
    if (step == limits.max_steps) {
      result.verdict = {VerdictKind::step_limit_reached, step};
      return result;
    }
    bool splice = (step % 2 == 0);
    StepOutcome outcome = splice
                              ? splice_once(net, current, &limits, options.threads)
                              : communicate_once(net, current, &limits, options.threads);
    std::size_t config_index = step + 1;
    if (outcome.breach) {
      result.verdict = {VerdictKind::resource_limit_reached, config_index};
      return result;
    }
    current = std::move(outcome.next);

    TraceEvent event;
    event.index = step;
    event.kind = splice ? StepKind::splice : StepKind::communicate;
    event.node_sizes.reserve(net.node_count());
    for (const WordSet& node : current.contents) event.node_sizes.push_back(node.size());
    event.lost = outcome.lost.size();
    if (options.record_contents) {
      event.contents = current.contents;
      event.lost_words = outcome.lost;
    }
    result.trace.events.push_back(std::move(event));

    if (is_halting(net, current)) {
      result.verdict = {VerdictKind::accepted, config_index};
      return result;
    }
    if (!splice) {
      bool all_empty = std::all_of(current.contents.begin(), current.contents.end(),
                                   [](const WordSet& s) { return s.empty(); });
      if (all_empty && axioms_inert) {
        result.verdict = {VerdictKind::exhausted, config_index};
        return result;
      }
    }
    if (!seen.insert(encode(current, step % 2 == 1)).second) {
      result.verdict = {VerdictKind::cycle_detected, config_index};
      return result;
    }
  }
}

TimeProfile time_profile(const Network& net, const std::vector<Word>& words,
                         const RunLimits& limits, const RunOptions& options) {
  TimeProfile profile;
  for (const Word& w : words) {
    RunResult r = run(net, w, limits, options);
    if (r.verdict.accepted()) {
      auto [it, inserted] = profile.steps_by_length.try_emplace(w.size(), r.verdict.step);
      if (!inserted) it->second = std::max(it->second, r.verdict.step);
    } else {
      profile.failures.emplace_back(w, r.verdict);
    }
  }
  return profile;
}

}  // namespace nusp
