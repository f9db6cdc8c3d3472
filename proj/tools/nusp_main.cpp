#include <cctype>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nusp/compiler.hpp"
#include "nusp/formats.hpp"
#include "nusp/oracle.hpp"
#include "nusp/runtime.hpp"

namespace {

constexpr int kExitAccept = 0;
constexpr int kExitReject = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBadInput = 3;

std::optional<std::string> slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

bool spit(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) return false;
  out << content;
  return bool(out);
}

void print_diagnostics(const std::string& path,
                       const std::vector<nusp::Diagnostic>& diags) {
  for (const nusp::Diagnostic& d : diags) {
    std::cerr << path << ":" << d.line << ": " << d.message << "\n";
  }
}

nusp::Word parse_input_word(const std::string& text, bool chars) {
  if (!chars) return nusp::Word::tokens(text);
  std::vector<nusp::Symbol> syms;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    syms.push_back(nusp::Symbol::intern(std::string(1, c)));
  }
  return nusp::Word(std::move(syms));
}

struct LoadedNetwork {
  nusp::Network net;
};

int load_network(const std::string& path, nusp::Network& out) {
  auto text = slurp(path);
  if (!text) {
    std::cerr << "cannot read '" << path << "'\n";
    return kExitBadInput;
  }
  auto parsed = nusp::parse_network(*text);
  if (!parsed.ok()) {
    print_diagnostics(path, parsed.diagnostics);
    return kExitBadInput;
  }
  out = std::move(*parsed.value);
  return kExitAccept;
}

int load_machine(const std::string& path, nusp::TuringMachine& out) {
  auto text = slurp(path);
  if (!text) {
    std::cerr << "cannot read '" << path << "'\n";
    return kExitBadInput;
  }
  auto parsed = nusp::parse_machine(*text);
  if (!parsed.ok()) {
    print_diagnostics(path, parsed.diagnostics);
    return kExitBadInput;
  }
  out = std::move(*parsed.value);
  return kExitAccept;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"simulator for networks of uniform splicing processors"};
  app.require_subcommand(1);

  // run
  auto* run_cmd = app.add_subcommand("run", "run a network on one input word");
  std::string run_network, run_input, run_trace;
  std::size_t run_max_steps = nusp::RunLimits{}.max_steps;
  bool run_full = false, run_chars = false;
  unsigned run_threads = 1;
  run_cmd->add_option("--network", run_network, "network file")->required();
  run_cmd->add_option("--input", run_input, "input word (whitespace-separated tokens)")
      ->required();
  run_cmd->add_option("--max-steps", run_max_steps, "step limit");
  run_cmd->add_option("--trace", run_trace, "write a trace file");
  run_cmd->add_flag("--full", run_full, "record full node contents in the trace");
  run_cmd->add_flag("--chars", run_chars, "split the input into one-character tokens");
  run_cmd->add_option("--threads", run_threads, "per-step parallelism");

  // compile
  auto* compile_cmd = app.add_subcommand("compile", "compile a Turing machine");
  std::string compile_tm, compile_out, compile_persistence = "literal";
  compile_cmd->add_option("--tm", compile_tm, "machine file")->required();
  compile_cmd->add_option("-o,--output", compile_out, "output network file")->required();
  compile_cmd->add_option("--persistence", compile_persistence, "literal or preserve")
      ->check(CLI::IsMember({"literal", "preserve"}));

  // check-sigma
  auto* sigma_cmd = app.add_subcommand("check-sigma",
                                       "differential check of the splicing step");
  std::size_t sigma_cases = 1000;
  std::uint64_t sigma_seed = 7;
  sigma_cmd->add_option("--cases", sigma_cases, "number of random instances");
  sigma_cmd->add_option("--seed", sigma_seed, "generator seed");

  // check-equiv
  auto* equiv_cmd = app.add_subcommand(
      "check-equiv", "machine vs compiled network acceptance comparison");
  std::string equiv_tm;
  std::size_t equiv_max_len = 6, equiv_budget = 4;
  unsigned equiv_threads = 1;
  equiv_cmd->add_option("--tm", equiv_tm, "machine file")->required();
  equiv_cmd->add_option("--max-len", equiv_max_len, "test every word up to this length");
  equiv_cmd->add_option("--budget-factor", equiv_budget, "step budget safety factor");
  equiv_cmd->add_option("--threads", equiv_threads, "per-step parallelism");

  // profile
  auto* profile_cmd = app.add_subcommand("profile", "per-length step counts");
  std::string profile_network, profile_inputs;
  bool profile_chars = false;
  std::size_t profile_max_steps = nusp::RunLimits{}.max_steps;
  profile_cmd->add_option("--network", profile_network, "network file")->required();
  profile_cmd->add_option("--inputs", profile_inputs, "file with one word per line")
      ->required();
  profile_cmd->add_flag("--chars", profile_chars, "split words into one-character tokens");
  profile_cmd->add_option("--max-steps", profile_max_steps, "step limit per run");

  // validate
  auto* validate_cmd = app.add_subcommand("validate", "structural checks on a network");
  std::string validate_network;
  validate_cmd->add_option("--network", validate_network, "network file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*run_cmd) {
      nusp::Network net;
      if (int rc = load_network(run_network, net); rc != kExitAccept) return rc;
      nusp::RunLimits limits;
      limits.max_steps = run_max_steps;
      nusp::RunOptions options;
      options.threads = run_threads;
      options.record_contents = !run_trace.empty() && run_full;
      nusp::Word input = parse_input_word(run_input, run_chars);
      nusp::RunResult result = nusp::run(net, input, limits, options);
      if (!run_trace.empty()) {
        std::string doc = nusp::emit_trace(result.trace, net, result.verdict, run_full);
        if (!spit(run_trace, doc)) {
          std::cerr << "cannot write '" << run_trace << "'\n";
          return kExitBadInput;
        }
      }
      if (result.verdict.accepted()) {
        std::cout << "accepted step=" << result.verdict.step << "\n";
        return kExitAccept;
      }
      std::cout << "rejected reason=" << nusp::to_string(result.verdict.kind)
                << " step=" << result.verdict.step << "\n";
      return kExitReject;
    }

    if (*compile_cmd) {
      nusp::TuringMachine m;
      if (int rc = load_machine(compile_tm, m); rc != kExitAccept) return rc;
      nusp::Persistence p = compile_persistence == "preserve"
                                ? nusp::Persistence::preserve
                                : nusp::Persistence::literal;
      nusp::CompiledNetwork cn = nusp::compile(m, p);
      if (!spit(compile_out, nusp::emit_compiled_network(cn))) {
        std::cerr << "cannot write '" << compile_out << "'\n";
        return kExitBadInput;
      }
      std::cout << "compiled " << cn.network.node_count() << " nodes ("
                << m.transitions.size() << " transitions)\n";
      return kExitAccept;
    }

    if (*sigma_cmd) {
      nusp::InstanceParams params;
      params.seed = sigma_seed;
      auto mismatch = nusp::differential_splice_check(params, sigma_cases);
      if (mismatch) {
        std::cerr << mismatch->describe();
        return kExitReject;
      }
      std::cout << "sigma differential: " << sigma_cases << " cases ok (seed "
                << sigma_seed << ")\n";
      return kExitAccept;
    }

    if (*equiv_cmd) {
      nusp::TuringMachine m;
      if (int rc = load_machine(equiv_tm, m); rc != kExitAccept) return rc;
      nusp::CompiledNetwork cn = nusp::compile(m);
      nusp::EquivalenceOptions options;
      options.max_word_length = equiv_max_len;
      options.budget_factor = equiv_budget;
      options.threads = equiv_threads;
      nusp::EquivalenceReport report = nusp::equivalence_check(m, cn, options);
      std::cout << report.machine_id << ": " << report.words_tested << " words, "
                << report.mismatches.size() << " mismatches, fit steps <= "
                << report.fitted_slope << "*depth + " << report.fitted_intercept
                << ", max steps " << report.max_steps_used << " (budget "
                << report.step_budget << ")\n";
      for (const nusp::EquivalenceMismatch& mm : report.mismatches) {
        std::cerr << "mismatch on '" << mm.word.str()
                  << "': machine=" << (mm.machine.accepted() ? "accept" : "reject")
                  << " network=" << nusp::to_string(mm.network.kind) << "\n";
      }
      return report.passed() ? kExitAccept : kExitReject;
    }

    if (*profile_cmd) {
      nusp::Network net;
      if (int rc = load_network(profile_network, net); rc != kExitAccept) return rc;
      auto text = slurp(profile_inputs);
      if (!text) {
        std::cerr << "cannot read '" << profile_inputs << "'\n";
        return kExitBadInput;
      }
      std::vector<nusp::Word> words;
      std::istringstream lines(*text);
      std::string line;
      while (std::getline(lines, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        words.push_back(parse_input_word(line, profile_chars));
      }
      nusp::RunLimits limits;
      limits.max_steps = profile_max_steps;
      nusp::TimeProfile profile = nusp::time_profile(net, words, limits);
      if (!profile.failures.empty()) {
        for (auto& [w, v] : profile.failures) {
          std::cerr << "word '" << w.str() << "' did not accept: "
                    << nusp::to_string(v.kind) << "\n";
        }
        return kExitReject;
      }
      std::cout << "length steps\n";
      for (auto [len, steps] : profile.steps_by_length) {
        std::cout << len << " " << steps << "\n";
      }
      return kExitAccept;
    }

    if (*validate_cmd) {
      nusp::Network net;
      if (int rc = load_network(validate_network, net); rc != kExitAccept) return rc;
      nusp::ValidationReport report = nusp::validate(net);
      for (const std::string& w : report.warnings) std::cout << "warning: " << w << "\n";
      for (const std::string& v : report.violations) std::cout << "violation: " << v << "\n";
      if (!report.ok()) return kExitBadInput;
      std::cout << "ok\n";
      return kExitAccept;
    }
  } catch (const nusp::compile_error& e) {
    std::cerr << "compile error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitReject;
  }
  return kExitUsage;
}
