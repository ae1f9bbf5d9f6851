#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>
#include <openssl/evp.h>

#include "neurobetti/betti.hpp"
#include "neurobetti/code.hpp"
#include "neurobetti/errors.hpp"
#include "neurobetti/graph.hpp"
#include "neurobetti/io.hpp"
#include "neurobetti/oracle.hpp"
#include "neurobetti/piercing.hpp"
#include "neurobetti/polarize.hpp"
#include "neurobetti/pseudomonomial.hpp"

using namespace neurobetti;
using ojson = nlohmann::ordered_json;

namespace {

struct Globals {
  bool json = false;
  int threads = 0;
  std::uint64_t seed = 1;
  int max_n = kMaxNeurons;
  std::uint64_t max_restrictions = std::uint64_t{1} << 20;
  std::string report_path;
  bool timings = false;
};

struct Run {
  std::string command;
  std::ostringstream out;
  std::vector<std::string> warnings;
  ojson inputs = ojson::array();
  ojson timings = ojson::object();
};

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int{digest[i]};
  return hex.str();
}

std::string read_input(Run& run, const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  run.inputs.push_back({{"path", path}, {"sha256", sha256_hex(text)}});
  return text;
}

void warn(Run& run, const std::string& message) {
  run.warnings.push_back(message);
  std::cerr << "warning: " << message << '\n';
}

template <class F>
auto timed(Run& run, const std::string& label, F&& f) {
  const auto start = std::chrono::steady_clock::now();
  auto result = f();
  const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
  run.timings[label] = elapsed.count();
  return result;
}

std::string join_neurons(const std::vector<int>& neurons, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < neurons.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(neurons[i] + 1);
  }
  return out;
}

std::string format_multiset(const std::vector<int>& values) {
  std::string out = "{";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out + "}";
}

void print_lines(std::ostream& out, const ojson& array) {
  for (const auto& item : array) out << item.get<std::string>() << '\n';
}

// ---------------------------------------------------------------- commands

void cmd_cf(const Globals& g, Run& run, const std::string& path) {
  const NeuralCode code = parse_code(read_input(run, path), g.max_n);
  const CanonicalForm cf = timed(run, "canonical_form", [&] { return canonical_form(code, g.threads); });
  const ojson doc = cf_to_json(cf);
  if (g.json) {
    run.out << doc.dump() << '\n';
  } else if (cf.elements.empty()) {
    run.out << "0\n";
  } else {
    print_lines(run.out, doc);
  }
}

void cmd_polarize(const Globals& g, Run& run, const std::string& path) {
  const NeuralCode code = parse_code(read_input(run, path), g.max_n);
  const SquarefreeIdeal ideal = polarized_ideal(canonical_form(code, g.threads), code.n());
  if (g.json) {
    ojson doc = ojson::array();
    for (const auto& m : ideal.gens()) doc.push_back(to_string(m));
    run.out << doc.dump() << '\n';
  } else {
    run.out << (ideal.gens().empty() ? "0\n" : to_string(ideal) + "\n");
  }
}

void cmd_graph(const Globals& g, Run& run, const std::string& path, bool dot) {
  const NeuralCode code = parse_code(read_input(run, path), g.max_n);
  const SquarefreeIdeal ideal = polarized_ideal(canonical_form(code, g.threads), code.n());
  const Graph graph = relationship_graph(ideal);
  if (g.json) {
    ojson edges = ojson::array();
    for (const auto& [i, j] : graph.edges()) edges.push_back({i + 1, j + 1});
    run.out << ojson{{"n", graph.n()}, {"edges", edges}}.dump() << '\n';
  } else {
    run.out << (dot ? render_dot(graph) : "n=" + std::to_string(graph.n()) + "\n" + render_edges(graph));
  }
}

NeuralCode load_clean_code(const Globals& g, Run& run, const std::string& path, bool strip) {
  NeuralCode code = parse_code(read_input(run, path), g.max_n);
  CodeDiagnostics diag = validate_code(code);
  if (diag.silent) {
    if (!strip) throw InputError("silent neurons " + format_set(diag.silent) + " (use --strip-silent)");
    warn(run, "stripped silent neurons " + format_set(diag.silent));
    code = strip_silent(code);
    diag = validate_code(code);
  }
  if (!diag.duplicates.empty()) {
    const auto [i, j] = diag.duplicates.front();
    throw InputError("neurons " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " fire identically");
  }
  return code;
}

void cmd_pierced(const Globals& g, Run& run, const std::string& path, bool certify, bool strip) {
  const NeuralCode code = load_clean_code(g, run, path, strip);
  const FastPiercedVerdict fast = timed(run, "fast", [&] { return is_inductively_pierced_fast(code); });
  std::optional<PiercingOrder> order;
  if (fast.pierced || certify) {
    order = timed(run, "definitional", [&] { return is_inductively_pierced(code); });
    if (order.has_value() != fast.pierced) {
      throw MismatchError(std::string("chordality test says ") + (fast.pierced ? "pierced" : "not pierced") +
                          " but piercing search says " + (order ? "pierced" : "not pierced"));
    }
  }

  ojson doc;
  doc["pierced"] = fast.pierced;
  std::string line;
  if (fast.pierced) {
    const PiercingProfile profile = piercing_profile(*order);
    doc["order"] = ojson::array();
    for (int i : order->neurons()) doc["order"].push_back(i + 1);
    doc["profile"] = profile_to_json(profile);
    if (code.n() == 0) {
      line = "inductively pierced; trivial code";
    } else {
      line = "inductively pierced; order " + join_neurons(order->neurons(), ",") + "; " + render_marginals(profile);
    }
    run.out << (g.json ? doc.dump() : line) << '\n';
    if (!g.json) {
      if (code.n() > 0) run.out << "profile " << render_profile_table(profile) << '\n';
      run.out << render_order(*order);
    }
    return;
  }
  if (fast.non_quadratic) {
    const std::string f = to_string(*fast.non_quadratic);
    doc["reason"] = "canonical form element " + f + " has degree " + std::to_string(fast.non_quadratic->degree());
  } else if (fast.chordality->chordless_cycle.empty()) {
    doc["reason"] = "relationship graph is not chordal";
  } else {
    const auto& cycle = fast.chordality->chordless_cycle;
    doc["reason"] = "chordless " + std::to_string(cycle.size()) + "-cycle";
    doc["cycle"] = ojson::array();
    for (int v : cycle) doc["cycle"].push_back(v + 1);
  }
  if (g.json) {
    run.out << doc.dump() << '\n';
  } else {
    run.out << "not inductively pierced (" << doc["reason"].get<std::string>() << ")\n";
    if (doc.contains("cycle")) {
      std::vector<int> cycle = fast.chordality->chordless_cycle;
      run.out << "cycle " << join_neurons(cycle, "-") << '\n';
    }
  }
}

void print_table(const Globals& g, Run& run, const BettiTable& table) {
  if (g.json) {
    run.out << betti_to_json(table).dump() << '\n';
    return;
  }
  run.out << render_betti_triangle(table.graded());
  run.out << "multigraded (w; x-degree, y-degree)\n";
  for (const auto& [idx, count] : table.entries()) {
    run.out << "  beta(" << idx[0] << ";" << idx[1] << "," << idx[2] << ") = " << count << '\n';
  }
}

void cmd_betti(const Globals& g, Run& run, const std::string& path, const std::string& method, bool ideal_input) {
  OracleOptions options{g.threads, g.max_restrictions};
  if (ideal_input) {
    if (method != "oracle") throw InputError("--ideal input supports only --method oracle");
    const SquarefreeIdeal ideal = parse_ideal(read_input(run, path), 0);
    print_table(g, run, timed(run, "oracle", [&] { return betti_table_oracle(ideal, options); }));
    return;
  }
  const NeuralCode code = parse_code(read_input(run, path), g.max_n);
  const bool needs_order = method != "oracle";
  std::optional<PiercingOrder> order;
  if (needs_order) {
    const CodeDiagnostics diag = validate_code(code);
    if (!diag.clean()) {
      if (method != "all") throw InputError("formula methods need a code without silent or duplicate neurons");
      warn(run, "silent or duplicate neurons; only the oracle applies");
    } else {
      order = is_inductively_pierced(code);
      if (!order) {
        if (method != "all") throw InputError("code is not inductively pierced; only --method oracle applies");
        warn(run, "code is not inductively pierced; only the oracle applies");
      }
    }
  }

  std::optional<BettiTable> formula;
  std::optional<BettiTable> recursion;
  std::optional<BettiTable> oracle;
  if (order && (method == "formula" || method == "all")) {
    formula = timed(run, "formula", [&] { return multigraded_betti_closed(piercing_profile(*order)); });
  }
  if (order && (method == "recursion" || method == "all")) {
    recursion = timed(run, "recursion", [&] { return betti_recursive(*order); });
  }
  if (method == "oracle" || method == "all") {
    const SquarefreeIdeal ideal = polarized_ideal(canonical_form(code, g.threads), code.n());
    oracle = timed(run, "oracle", [&] { return betti_table_oracle(ideal, options); });
  }
  if (formula && oracle && !(*formula == *oracle)) throw MismatchError("closed form and oracle disagree");
  if (recursion && oracle && !(*recursion == *oracle)) throw MismatchError("recursion and oracle disagree");
  if (formula && recursion && !(*formula == *recursion)) throw MismatchError("closed form and recursion disagree");

  const BettiTable& shown = oracle ? *oracle : formula ? *formula : *recursion;
  print_table(g, run, shown);
  if (method == "all" && !g.json) {
    run.out << "methods agree:" << (formula ? " formula" : "") << (recursion ? " recursion" : "")
            << (oracle ? " oracle" : "") << '\n';
  }
}

void cmd_invert(const Globals& g, Run& run, const std::string& path, int n) {
  const std::string text = read_input(run, path);
  const auto first = text.find_first_not_of(" \t\r\n");
  ParsedBetti parsed;
  if (first != std::string::npos && text[first] == '{') {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw InputError(std::string("betti json: ") + e.what());
    }
    parsed = betti_from_json(doc);
    if (n > 0 && n != parsed.n) throw InputError("--n disagrees with the file's n");
  } else {
    if (n <= 0) throw InputError("a plain list of linear-strand Betti numbers needs --n");
    parsed.n = n;
    parsed.graded = parse_linear_strand(text);
    parsed.graded[{0, 0}] = 1;
  }

  const std::vector<std::int64_t> jk = invert_graded(parsed.graded, parsed.n);
  std::optional<PiercingProfile> profile;
  if (parsed.table) {
    profile = invert_multigraded(*parsed.table);
    if (profile->jk != jk) throw MismatchError("graded and multigraded inversions disagree");
  }
  if (g.json) {
    ojson doc;
    doc["n"] = parsed.n;
    doc["jk"] = jk;
    if (profile) doc["jkl"] = profile_to_json(*profile)["jkl"];
    run.out << doc.dump() << '\n';
    return;
  }
  std::string line;
  for (std::size_t k = 0; k < jk.size(); ++k) {
    if (k) line += ' ';
    line += "j" + std::to_string(k) + "=" + std::to_string(jk[k]);
  }
  run.out << line << '\n';
  if (profile) run.out << render_profile_table(*profile) << '\n';
}

void cmd_chordal(const Globals& g, Run& run, const std::string& path) {
  const Graph graph = parse_graph(read_input(run, path));
  const ChordalityResult result = chordality(graph);
  ojson doc;
  doc["chordal"] = result.chordal();
  if (!result.chordal()) {
    doc["cycle"] = ojson::array();
    for (int v : result.chordless_cycle) doc["cycle"].push_back(v + 1);
    if (g.json) {
      run.out << doc.dump() << '\n';
    } else {
      run.out << "not chordal (chordless " << result.chordless_cycle.size() << "-cycle "
              << join_neurons(result.chordless_cycle, "-") << ")\n";
    }
    return;
  }
  const std::vector<int> reference = degree_multiset(result.ordering->degrees);
  doc["degrees"] = reference;
  std::string line = "chordal; simplicial degrees " + format_multiset(reference);
  if (graph.n() <= kMaxEnumerationVertices) {
    std::size_t count = 0;
    std::optional<std::vector<int>> bad;
    for_each_elimination_ordering(graph, [&](const EliminationOrdering& ordering) {
      ++count;
      if (degree_multiset(ordering.degrees) != reference) {
        bad = ordering.order;
        return false;
      }
      return true;
    });
    if (bad) throw MismatchError("elimination ordering " + join_neurons(*bad, ",") + " changes the degree multiset");
    doc["orderings"] = count;
    line += " across all " + std::to_string(count) + " elimination orderings";
  } else {
    warn(run, "more than " + std::to_string(kMaxEnumerationVertices) + " vertices; orderings not enumerated");
  }
  run.out << (g.json ? doc.dump() : line) << '\n';
}

void cmd_generate(const Globals& g, Run& run, int n, int kmax, const std::string& steps_path) {
  GeneratedCode generated;
  if (!steps_path.empty()) {
    generated.order = parse_steps(read_input(run, steps_path));
    generated.code = build_code(generated.order.steps, n > 0 ? n : -1);
  } else {
    if (n < 1 || n > g.max_n) throw InputError("--n must be between 1 and " + std::to_string(g.max_n));
    generated = random_pierced_code(n, kmax < 0 ? n : kmax, g.seed);
  }
  if (g.json) {
    ojson words = ojson::array();
    for (NeuronSet w : generated.code.words()) {
      ojson word = ojson::array();
      for (int i = 0; i < generated.code.n(); ++i) {
        if (w & neuron_bit(i)) word.push_back(i + 1);
      }
      words.push_back(word);
    }
    ojson doc;
    doc["n"] = generated.code.n();
    doc["order"] = ojson::array();
    for (int i : generated.order.neurons()) doc["order"].push_back(i + 1);
    doc["words"] = words;
    run.out << doc.dump() << '\n';
    return;
  }
  std::istringstream steps(render_order(generated.order));
  std::string line;
  while (std::getline(steps, line)) run.out << "# " << line << '\n';
  run.out << serialize_code(generated.code);
}

void cmd_validate(const Globals& g, Run& run, const std::string& path) {
  const NeuralCode code = parse_code(read_input(run, path), g.max_n);
  const CodeDiagnostics diag = validate_code(code);
  ojson doc;
  doc["n"] = code.n();
  doc["words"] = code.size();
  doc["empty_word_added"] = code.empty_word_inserted();
  doc["silent"] = ojson::array();
  for (int i = 0; i < code.n(); ++i) {
    if (diag.silent & neuron_bit(i)) doc["silent"].push_back(i + 1);
  }
  doc["duplicates"] = ojson::array();
  for (const auto& [i, j] : diag.duplicates) doc["duplicates"].push_back({i + 1, j + 1});
  if (g.json) {
    run.out << doc.dump() << '\n';
    return;
  }
  run.out << "n=" << code.n() << " words=" << code.size() << (diag.clean() ? " ok" : "") << '\n';
  if (code.empty_word_inserted()) run.out << "empty codeword was missing and has been added\n";
  if (diag.silent) run.out << "silent neurons " << format_set(diag.silent) << '\n';
  for (const auto& [i, j] : diag.duplicates) run.out << "duplicate neurons " << i + 1 << " " << j + 1 << '\n';
}

void write_report(const Globals& g, const Run& run, int exit_code, const std::string& error) {
  if (g.report_path.empty()) return;
  ojson doc;
  doc["command"] = run.command;
  doc["inputs"] = run.inputs;
  doc["exit_code"] = exit_code;
  doc["outputs"] = run.out.str();
  if (!error.empty()) doc["error"] = error;
  doc["warnings"] = run.warnings;
  if (g.timings) doc["timings_ms"] = run.timings;
  std::ofstream file(g.report_path);
  file << doc.dump(2) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Neural codes, inductive piercings and Betti numbers of polarized neural ideals"};
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json, "Machine-readable output");
  app.add_option("--threads", g.threads, "Threads for the parallel kernels (0: OpenMP default)");
  app.add_option("--seed", g.seed, "Seed for random generation");
  app.add_option("--max-n", g.max_n, "Largest accepted neuron count")->check(CLI::Range(0, kMaxNeurons));
  app.add_option("--max-restrictions", g.max_restrictions, "Oracle guard on restricted homology computations");
  app.add_option("--report", g.report_path, "Write a JSON run report to this file");
  app.add_flag("--timings", g.timings, "Include timings in the run report");

  std::string path;
  auto* cf = app.add_subcommand("cf", "Canonical form of a code");
  cf->add_option("codefile", path)->required();

  auto* polarize_cmd = app.add_subcommand("polarize", "Polarized canonical form as a squarefree ideal");
  polarize_cmd->add_option("codefile", path)->required();

  bool dot = false;
  auto* graph = app.add_subcommand("graph", "Relationship graph of a code with quadratic canonical form");
  graph->add_option("codefile", path)->required();
  graph->add_flag("--dot", dot, "Graphviz output");

  bool certify = false;
  bool strip = false;
  auto* pierced = app.add_subcommand("pierced", "Decide inductive piercing; print an order and its profile");
  pierced->add_option("codefile", path)->required();
  pierced->add_flag("--certify", certify, "Run the piercing search even when the chordality test fails");
  pierced->add_flag("--strip-silent", strip, "Delete silent neurons instead of rejecting the code");

  std::string method = "all";
  bool ideal_input = false;
  auto* betti = app.add_subcommand("betti", "Multigraded Betti table of the polarized neural ideal");
  betti->add_option("file", path)->required();
  betti->add_option("--method", method)->check(CLI::IsMember({"formula", "recursion", "oracle", "all"}));
  betti->add_flag("--ideal", ideal_input, "The file is a monomial list, not a code");

  int n = 0;
  auto* invert = app.add_subcommand("invert", "Recover piercing counts from Betti numbers");
  invert->add_option("bettifile", path)->required();
  invert->add_option("--n", n, "Neuron count for plain lists");

  auto* chordal = app.add_subcommand("chordal", "Chordality and simplicial degree invariance of a graph");
  chordal->add_option("graphfile", path)->required();

  int kmax = -1;
  std::string steps;
  auto* generate = app.add_subcommand("generate", "Random inductively pierced code, or replay of a steps file");
  generate->add_option("--n", n, "Neuron count");
  generate->add_option("--kmax", kmax, "Largest piercing rank (default n)");
  generate->add_option("--steps", steps, "Replay these piercing steps");

  auto* validate = app.add_subcommand("validate", "Parse a code and report silent or duplicate neurons");
  validate->add_option("codefile", path)->required();

  CLI11_PARSE(app, argc, argv);

  Run run;
  run.command = app.get_subcommands().front()->get_name();
  int exit_code = 0;
  std::string error;
  try {
    if (*cf) cmd_cf(g, run, path);
    if (*polarize_cmd) cmd_polarize(g, run, path);
    if (*graph) cmd_graph(g, run, path, dot);
    if (*pierced) cmd_pierced(g, run, path, certify, strip);
    if (*betti) cmd_betti(g, run, path, method, ideal_input);
    if (*invert) cmd_invert(g, run, path, n);
    if (*chordal) cmd_chordal(g, run, path);
    if (*generate) cmd_generate(g, run, n, kmax, steps);
    if (*validate) cmd_validate(g, run, path);
  } catch (const MismatchError& e) {
    error = e.what();
    exit_code = 3;
  } catch (const InputError& e) {
    error = e.what();
    exit_code = 2;
  } catch (const std::exception& e) {
    error = e.what();
    exit_code = 2;
  }
  std::cout << run.out.str();
  if (exit_code) std::cerr << (exit_code == 3 ? "mismatch: " : "error: ") << error << '\n';
  write_report(g, run, exit_code, error);
  return exit_code;
}
