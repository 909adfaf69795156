#include "wordrep/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "wordrep/cliquewidth.hpp"
#include "wordrep/error.hpp"
#include "wordrep/graph_io.hpp"
#include "wordrep/graphs.hpp"
#include "wordrep/locality.hpp"
#include "wordrep/representability.hpp"
#include "wordrep/word.hpp"

namespace wordrep::cli {

namespace {

using nlohmann::json;

struct NegativeAnswer {};

std::string read_source(const std::string& path) {
  std::stringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open '" + path + "'");
    buffer << in.rdbuf();
  }
  return buffer.str();
}

std::string blocks_text(const std::vector<Interval>& blocks) {
  std::string out;
  for (const auto& b : blocks) out += "[" + std::to_string(b.first) + ".." + std::to_string(b.last) + "]";
  return out;
}

json trace_json(const StageTrace& t) {
  json blocks = json::array();
  for (const auto& b : t.blocks) blocks.push_back({b.first, b.last});
  json profile = json::object();
  for (const auto& [letter, counts] : t.profile) profile[letter] = counts;
  return {{"stage", t.stage},      {"mark", t.marked},       {"blocks", blocks},
          {"block_count", t.block_count()}, {"old_to_new", t.old_to_new}, {"profile", profile}};
}

json labels_json(const std::map<Letter, Label>& labels) {
  json out = json::object();
  for (const auto& [x, l] : labels) out[x] = l.str();
  return out;
}

std::size_t max_count(const Word& w) {
  std::size_t m = 0;
  for (std::size_t c = 0; c < w.alphabet().size(); ++c) m = std::max(m, w.count_code(c));
  return m;
}

struct Options {
  bool json = false;
  bool tokens = false;
  std::string word;
  std::string sigma;
  std::size_t k = 0;
  std::size_t max_letters = kDefaultLocalityLetterBudget;
  std::string graph_path;
  std::string class_name = "L";
  std::size_t budget_nodes = 5;
  std::size_t budget_len = 0;
  std::uint64_t budget_steps = 0;
  std::size_t budget_enum = kDefaultEnumerationBudget;
  std::size_t n = 0;
  bool pretty = false;
  std::vector<std::string> gen_args;
  std::string expression_path;
  std::string partition;
};

Word input_word(const Options& o) {
  return Word::parse(o.word, o.tokens ? WordMode::Tokens : WordMode::Scalars);
}

// The given sequence, or an optimal one from exact search.
MarkingSequence input_sequence(const Options& o, const Word& w) {
  if (!o.sigma.empty()) return MarkingSequence::parse(o.sigma);
  return locality(w, o.max_letters).witness;
}

GraphClass input_class(const Options& o) {
  if (o.class_name == "L") return GraphClass::L;
  if (o.class_name == "R") return GraphClass::R;
  throw InvalidArgument("--class must be L or R");
}

SearchBudget input_budget(const Options& o) {
  return SearchBudget{o.budget_nodes, o.budget_len, o.budget_steps};
}

void cmd_graph(const Options& o, std::ostream& out) {
  const Graph g = graph_of_word(input_word(o));
  out << (o.json ? graph_to_json(g) + "\n" : graph_to_edge_list(g));
}

void cmd_locality(const Options& o, std::ostream& out) {
  const Word w = input_word(o);
  const auto r = locality(w, o.max_letters);
  if (o.json) {
    out << json{{"word", w.str()}, {"locality", r.k}, {"witness", r.witness.order()}}.dump() << "\n";
  } else {
    out << r.k << " (witness: " << r.witness.str() << ")\n";
  }
}

void cmd_check(const Options& o, std::ostream& out) {
  const Word w = input_word(o);
  const MarkingSequence s = input_sequence(o, w);
  const auto traces = simulate_marking(w, s);
  std::size_t worst = 0;
  for (const auto& t : traces) worst = std::max(worst, t.block_count());
  const bool local = o.k == 0 || worst <= o.k;
  if (o.json) {
    json stages = json::array();
    for (const auto& t : traces) stages.push_back(trace_json(t));
    json doc{{"word", w.str()}, {"sigma", s.order()}, {"stages", stages}, {"max_blocks", worst}};
    if (o.k != 0) doc["k_local"] = local;
    out << doc.dump() << "\n";
  } else {
    for (const auto& t : traces) {
      out << "stage " << t.stage << ": mark '" << t.marked << "' -> " << t.block_count() << " block(s): "
          << blocks_text(t.blocks) << "\n";
    }
    out << "max blocks: " << worst << "\n";
    if (o.k != 0) out << o.k << "-local with (" << s.str() << "): " << (local ? "yes" : "no") << "\n";
  }
  if (!local) throw NegativeAnswer{};
}

void cmd_uniformize(const Options& o, std::ostream& out) {
  const Word w = input_word(o);
  const MarkingSequence s = input_sequence(o, w);
  const auto r = uniformize(w, o.k, s);
  const bool local = is_k_local_with(r.word, r.sequence, o.k);
  const std::size_t most = max_count(r.word);
  const bool same = graph_of_word(r.word) == graph_of_word(w);
  if (o.json) {
    out << json{{"word", r.word.str()},
                {"sigma", r.sequence.order()},
                {"k_local", local},
                {"max_count", most},
                {"same_graph", same}}
               .dump()
        << "\n";
  } else {
    out << "word: " << r.word.str() << "\n"
        << "sigma: " << r.sequence.str() << "\n"
        << o.k << "-local: " << (local ? "yes" : "no") << "\n"
        << "max occurrences: " << most << " (bound " << o.k + 1 << ")\n"
        << "same graph: " << (same ? "yes" : "no") << "\n";
  }
  if (!local || most > o.k + 1 || !same) throw InternalError("uniformized word failed verification");
}

void cmd_decide(const Options& o, std::ostream& out) {
  const Graph g = read_graph(read_source(o.graph_path));
  const MembershipQuery q{g, input_class(o), o.k, input_budget(o)};
  const auto r = decide_membership(q);
  if (o.json) {
    json doc{{"class", to_string(q.kind)}, {"k", q.k}, {"verdict", to_string(r.verdict)}, {"steps", r.steps}};
    doc["witness"] = r.witness ? json(r.witness->str()) : json(nullptr);
    if (q.kind == GraphClass::L) doc["sigma"] = r.sequence ? json(r.sequence->order()) : json(nullptr);
    if (!r.note.empty()) doc["note"] = r.note;
    out << doc.dump() << "\n";
  } else {
    out << to_string(q.kind) << "^" << q.k << ": " << to_string(r.verdict);
    if (r.witness) out << " (witness: " << r.witness->str() << ")";
    if (r.sequence && !r.sequence->order().empty()) out << " (sigma: " << r.sequence->str() << ")";
    if (!r.note.empty()) out << " [" << r.note << "]";
    out << "\n";
  }
  if (r.verdict == Verdict::NonMember) throw NegativeAnswer{};
  if (r.verdict == Verdict::Inconclusive) throw BudgetExceeded(r.note);
}

std::size_t positive(const std::string& s) {
  std::size_t used = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || v == 0) throw InvalidArgument("expected a positive integer, got '" + s + "'");
  return v;
}

void cmd_gen(const Options& o, std::ostream& out) {
  const auto& a = o.gen_args;
  if (a.size() != 2) throw InvalidArgument("usage: wg gen KIND ARG");
  Graph g;
  if (a[0] == "complete") g = complete_graph(positive(a[1]));
  else if (a[0] == "empty") g = empty_graph(positive(a[1]));
  else if (a[0] == "path") g = path_graph(positive(a[1]));
  else if (a[0] == "cycle") g = cycle_graph(positive(a[1]));
  else if (a[0] == "crown") g = crown_graph(positive(a[1]));
  else if (a[0] == "cliques") g = clique_partition_graph(CliquePartition::parse(a[1], o.tokens));
  else if (a[0] == "fixture") g = fixture(a[1]);
  else throw InvalidArgument("unknown generator '" + a[0] + "'");
  out << graph_to_json(g) << "\n";
}

void cmd_cliques(const Options& o, std::ostream& out) {
  const auto p = CliquePartition::parse(o.partition, o.tokens);
  const auto r = represent_clique_partition(p);
  const bool local = is_k_local_with(r.word, r.sequence, 2);
  const bool same = graph_of_word(r.word) == clique_partition_graph(p);
  const std::size_t most = max_count(r.word);
  if (o.json) {
    out << json{{"word", r.word.str()},
                {"sigma", r.sequence.order()},
                {"stage_blocks", stage_block_counts(r.word, r.sequence)},
                {"two_local", local},
                {"represents_partition", same},
                {"max_count", most}}
               .dump()
        << "\n";
  } else {
    auto counts = stage_block_counts(r.word, r.sequence);
    out << "word: " << r.word.str() << "\n"
        << "sigma: " << r.sequence.str() << "\n"
        << "stage blocks:";
    for (auto c : counts) out << " " << c;
    out << "\n"
        << "2-local: " << (local ? "yes" : "no") << "\n"
        << "represents partition graph: " << (same ? "yes" : "no") << "\n"
        << "max occurrences: " << most << "\n";
  }
  if (!local || !same || most > 2) throw InternalError("clique-partition word failed verification");
}

void cmd_threshold(const Options& o, std::ostream& out) {
  const Graph g = read_graph(read_source(o.graph_path));
  const bool by_elimination = is_threshold(g);
  const bool by_obstruction = is_threshold_by_obstruction(g);
  if (o.json) {
    out << json{{"elimination", by_elimination}, {"obstruction", by_obstruction}}.dump() << "\n";
  } else {
    out << "threshold (elimination): " << (by_elimination ? "yes" : "no") << "\n"
        << "threshold (obstructions): " << (by_obstruction ? "yes" : "no") << "\n";
  }
  if (by_elimination != by_obstruction) throw InternalError("threshold recognisers disagree");
  if (!by_elimination) throw NegativeAnswer{};
}

// k defaults to the number of blocks the sequence actually needs.
std::size_t effective_k(const Options& o, const Word& w, const MarkingSequence& s) {
  return o.k != 0 ? o.k : std::max<std::size_t>(1, max_block_count(w, s));
}

void cmd_cwd_build(const Options& o, std::ostream& out) {
  const Word w = input_word(o);
  const MarkingSequence s = input_sequence(o, w);
  const std::size_t k = effective_k(o, w, s);
  const auto b = build_expression(w, s, k);
  if (o.json) {
    json stages = json::array();
    for (std::size_t i = 0; i < b.stages.size(); ++i) {
      stages.push_back({{"mark", s[i]}, {"expression", serialize(b.stages[i])}, {"labels", labels_json(b.stage_labels[i])}});
    }
    out << json{{"k", k}, {"sigma", s.order()}, {"expression", serialize(b.expression)}, {"stages", stages}}.dump()
        << "\n";
  } else {
    out << serialize(b.expression, o.pretty ? 2 : 0) << "\n";
  }
}

void cmd_cwd_eval(const Options& o, std::ostream& out) {
  const auto e = parse_expression(read_source(o.expression_path));
  const auto r = eval_expression(e);
  if (o.json) {
    json doc = json::parse(graph_to_json(r.graph));
    doc["labels"] = labels_json(r.labels);
    out << doc.dump() << "\n";
  } else {
    out << graph_to_edge_list(r.graph);
    for (const auto& [v, l] : r.labels) out << "label " << v << " " << l.str() << "\n";
  }
}

void cmd_cwd_verify(const Options& o, std::ostream& out) {
  const Word w = input_word(o);
  const MarkingSequence s = input_sequence(o, w);
  const std::size_t k = effective_k(o, w, s);
  const auto c = verify_expression(w, s, k);
  if (o.json) {
    out << json{{"k", k},
                {"graph_matches", c.graph_matches},
                {"labels_match", c.labels_match},
                {"labels_used", c.labels_used},
                {"label_bound", c.label_bound},
                {"ok", c.ok()}}
               .dump()
        << "\n";
  } else {
    out << "graph matches: " << (c.graph_matches ? "yes" : "no") << "\n"
        << "final labels match: " << (c.labels_match ? "yes" : "no") << "\n"
        << "labels used: " << c.labels_used << " (bound 2^" << k << "+1 = " << c.label_bound << ")\n";
  }
  if (!c.ok()) throw NegativeAnswer{};
}

void cmd_speed(const Options& o, std::ostream& out) {
  const GraphClass kind = input_class(o);
  std::uint64_t members = 0;
  std::uint64_t inconclusive = 0;
  std::uint64_t threshold = 0;
  std::uint64_t disagreements = 0;
  const auto graphs = enumerate_labeled_graphs(o.n, o.budget_enum);
  for (const Graph& g : graphs) {
    const auto r = decide_membership({g, kind, o.k, input_budget(o)});
    const bool member = r.verdict == Verdict::Member;
    members += member ? 1 : 0;
    inconclusive += r.verdict == Verdict::Inconclusive ? 1 : 0;
    if (kind == GraphClass::L && o.k == 1) {
      const bool t = is_threshold(g);
      threshold += t ? 1 : 0;
      if (r.verdict != Verdict::Inconclusive && t != member) ++disagreements;
    }
  }
  const bool cross_check = kind == GraphClass::L && o.k == 1;
  const std::string bell = bell_number(o.n).str();
  if (o.json) {
    json doc{{"class", to_string(kind)}, {"k", o.k},       {"n", o.n}, {"graphs", graphs.size()},
             {"members", members},       {"inconclusive", inconclusive}, {"bell", bell}};
    if (cross_check) {
      doc["threshold"] = threshold;
      doc["agrees"] = disagreements == 0;
    }
    out << doc.dump() << "\n";
  } else {
    out << "|" << to_string(kind) << "^" << o.k << "_" << o.n << "| = " << members << " of " << graphs.size()
        << " labeled graphs";
    if (inconclusive != 0) out << " (" << inconclusive << " inconclusive)";
    out << "\n"
        << "B_" << o.n << " = " << bell << "\n";
    if (cross_check) {
      out << "threshold graphs: " << threshold << " (" << (disagreements == 0 ? "agrees" : "DISAGREES")
          << ")\n";
    }
  }
  if (cross_check && disagreements != 0) throw InternalError("L^1 decider disagrees with threshold recognition");
  if (inconclusive != 0) throw BudgetExceeded(std::to_string(inconclusive) + " graphs inconclusive");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Words, locality and the graphs they represent"};
  app.name("wg");
  app.require_subcommand(1);
  Options o;

  auto word_arg = [&](CLI::App* c) {
    c->add_option("word", o.word, "Input word")->required();
    c->add_flag("--tokens", o.tokens, "Whitespace-separated tokens are letters");
  };
  auto sigma_opt = [&](CLI::App* c) {
    c->add_option("--sigma", o.sigma, "Marking sequence, comma separated (default: exact search)");
    c->add_option("--max-letters", o.max_letters, "Letter budget for exact locality search")
        ->envname("WG_BUDGET_LETTERS");
  };
  auto budget_opts = [&](CLI::App* c) {
    c->add_option("--class", o.class_name, "Graph class: L (k-local words) or R (k-representable)")
        ->check(CLI::IsMember({"L", "R"}));
    c->add_option("--k", o.k, "k >= 1")->required()->check(CLI::PositiveNumber);
    c->add_option("--budget-nodes", o.budget_nodes, "Largest graph searched exhaustively")
        ->envname("WG_BUDGET_NODES");
    c->add_option("--budget-len", o.budget_len, "Longest candidate word (0: class bound)")
        ->envname("WG_BUDGET_LEN");
    c->add_option("--budget-steps", o.budget_steps, "Search step limit (0: none)")->envname("WG_BUDGET_STEPS");
  };
  auto json_flag = [&](CLI::App* c) { c->add_flag("--json", o.json, "Machine-readable output"); };

  std::function<void(const Options&, std::ostream&)> action;
  auto bind = [&](CLI::App* c, void (*fn)(const Options&, std::ostream&)) {
    c->callback([&action, fn] { action = fn; });
  };

  auto* graph = app.add_subcommand("graph", "Graph represented by a word");
  word_arg(graph);
  json_flag(graph);
  bind(graph, cmd_graph);

  auto* loc = app.add_subcommand("locality", "Exact locality with an optimal marking sequence");
  word_arg(loc);
  json_flag(loc);
  loc->add_option("--max-letters", o.max_letters, "Letter budget")->envname("WG_BUDGET_LETTERS");
  bind(loc, cmd_locality);

  auto* check = app.add_subcommand("check", "Stage-by-stage block trace of a marking sequence");
  word_arg(check);
  sigma_opt(check);
  json_flag(check);
  check->add_option("--k", o.k, "Test k-locality (exit 1 if violated)")->check(CLI::PositiveNumber);
  bind(check, cmd_check);

  auto* uni = app.add_subcommand("uniformize", "Rewrite a k-local word to at most k+1 copies per letter");
  word_arg(uni);
  sigma_opt(uni);
  json_flag(uni);
  uni->add_option("--k", o.k, "Locality bound")->required()->check(CLI::PositiveNumber);
  bind(uni, cmd_uniformize);

  auto* decide = app.add_subcommand("decide", "Exhaustive L^k / R^k membership");
  decide->add_option("--graph", o.graph_path, "Graph file (JSON or edge list, - for stdin)")->required();
  budget_opts(decide);
  json_flag(decide);
  bind(decide, cmd_decide);

  auto* gen = app.add_subcommand("gen", "Generate a graph: complete|empty|path|cycle|crown N, cliques P, fixture NAME");
  gen->add_option("args", o.gen_args, "KIND ARG")->required()->expected(2);
  gen->add_flag("--tokens", o.tokens, "Clique parts are whitespace-separated tokens");
  bind(gen, cmd_gen);

  auto* cliques = app.add_subcommand("cliques", "2-local word for a disjoint union of cliques, e.g. \"ab|cd\"");
  cliques->add_option("partition", o.partition, "Parts separated by '|'")->required();
  cliques->add_flag("--tokens", o.tokens, "Parts are whitespace-separated tokens");
  json_flag(cliques);
  bind(cliques, cmd_cliques);

  auto* thr = app.add_subcommand("threshold", "Threshold recognition by elimination and by obstructions");
  thr->add_option("--graph", o.graph_path, "Graph file (JSON or edge list, - for stdin)")->required();
  json_flag(thr);
  bind(thr, cmd_threshold);

  auto* cwd = app.add_subcommand("cwd", "Clique-width expressions");
  cwd->require_subcommand(1);
  auto* build = cwd->add_subcommand("build", "Σ_k-expression from a k-local word");
  word_arg(build);
  sigma_opt(build);
  json_flag(build);
  build->add_option("--k", o.k, "Locality bound (default: blocks needed by sigma)")->check(CLI::PositiveNumber);
  build->add_flag("--pretty", o.pretty, "Indent the expression");
  bind(build, cmd_cwd_build);
  auto* eval = cwd->add_subcommand("eval", "Evaluate an expression file");
  eval->add_option("file", o.expression_path, "S-expression file (- for stdin)")->required();
  json_flag(eval);
  bind(eval, cmd_cwd_eval);
  auto* verify = cwd->add_subcommand("verify", "Build, evaluate and compare with the word's graph");
  word_arg(verify);
  sigma_opt(verify);
  json_flag(verify);
  verify->add_option("--k", o.k, "Locality bound (default: blocks needed by sigma)")->check(CLI::PositiveNumber);
  bind(verify, cmd_cwd_verify);

  auto* speed = app.add_subcommand("speed", "Count labeled graphs on n nodes in L^k or R^k");
  budget_opts(speed);
  speed->add_option("--n", o.n, "Node count")->required()->check(CLI::PositiveNumber);
  speed->add_option("--budget-enum", o.budget_enum, "Largest n enumerated")->envname("WG_BUDGET_ENUM");
  json_flag(speed);
  bind(speed, cmd_speed);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "wg: " << e.what() << "\n";
    const CLI::App* sub = &app;
    while (!sub->get_subcommands().empty()) sub = sub->get_subcommands().front();
    err << sub->help();
    return kUsage;
  }

  try {
    action(o, out);
    return kOk;
  } catch (const NegativeAnswer&) {
    return kNegative;
  } catch (const BudgetExceeded& e) {
    err << "wg: budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const InternalError& e) {
    err << "wg: internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const Error& e) {
    err << "wg: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace wordrep::cli
