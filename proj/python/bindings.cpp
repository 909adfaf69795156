#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include "wordrep/cliquewidth.hpp"
#include "wordrep/error.hpp"
#include "wordrep/graph_io.hpp"
#include "wordrep/graphs.hpp"
#include "wordrep/locality.hpp"
#include "wordrep/representability.hpp"
#include "wordrep/word.hpp"

namespace py = pybind11;
using namespace wordrep;

namespace {

Word to_word(const py::object& w) {
  if (py::isinstance<Word>(w)) return w.cast<Word>();
  if (py::isinstance<py::str>(w)) return Word::parse(w.cast<std::string>());
  return Word(w.cast<std::vector<Letter>>());
}

MarkingSequence to_sequence(const py::object& s) {
  if (py::isinstance<MarkingSequence>(s)) return s.cast<MarkingSequence>();
  if (py::isinstance<py::str>(s)) return MarkingSequence::parse(s.cast<std::string>());
  return MarkingSequence(s.cast<std::vector<Letter>>());
}

}  // namespace

PYBIND11_MODULE(_wordrep, m) {
  m.doc() = "Words, locality, word-representable graphs and clique-width expressions";

  auto error = py::register_exception<Error>(m, "Error");
  py::register_exception<InvalidArgument>(m, "InvalidArgument", error.ptr());
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", error.ptr());
  py::register_exception<ParseError>(m, "ParseError", error.ptr());
  py::register_exception<InternalError>(m, "InternalError", error.ptr());

  py::class_<Word>(m, "Word")
      .def(py::init<std::vector<Letter>>())
      .def_static("parse", [](const std::string& text, bool tokens) {
        return Word::parse(text, tokens ? WordMode::Tokens : WordMode::Scalars);
      }, py::arg("text"), py::arg("tokens") = false)
      .def_property_readonly("letters", &Word::letters)
      .def_property_readonly("alphabet", &Word::alphabet)
      .def("count", &Word::count)
      .def("__len__", &Word::size)
      .def("__str__", &Word::str)
      .def("__repr__", [](const Word& w) { return "Word('" + w.str() + "')"; })
      .def(py::self == py::self);

  py::class_<MarkingSequence>(m, "MarkingSequence")
      .def(py::init<std::vector<Letter>>())
      .def_static("parse", &MarkingSequence::parse)
      .def_property_readonly("order", &MarkingSequence::order)
      .def("__str__", &MarkingSequence::str)
      .def("__repr__", [](const MarkingSequence& s) { return "MarkingSequence('" + s.str() + "')"; })
      .def(py::self == py::self);

  py::class_<Graph>(m, "Graph")
      .def(py::init<std::vector<NodeId>, const std::vector<Edge>&>(), py::arg("nodes"), py::arg("edges"))
      .def_property_readonly("nodes", &Graph::nodes)
      .def_property_readonly("edges", &Graph::edges)
      .def("has_edge", &Graph::has_edge)
      .def("to_json", [](const Graph& g) { return graph_to_json(g); })
      .def_static("from_json", [](const std::string& s) { return graph_from_json(s); })
      .def(py::self == py::self);

  py::class_<Interval>(m, "Interval")
      .def_readonly("first", &Interval::first)
      .def_readonly("last", &Interval::last);

  py::class_<StageTrace>(m, "StageTrace")
      .def_readonly("stage", &StageTrace::stage)
      .def_readonly("marked", &StageTrace::marked)
      .def_readonly("blocks", &StageTrace::blocks)
      .def_readonly("old_to_new", &StageTrace::old_to_new)
      .def_readonly("profile", &StageTrace::profile)
      .def_property_readonly("block_count", &StageTrace::block_count);

  py::class_<Label>(m, "Label")
      .def("__str__", &Label::str)
      .def("__repr__", &Label::str)
      .def_property_readonly("is_two", &Label::is_two)
      .def_property_readonly("bits", &Label::bits)
      .def(py::self == py::self);

  m.def("project", [](const py::object& w, const std::set<Letter>& keep) { return project(to_word(w), keep); });
  m.def("alternates", [](const py::object& w, const Letter& a, const Letter& b) { return alternates(to_word(w), a, b); });
  m.def("graph_of_word", [](const py::object& w) { return graph_of_word(to_word(w)); });

  m.def("simulate_marking", [](const py::object& w, const py::object& s) {
    return simulate_marking(to_word(w), to_sequence(s));
  });
  m.def("stage_block_counts", [](const py::object& w, const py::object& s) {
    return stage_block_counts(to_word(w), to_sequence(s));
  });
  m.def("is_k_local_with", [](const py::object& w, const py::object& s, std::size_t k) {
    return is_k_local_with(to_word(w), to_sequence(s), k);
  });
  m.def("locality", [](const py::object& w, std::size_t max_letters) {
    auto r = locality(to_word(w), max_letters);
    return py::make_tuple(r.k, r.witness);
  }, py::arg("word"), py::arg("max_letters") = kDefaultLocalityLetterBudget);
  m.def("block_labels", &block_labels);

  m.def("uniformize", [](const py::object& w, std::size_t k, const py::object& s) {
    auto r = uniformize(to_word(w), k, to_sequence(s));
    return py::make_tuple(r.word, r.sequence);
  });
  m.def("oversized_letters", [](const py::object& w, std::size_t k) { return oversized_letters(to_word(w), k); });
  m.def("represent_clique_partition", [](const std::string& parts) {
    auto r = represent_clique_partition(CliquePartition::parse(parts));
    return py::make_tuple(r.word, r.sequence);
  });
  m.def("decide_membership", [](const Graph& g, const std::string& kind, std::size_t k, std::size_t max_nodes,
                                std::size_t max_word_length, std::uint64_t max_steps) {
    if (kind != "L" && kind != "R") throw InvalidArgument("class must be 'L' or 'R'");
    auto r = decide_membership({g, kind == "L" ? GraphClass::L : GraphClass::R, k,
                                SearchBudget{max_nodes, max_word_length, max_steps}});
    py::object witness = r.witness ? py::cast(*r.witness) : py::none();
    return py::make_tuple(std::string(to_string(r.verdict)), witness);
  }, py::arg("graph"), py::arg("kind"), py::arg("k"), py::arg("max_nodes") = 5, py::arg("max_word_length") = 0,
     py::arg("max_steps") = 0);

  m.def("is_threshold", &is_threshold);
  m.def("is_threshold_by_obstruction", &is_threshold_by_obstruction);
  m.def("fixture", [](const std::string& name) { return fixture(name); });
  m.def("crown_graph", &crown_graph);
  m.def("complete_graph", &complete_graph);
  m.def("clique_partition_graph", [](const std::string& parts) {
    return clique_partition_graph(CliquePartition::parse(parts));
  });
  m.def("bell_number", [](std::size_t n) { return py::int_(py::str(bell_number(n).str())); });
  m.def("labeled_graphs", [](std::size_t n) {
    std::vector<Graph> out;
    for (const auto& g : enumerate_labeled_graphs(n)) out.push_back(g);
    return out;
  });

  m.def("build_expression", [](const py::object& w, const py::object& s, std::size_t k) {
    return serialize(build_expression(to_word(w), to_sequence(s), k).expression);
  }, "Serialized Σ_k-expression for the graph of a k-local word");
  m.def("eval_expression", [](const std::string& text) {
    auto r = eval_expression(parse_expression(text));
    return py::make_tuple(r.graph, r.labels);
  });
  m.def("verify_expression", [](const py::object& w, const py::object& s, std::size_t k) {
    auto c = verify_expression(to_word(w), to_sequence(s), k);
    py::dict d;
    d["graph_matches"] = c.graph_matches;
    d["labels_match"] = c.labels_match;
    d["labels_used"] = c.labels_used;
    d["label_bound"] = c.label_bound;
    return d;
  });
}
