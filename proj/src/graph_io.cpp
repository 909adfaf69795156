#include "wordrep/graph_io.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

#include "wordrep/error.hpp"

namespace wordrep {

namespace {

using nlohmann::json;

NodeId node_name(const json& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_number_integer()) return std::to_string(value.get<long long>());
  throw InvalidArgument("node names must be strings or integers");
}

}  // namespace

std::string graph_to_json(const Graph& graph, int indent) {
  json out;
  out["nodes"] = graph.nodes();
  json edges = json::array();
  for (const auto& [u, v] : graph.edges()) edges.push_back({u, v});
  out["edges"] = std::move(edges);
  return out.dump(indent);
}

Graph graph_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed graph JSON: ") + e.what(), e.byte);
  }
  if (!doc.is_object() || !doc.contains("nodes")) {
    throw ParseError("graph JSON must be an object with a \"nodes\" array", 0);
  }
  std::vector<NodeId> nodes;
  for (const auto& v : doc.at("nodes")) nodes.push_back(node_name(v));
  std::vector<Edge> edges;
  if (doc.contains("edges")) {
    for (const auto& e : doc.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw InvalidArgument("each edge must be a pair");
      edges.emplace_back(node_name(e[0]), node_name(e[1]));
    }
  }
  return Graph(std::move(nodes), edges);
}

Graph graph_from_edge_list(std::string_view text) {
  std::set<NodeId> nodes;
  std::vector<Edge> edges;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t offset = 0;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::vector<std::string> words;
    for (std::string w; fields >> w;) words.push_back(w);
    if (!words.empty() && words[0][0] != '#') {
      if (words.size() == 2 && words[0] == "node") {
        nodes.insert(words[1]);
      } else if (words.size() == 2) {
        nodes.insert(words[0]);
        nodes.insert(words[1]);
        edges.emplace_back(words[0], words[1]);
      } else {
        throw ParseError("expected 'u v' or 'node u'", offset);
      }
    }
    offset += line.size() + 1;
  }
  return Graph(std::vector<NodeId>(nodes.begin(), nodes.end()), edges);
}

std::string graph_to_edge_list(const Graph& graph) {
  std::string out;
  for (std::size_t i = 0; i < graph.size(); ++i) {
    if (graph.degree(i) == 0) out += "node " + graph.nodes()[i] + "\n";
  }
  for (const auto& [u, v] : graph.edges()) out += u + " " + v + "\n";
  return out;
}

Graph read_graph(std::string_view text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return graph_from_json(text);
  return graph_from_edge_list(text);
}

}  // namespace wordrep
