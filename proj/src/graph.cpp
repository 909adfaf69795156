#include "wordrep/graph.hpp"

#include <algorithm>
#include <numeric>

#include "wordrep/error.hpp"

namespace wordrep {

Graph::Graph(std::vector<NodeId> nodes, const std::vector<Edge>& edges)
    : nodes_(std::move(nodes)) {
  std::sort(nodes_.begin(), nodes_.end());
  if (std::adjacent_find(nodes_.begin(), nodes_.end()) != nodes_.end()) {
    throw InvalidArgument("duplicate node in graph");
  }
  const std::size_t n = nodes_.size();
  adjacency_.assign(n * n, 0);
  for (const auto& [u, v] : edges) {
    if (u == v) throw InvalidArgument("self-loop on node '" + u + "'");
    auto iu = index_of(u);
    auto iv = index_of(v);
    if (!iu || !iv) {
      throw InvalidArgument("edge {" + u + ", " + v +
                            "} has an endpoint that is not a node");
    }
    adjacency_[*iu * n + *iv] = 1;
    adjacency_[*iv * n + *iu] = 1;
  }
}

Graph Graph::from_matrix(std::vector<NodeId> nodes,
                         std::vector<std::uint8_t> adjacency) {
  const std::size_t n = nodes.size();
  if (adjacency.size() != n * n) {
    throw InvalidArgument("adjacency matrix has the wrong size");
  }
  if (!std::is_sorted(nodes.begin(), nodes.end()) ||
      std::adjacent_find(nodes.begin(), nodes.end()) != nodes.end()) {
    throw InvalidArgument("matrix node list must be sorted and unique");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (adjacency[i * n + i] != 0) throw InvalidArgument("self-loop in matrix");
    for (std::size_t j = 0; j < n; ++j) {
      if ((adjacency[i * n + j] != 0) != (adjacency[j * n + i] != 0)) {
        throw InvalidArgument("adjacency matrix is not symmetric");
      }
      adjacency[i * n + j] = adjacency[i * n + j] != 0 ? 1 : 0;
    }
  }
  Graph g;
  g.nodes_ = std::move(nodes);
  g.adjacency_ = std::move(adjacency);
  return g;
}

std::size_t Graph::edge_count() const noexcept {
  return static_cast<std::size_t>(
             std::count(adjacency_.begin(), adjacency_.end(), 1)) /
         2;
}

std::optional<std::size_t> Graph::index_of(const NodeId& node) const {
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), node);
  if (it == nodes_.end() || *it != node) return std::nullopt;
  return static_cast<std::size_t>(it - nodes_.begin());
}

bool Graph::has_edge(const NodeId& u, const NodeId& v) const {
  auto iu = index_of(u);
  auto iv = index_of(v);
  return iu && iv && adjacent(*iu, *iv);
}

std::size_t Graph::degree(std::size_t i) const noexcept {
  const std::size_t n = nodes_.size();
  auto row = adjacency_.begin() + static_cast<std::ptrdiff_t>(i * n);
  return static_cast<std::size_t>(
      std::count(row, row + static_cast<std::ptrdiff_t>(n), 1));
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    for (std::size_t j = i + 1; j < nodes_.size(); ++j) {
      if (adjacent(i, j)) out.emplace_back(nodes_[i], nodes_[j]);
    }
  }
  return out;
}

Graph induced_subgraph(const Graph& graph, const std::vector<NodeId>& subset) {
  std::vector<NodeId> nodes = subset;
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  std::vector<std::size_t> index;
  index.reserve(nodes.size());
  for (const auto& v : nodes) {
    auto i = graph.index_of(v);
    if (!i) throw InvalidArgument("node '" + v + "' is not in the graph");
    index.push_back(*i);
  }
  const std::size_t n = nodes.size();
  std::vector<std::uint8_t> adjacency(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      adjacency[a * n + b] = graph.adjacent(index[a], index[b]) ? 1 : 0;
    }
  }
  return Graph::from_matrix(std::move(nodes), std::move(adjacency));
}

}  // namespace wordrep
