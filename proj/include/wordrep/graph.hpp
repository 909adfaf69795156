#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace wordrep {

/// Node identity. Letters of a word and integer-named nodes ("1", "2", ...)
/// share this one space.
using NodeId = std::string;

/// Unordered pair, stored with the lexicographically smaller endpoint first.
using Edge = std::pair<NodeId, NodeId>;

/// Simple undirected graph with string-named nodes.
///
/// Nodes are kept sorted; node i in `nodes()` is row i of the adjacency
/// matrix. Values are immutable after construction.
class Graph {
 public:
  Graph() = default;

  /// Throws InvalidArgument on duplicate nodes, self-loops or edges whose
  /// endpoints are not listed. Repeated edges are merged.
  Graph(std::vector<NodeId> nodes, const std::vector<Edge>& edges);

  /// `nodes` must be sorted and duplicate-free; `adjacency` is a symmetric
  /// row-major n*n 0/1 matrix with a zero diagonal.
  static Graph from_matrix(std::vector<NodeId> nodes,
                           std::vector<std::uint8_t> adjacency);

  const std::vector<NodeId>& nodes() const noexcept { return nodes_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  std::size_t edge_count() const noexcept;

  std::optional<std::size_t> index_of(const NodeId& node) const;
  bool has_node(const NodeId& node) const { return index_of(node).has_value(); }

  bool adjacent(std::size_t i, std::size_t j) const noexcept {
    return adjacency_[i * nodes_.size() + j] != 0;
  }
  bool has_edge(const NodeId& u, const NodeId& v) const;
  std::size_t degree(std::size_t i) const noexcept;

  /// Canonical edge list: smaller endpoint first, sorted.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.nodes_ == b.nodes_ && a.adjacency_ == b.adjacency_;
  }

 private:
  std::vector<NodeId> nodes_;
  std::vector<std::uint8_t> adjacency_;
};

/// G restricted to `subset`. Throws InvalidArgument if some member of
/// `subset` is not a node of `graph`.
Graph induced_subgraph(const Graph& graph, const std::vector<NodeId>& subset);

}  // namespace wordrep
