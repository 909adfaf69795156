#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "wordrep/graph.hpp"

namespace wordrep {

/// Disjoint, non-empty groups of nodes.
class CliquePartition {
 public:
  CliquePartition() = default;
  /// Throws InvalidArgument on an empty part or a node in two parts.
  explicit CliquePartition(std::vector<std::vector<NodeId>> parts);

  /// Parts separated by '|'. Each part is a run of single-scalar letters
  /// ("ab|cd|e"), or whitespace-separated tokens when `tokens` is set.
  static CliquePartition parse(std::string_view text, bool tokens = false);

  const std::vector<std::vector<NodeId>>& parts() const noexcept { return parts_; }
  std::vector<NodeId> nodes() const;
  std::string str() const;

  friend bool operator==(const CliquePartition&, const CliquePartition&) = default;

 private:
  std::vector<std::vector<NodeId>> parts_;
};

// Generators. Integer-named graphs use the nodes "1", ..., "n".

Graph complete_graph(std::size_t n);
Graph empty_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);  ///< n >= 3
/// H_{n,n}: nodes 1..2n, edges {x, y+n} for x != y.
Graph crown_graph(std::size_t n);
/// Union of complete graphs, one per part.
Graph clique_partition_graph(const CliquePartition& partition);

/// Named fixtures: "C4", "2K2", "P4" (the threshold obstructions), "E02" and
/// "E11" (7-node graphs with a two-clique resp. clique/independent-set
/// partition) and "cwdex" (K4 on a, b, c, d).
Graph fixture(std::string_view name);
std::vector<std::string> fixture_names();

/// Nodes per class of the partition shown with fixture `name` ("E02" as two
/// cliques; "E11" as a clique followed by an independent set).
std::vector<std::vector<NodeId>> fixture_colouring(std::string_view name);

/// Brute-force isomorphism test with degree pruning.
bool are_isomorphic(const Graph& a, const Graph& b);

inline constexpr std::size_t kDefaultInducedBudget = 10;

/// Whether some node subset of `graph` induces a copy of `pattern`.
/// Throws BudgetExceeded if `graph` has more than `max_nodes` nodes.
bool contains_induced(const Graph& graph, const Graph& pattern,
                      std::size_t max_nodes = kDefaultInducedBudget);

/// Threshold test by elimination: repeatedly delete the lowest isolated
/// node, otherwise the lowest universal node.
bool is_threshold(const Graph& graph);

/// Threshold test by forbidden induced subgraphs (C4, 2K2, P4).
bool is_threshold_by_obstruction(const Graph& graph);

struct SplitPartition {
  std::vector<std::vector<NodeId>> independent_sets;
  std::vector<std::vector<NodeId>> cliques;
};

/// Checks a partition into independent sets and cliques against `graph`.
bool is_valid_split(const Graph& graph, const SplitPartition& partition);

/// A partition of the nodes into `independent` independent sets and
/// `cliques` cliques (parts may be empty), or nullopt. Throws BudgetExceeded
/// above `max_nodes` nodes.
std::optional<SplitPartition> is_in_E(const Graph& graph, std::size_t independent,
                                      std::size_t cliques,
                                      std::size_t max_nodes = kDefaultInducedBudget);

using BigInt = boost::multiprecision::cpp_int;

/// Number of partitions of an n-set (Bell triangle, exact).
BigInt bell_number(std::size_t n);

/// All partitions of {1, ..., n}, in restricted-growth-string order.
std::vector<CliquePartition> set_partitions(std::size_t n);

/// The graph on 1..n whose edges are the set bits of `mask`; bit p stands
/// for the p-th pair (i, j), i < j, in lexicographic order of integers.
Graph labeled_graph(std::size_t n, std::uint64_t mask);

/// All 2^(n choose 2) graphs on node set 1..n, by increasing edge mask.
class LabeledGraphs {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Graph;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = Graph;

    iterator() = default;
    iterator(std::size_t n, std::uint64_t mask) : n_(n), mask_(mask) {}
    Graph operator*() const { return labeled_graph(n_, mask_); }
    iterator& operator++() {
      ++mask_;
      return *this;
    }
    iterator operator++(int) {
      auto copy = *this;
      ++mask_;
      return copy;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.mask_ == b.mask_; }

   private:
    std::size_t n_ = 0;
    std::uint64_t mask_ = 0;
  };

  iterator begin() const { return {n_, 0}; }
  iterator end() const { return {n_, count_}; }
  std::uint64_t size() const noexcept { return count_; }

 private:
  friend LabeledGraphs enumerate_labeled_graphs(std::size_t, std::size_t);
  LabeledGraphs(std::size_t n, std::uint64_t count) : n_(n), count_(count) {}
  std::size_t n_;
  std::uint64_t count_;
};

inline constexpr std::size_t kDefaultEnumerationBudget = 5;

/// Throws BudgetExceeded if n > max_nodes (hard limit 11), InvalidArgument
/// if n == 0.
LabeledGraphs enumerate_labeled_graphs(std::size_t n,
                                       std::size_t max_nodes = kDefaultEnumerationBudget);

}  // namespace wordrep
