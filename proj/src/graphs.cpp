#include "wordrep/graphs.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "wordrep/error.hpp"
#include "wordrep/word.hpp"

namespace wordrep {

namespace {

NodeId num(std::size_t i) { return std::to_string(i); }

std::vector<NodeId> numbered(std::size_t n) {
  std::vector<NodeId> nodes;
  for (std::size_t i = 1; i <= n; ++i) nodes.push_back(num(i));
  return nodes;
}

void require_positive(std::size_t n, const char* what) {
  if (n == 0) throw InvalidArgument(std::string(what) + " needs n >= 1");
}

std::vector<Edge> numbered_edges(std::initializer_list<std::pair<int, int>> pairs) {
  std::vector<Edge> edges;
  for (auto [u, v] : pairs) edges.emplace_back(std::to_string(u), std::to_string(v));
  return edges;
}

struct Fixture {
  const char* name;
  std::vector<NodeId> nodes;
  std::vector<Edge> edges;
};

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> table = {
      {"2K2", numbered(4), numbered_edges({{1, 2}, {3, 4}})},
      {"C4", numbered(4), numbered_edges({{1, 2}, {2, 3}, {3, 4}, {4, 1}})},
      {"E02", numbered(7),
       numbered_edges({{3, 4}, {4, 5}, {5, 6}, {6, 2}, {2, 3}, {1, 3}, {1, 4}, {1, 5},
                       {1, 6}, {1, 2}, {7, 2}, {7, 4}, {7, 5}, {7, 6}, {2, 4}})},
      {"E11", numbered(7),
       numbered_edges({{1, 2}, {1, 3}, {1, 4}, {2, 3}, {3, 4}, {4, 2}, {5, 2}, {5, 3},
                       {6, 3}, {6, 4}, {7, 2}, {7, 4}})},
      {"P4", numbered(4), numbered_edges({{1, 2}, {2, 3}, {3, 4}})},
      {"cwdex",
       {"a", "b", "c", "d"},
       {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}, {"a", "c"}, {"d", "b"}}},
  };
  return table;
}

// Backtracking isomorphism: maps a's nodes (highest degree first) onto b's
// nodes of equal degree, checking adjacency against everything mapped so far.
class IsoSearch {
 public:
  IsoSearch(const Graph& a, const Graph& b) : a_(a), b_(b), image_(a.size()), used_(b.size(), 0) {
    for (std::size_t i = 0; i < a.size(); ++i) order_.push_back(i);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::size_t x, std::size_t y) { return a.degree(x) > a.degree(y); });
  }

  bool run(std::size_t depth = 0) {
    if (depth == order_.size()) return true;
    const std::size_t u = order_[depth];
    for (std::size_t v = 0; v < b_.size(); ++v) {
      if (used_[v] != 0 || a_.degree(u) != b_.degree(v)) continue;
      bool ok = true;
      for (std::size_t d = 0; d < depth && ok; ++d) {
        const std::size_t w = order_[d];
        ok = a_.adjacent(u, w) == b_.adjacent(v, image_[w]);
      }
      if (!ok) continue;
      image_[u] = v;
      used_[v] = 1;
      if (run(depth + 1)) return true;
      used_[v] = 0;
    }
    return false;
  }

 private:
  const Graph& a_;
  const Graph& b_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> image_;
  std::vector<std::uint8_t> used_;
};

std::vector<std::size_t> degree_sequence(const Graph& g) {
  std::vector<std::size_t> d;
  for (std::size_t i = 0; i < g.size(); ++i) d.push_back(g.degree(i));
  std::sort(d.begin(), d.end());
  return d;
}

bool next_combination(std::vector<std::size_t>& pick, std::size_t n) {
  const std::size_t r = pick.size();
  for (std::size_t i = r; i-- > 0;) {
    if (pick[i] < n - r + i) {
      ++pick[i];
      for (std::size_t j = i + 1; j < r; ++j) pick[j] = pick[j - 1] + 1;
      return true;
    }
  }
  return false;
}

class SplitSearch {
 public:
  SplitSearch(const Graph& g, std::size_t independent, std::size_t cliques)
      : g_(g), parts_(cliques + independent), cliques_(cliques) {}

  bool run(std::size_t node = 0) {
    if (node == g_.size()) return true;
    bool tried_empty_clique = false;
    bool tried_empty_independent = false;
    for (std::size_t p = 0; p < parts_.size(); ++p) {
      const bool clique = p < cliques_;
      auto& part = parts_[p];
      if (part.empty()) {
        bool& tried = clique ? tried_empty_clique : tried_empty_independent;
        if (tried) continue;
        tried = true;
      }
      const bool fits = std::all_of(part.begin(), part.end(), [&](std::size_t m) {
        return g_.adjacent(node, m) == clique;
      });
      if (!fits) continue;
      part.push_back(node);
      if (run(node + 1)) return true;
      part.pop_back();
    }
    return false;
  }

  SplitPartition certificate() const {
    SplitPartition out;
    for (std::size_t p = 0; p < parts_.size(); ++p) {
      std::vector<NodeId> names;
      for (std::size_t i : parts_[p]) names.push_back(g_.nodes()[i]);
      (p < cliques_ ? out.cliques : out.independent_sets).push_back(std::move(names));
    }
    return out;
  }

 private:
  const Graph& g_;
  std::vector<std::vector<std::size_t>> parts_;
  std::size_t cliques_;
};

}  // namespace

CliquePartition::CliquePartition(std::vector<std::vector<NodeId>> parts)
    : parts_(std::move(parts)) {
  std::set<NodeId> seen;
  for (const auto& part : parts_) {
    if (part.empty()) throw InvalidArgument("clique partition has an empty part");
    for (const auto& v : part) {
      if (v.empty()) throw InvalidArgument("empty node name in clique partition");
      if (!seen.insert(v).second) {
        throw InvalidArgument("node '" + v + "' appears in two parts");
      }
    }
  }
}

CliquePartition CliquePartition::parse(std::string_view text, bool tokens) {
  std::vector<std::vector<NodeId>> parts;
  std::size_t start = 0;
  while (true) {
    auto bar = text.find('|', start);
    auto piece = text.substr(start, bar == std::string_view::npos ? std::string_view::npos
                                                                  : bar - start);
    // Tokens first; in scalar mode every token is then split into scalars.
    std::vector<NodeId> part;
    const Word chunks = Word::parse(piece, WordMode::Tokens);
    for (const auto& chunk : chunks.letters()) {
      if (tokens) {
        part.push_back(chunk);
      } else {
        for (auto& s : utf8_scalars(chunk)) part.push_back(std::move(s));
      }
    }
    if (part.empty()) throw ParseError("empty part in clique partition", start);
    parts.push_back(std::move(part));
    if (bar == std::string_view::npos) break;
    start = bar + 1;
  }
  return CliquePartition(std::move(parts));
}

std::vector<NodeId> CliquePartition::nodes() const {
  std::vector<NodeId> out;
  for (const auto& part : parts_) out.insert(out.end(), part.begin(), part.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::string CliquePartition::str() const {
  bool scalars = true;
  for (const auto& v : nodes()) scalars = scalars && utf8_scalars(v).size() == 1;
  std::string out;
  for (std::size_t p = 0; p < parts_.size(); ++p) {
    if (p > 0) out += scalars ? "|" : " | ";
    for (std::size_t i = 0; i < parts_[p].size(); ++i) {
      if (i > 0 && !scalars) out += ' ';
      out += parts_[p][i];
    }
  }
  return out;
}

Graph complete_graph(std::size_t n) {
  require_positive(n, "complete graph");
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) edges.emplace_back(num(i), num(j));
  return Graph(numbered(n), edges);
}

Graph empty_graph(std::size_t n) {
  require_positive(n, "empty graph");
  return Graph(numbered(n), {});
}

Graph path_graph(std::size_t n) {
  require_positive(n, "path");
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < n; ++i) edges.emplace_back(num(i), num(i + 1));
  return Graph(numbered(n), edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw InvalidArgument("cycle needs n >= 3");
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < n; ++i) edges.emplace_back(num(i), num(i + 1));
  edges.emplace_back(num(n), num(1));
  return Graph(numbered(n), edges);
}

Graph crown_graph(std::size_t n) {
  require_positive(n, "crown graph");
  std::vector<Edge> edges;
  for (std::size_t x = 1; x <= n; ++x)
    for (std::size_t y = 1; y <= n; ++y)
      if (x != y) edges.emplace_back(num(x), num(y + n));
  return Graph(numbered(2 * n), edges);
}

Graph clique_partition_graph(const CliquePartition& partition) {
  std::vector<Edge> edges;
  for (const auto& part : partition.parts())
    for (std::size_t i = 0; i < part.size(); ++i)
      for (std::size_t j = i + 1; j < part.size(); ++j) edges.emplace_back(part[i], part[j]);
  return Graph(partition.nodes(), edges);
}

Graph fixture(std::string_view name) {
  for (const auto& f : fixtures()) {
    if (f.name == name) return Graph(f.nodes, f.edges);
  }
  throw InvalidArgument("unknown fixture '" + std::string(name) + "'");
}

std::vector<std::string> fixture_names() {
  std::vector<std::string> names;
  for (const auto& f : fixtures()) names.emplace_back(f.name);
  return names;
}

std::vector<std::vector<NodeId>> fixture_colouring(std::string_view name) {
  if (name == "E02") return {{"1", "2", "3", "4"}, {"5", "6", "7"}};
  if (name == "E11") return {{"1", "2", "3", "4"}, {"5", "6", "7"}};
  throw InvalidArgument("fixture '" + std::string(name) + "' has no colouring");
}

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.size() != b.size() || a.edge_count() != b.edge_count()) return false;
  if (degree_sequence(a) != degree_sequence(b)) return false;
  return IsoSearch(a, b).run();
}

bool contains_induced(const Graph& graph, const Graph& pattern, std::size_t max_nodes) {
  if (graph.size() > max_nodes) {
    throw BudgetExceeded("induced-subgraph search limited to " + std::to_string(max_nodes) +
                         " nodes, graph has " + std::to_string(graph.size()));
  }
  const std::size_t r = pattern.size();
  if (r > graph.size()) return false;
  if (r == 0) return true;
  const auto pattern_degrees = degree_sequence(pattern);
  std::vector<std::size_t> pick(r);
  for (std::size_t i = 0; i < r; ++i) pick[i] = i;
  do {
    std::vector<NodeId> subset;
    for (std::size_t i : pick) subset.push_back(graph.nodes()[i]);
    Graph sub = induced_subgraph(graph, subset);
    if (degree_sequence(sub) == pattern_degrees && are_isomorphic(sub, pattern)) return true;
  } while (next_combination(pick, graph.size()));
  return false;
}

bool is_threshold(const Graph& graph) {
  const std::size_t n = graph.size();
  std::vector<std::uint8_t> alive(n, 1);
  std::vector<std::size_t> degree(n);
  for (std::size_t i = 0; i < n; ++i) degree[i] = graph.degree(i);
  for (std::size_t remaining = n; remaining > 0; --remaining) {
    std::size_t pick = n;
    for (std::size_t i = 0; i < n && pick == n; ++i)
      if (alive[i] != 0 && degree[i] == 0) pick = i;
    for (std::size_t i = 0; i < n && pick == n; ++i)
      if (alive[i] != 0 && degree[i] + 1 == remaining) pick = i;
    if (pick == n) return false;
    alive[pick] = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (alive[i] != 0 && graph.adjacent(i, pick)) --degree[i];
  }
  return true;
}

bool is_threshold_by_obstruction(const Graph& graph) {
  static const std::vector<Graph> obstructions = {fixture("C4"), fixture("2K2"), fixture("P4")};
  const std::size_t unlimited = graph.size();
  return std::none_of(obstructions.begin(), obstructions.end(), [&](const Graph& h) {
    return contains_induced(graph, h, unlimited);
  });
}

bool is_valid_split(const Graph& graph, const SplitPartition& partition) {
  std::vector<NodeId> all;
  auto check = [&](const std::vector<NodeId>& part, bool clique) {
    for (std::size_t i = 0; i < part.size(); ++i) {
      if (!graph.has_node(part[i])) return false;
      for (std::size_t j = i + 1; j < part.size(); ++j)
        if (graph.has_edge(part[i], part[j]) != clique) return false;
    }
    all.insert(all.end(), part.begin(), part.end());
    return true;
  };
  for (const auto& p : partition.independent_sets)
    if (!check(p, false)) return false;
  for (const auto& p : partition.cliques)
    if (!check(p, true)) return false;
  std::sort(all.begin(), all.end());
  return all == graph.nodes();
}

std::optional<SplitPartition> is_in_E(const Graph& graph, std::size_t independent,
                                      std::size_t cliques, std::size_t max_nodes) {
  if (graph.size() > max_nodes) {
    throw BudgetExceeded("partition search limited to " + std::to_string(max_nodes) +
                         " nodes, graph has " + std::to_string(graph.size()));
  }
  SplitSearch search(graph, independent, cliques);
  if (!search.run()) return std::nullopt;
  return search.certificate();
}

BigInt bell_number(std::size_t n) {
  // Bell triangle: each row starts with the previous row's last entry.
  std::vector<BigInt> row{1};
  for (std::size_t i = 1; i < n; ++i) {
    std::vector<BigInt> next{row.back()};
    for (const auto& x : row) next.push_back(next.back() + x);
    row = std::move(next);
  }
  return n == 0 ? BigInt(1) : row.back();
}

std::vector<CliquePartition> set_partitions(std::size_t n) {
  require_positive(n, "set partition enumeration");
  std::vector<CliquePartition> out;
  std::vector<std::size_t> rgs(n, 0);
  std::vector<std::size_t> prefix_max(n, 0);
  while (true) {
    std::size_t blocks = prefix_max[n - 1] + 1;
    std::vector<std::vector<NodeId>> parts(blocks);
    for (std::size_t i = 0; i < n; ++i) parts[rgs[i]].push_back(num(i + 1));
    out.emplace_back(std::move(parts));
    // Next restricted growth string: rgs[i] <= 1 + max(rgs[0..i-1]).
    std::size_t i = n - 1;
    while (i > 0 && rgs[i] == prefix_max[i - 1] + 1) --i;
    if (i == 0) break;
    ++rgs[i];
    prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      rgs[j] = 0;
      prefix_max[j] = prefix_max[i];
    }
  }
  return out;
}

Graph labeled_graph(std::size_t n, std::uint64_t mask) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) pairs.emplace_back(i, j);
  std::vector<Edge> edges;
  for (std::size_t p = 0; p < pairs.size(); ++p)
    if ((mask >> p) & 1U) edges.emplace_back(num(pairs[p].first), num(pairs[p].second));
  return Graph(numbered(n), edges);
}

LabeledGraphs enumerate_labeled_graphs(std::size_t n, std::size_t max_nodes) {
  require_positive(n, "labeled graph enumeration");
  if (n > std::min<std::size_t>(max_nodes, 11)) {
    throw BudgetExceeded("labeled graph enumeration limited to " +
                         std::to_string(std::min<std::size_t>(max_nodes, 11)) + " nodes");
  }
  return LabeledGraphs(n, std::uint64_t{1} << (n * (n - 1) / 2));
}

}  // namespace wordrep
