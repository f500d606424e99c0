#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "idem/matrix.hpp"

namespace idem {

struct Edge {
  std::string from;
  std::string to;
  double weight = 0.0;
};

/// Named nodes in first-appearance order plus weighted directed edges.
class Graph {
 public:
  /// Returns the node's index, registering it if new.
  std::size_t add_node(const std::string& name);
  void add_edge(const std::string& from, const std::string& to, double weight);

  const std::vector<std::string>& nodes() const { return nodes_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t size() const { return nodes_.size(); }

  std::optional<std::size_t> find(std::string_view name) const;
  /// Throws UnknownNode.
  std::size_t index_of(std::string_view name) const;

 private:
  std::vector<std::string> nodes_;
  std::vector<Edge> edges_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Parses `from<TAB>to<TAB>weight` lines. Blank and `#` lines are skipped; a
/// line holding a single field declares an isolated node.
Graph parse_graph(std::string_view text);

/// Lowers to an adjacency matrix: absent edges are 0, parallel edges combine
/// by (+), self-loops are kept. When `unit_weights` is set every edge carries
/// the semiring's 1 instead of its weight.
Matrix lower_graph(const Graph& g, const Semiring& s, bool unit_weights = false);

}  // namespace idem
