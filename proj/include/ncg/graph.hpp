#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "ncg/bitset.hpp"
#include "ncg/error.hpp"

namespace ncg {

using Vertex = std::uint32_t;

/// Undirected simple graph over vertices 0..n-1 with packed adjacency rows.
/// Optional tags map each vertex to a group-element index.
class SimpleGraph {
public:
  SimpleGraph() = default;
  explicit SimpleGraph(std::size_t vertex_count);
  static SimpleGraph from_edges(std::size_t vertex_count, std::span<const std::pair<Vertex, Vertex>> edges);

  std::size_t vertex_count() const noexcept { return rows_.size(); }
  std::size_t edge_count() const noexcept;

  /// Throws OutOfRange; a loop (u == v) is BadInput.
  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const;
  const Bitset& neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const;

  /// All edges (u, v) with u < v in lexicographic order.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  void set_tags(std::vector<std::uint32_t> tags);
  const std::vector<std::uint32_t>& tags() const noexcept { return tags_; }

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) { return a.rows_ == b.rows_; }

private:
  void check(Vertex v) const;

  std::vector<Bitset> rows_;
  std::vector<std::uint32_t> tags_;
};

/// Involutive; tags are carried over.
SimpleGraph complement(const SimpleGraph& g);

/// Connected components, each sorted, ordered by their lowest vertex.
std::vector<std::vector<Vertex>> components(const SimpleGraph& g);

/// Vacuously true for the empty set. Throws OutOfRange.
bool is_clique(const SimpleGraph& g, std::span<const Vertex> vertices);

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

struct CliqueResult {
  std::size_t size = 0;
  std::vector<Vertex> witness;  // sorted
  std::uint64_t nodes = 0;      // search nodes expanded
};

/// Exact maximum clique by branch and bound with greedy-colouring bounds.
/// Throws Error(Timeout) once more than `node_budget` nodes are expanded.
CliqueResult clique_number(const SimpleGraph& g, std::uint64_t node_budget = kDefaultNodeBudget);

/// Clique number of the complement.
std::size_t independence_number(const SimpleGraph& g, std::uint64_t node_budget = kDefaultNodeBudget);

inline constexpr std::size_t kOracleMaxVertices = 24;

/// Maximum clique by enumerating every vertex subset. Independent of
/// clique_number; meant for verification. Throws TooLarge above 24 vertices.
std::size_t oracle_clique_number(const SimpleGraph& g);

}  // namespace ncg
