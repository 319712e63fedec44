#include "ncg/graph.hpp"

#include <string>

namespace ncg {

SimpleGraph::SimpleGraph(std::size_t vertex_count) : rows_(vertex_count, Bitset(vertex_count)) {}

SimpleGraph SimpleGraph::from_edges(std::size_t vertex_count, std::span<const std::pair<Vertex, Vertex>> edges) {
  SimpleGraph g(vertex_count);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void SimpleGraph::check(Vertex v) const {
  if (v >= rows_.size())
    fail(ErrorCode::OutOfRange,
         "vertex " + std::to_string(v) + " out of range for graph on " + std::to_string(rows_.size()) + " vertices");
}

std::size_t SimpleGraph::edge_count() const noexcept {
  std::size_t twice = 0;
  for (const auto& r : rows_) twice += r.count();
  return twice / 2;
}

void SimpleGraph::add_edge(Vertex u, Vertex v) {
  check(u);
  check(v);
  if (u == v) fail(ErrorCode::BadInput, "loops are not allowed (vertex " + std::to_string(u) + ")");
  rows_[u].set(v);
  rows_[v].set(u);
}

void SimpleGraph::remove_edge(Vertex u, Vertex v) {
  check(u);
  check(v);
  rows_[u].reset(v);
  rows_[v].reset(u);
}

bool SimpleGraph::has_edge(Vertex u, Vertex v) const {
  check(u);
  check(v);
  return rows_[u].test(v);
}

const Bitset& SimpleGraph::neighbors(Vertex v) const {
  check(v);
  return rows_[v];
}

std::size_t SimpleGraph::degree(Vertex v) const { return neighbors(v).count(); }

std::vector<std::pair<Vertex, Vertex>> SimpleGraph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < rows_.size(); ++u)
    for (std::size_t v = rows_[u].find_from(u + 1); v != Bitset::npos; v = rows_[u].find_next(v))
      out.emplace_back(u, static_cast<Vertex>(v));
  return out;
}

void SimpleGraph::set_tags(std::vector<std::uint32_t> tags) {
  if (!tags.empty() && tags.size() != rows_.size())
    fail(ErrorCode::BadInput, "tag count " + std::to_string(tags.size()) + " does not match vertex count");
  tags_ = std::move(tags);
}

SimpleGraph complement(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  SimpleGraph out(n);
  for (Vertex v = 0; v < n; ++v) {
    Bitset row = g.neighbors(v);
    row.flip_all();
    row.reset(v);
    for (std::size_t u = row.find_first(); u != Bitset::npos; u = row.find_next(u))
      if (u > v) out.add_edge(v, static_cast<Vertex>(u));
  }
  out.set_tags(g.tags());
  return out;
}

std::vector<std::vector<Vertex>> components(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  Bitset unseen(n);
  unseen.set_all();
  std::vector<std::vector<Vertex>> out;
  for (std::size_t start = unseen.find_first(); start != Bitset::npos; start = unseen.find_first()) {
    // Frontier expansion on whole bit rows.
    Bitset comp(n), frontier(n);
    frontier.set(start);
    unseen.reset(start);
    comp.set(start);
    while (frontier.any()) {
      Bitset next(n);
      for (std::size_t v = frontier.find_first(); v != Bitset::npos; v = frontier.find_next(v))
        next |= g.neighbors(static_cast<Vertex>(v));
      next &= unseen;
      unseen.subtract(next);
      comp |= next;
      frontier = std::move(next);
    }
    out.push_back(comp.to_indices());
  }
  return out;
}

bool is_clique(const SimpleGraph& g, std::span<const Vertex> vertices) {
  for (std::size_t a = 0; a < vertices.size(); ++a)
    for (std::size_t b = a + 1; b < vertices.size(); ++b)
      if (vertices[a] == vertices[b] || !g.has_edge(vertices[a], vertices[b])) return false;
  for (Vertex v : vertices) g.neighbors(v);  // range check for singletons
  return true;
}

std::size_t independence_number(const SimpleGraph& g, std::uint64_t node_budget) {
  return clique_number(complement(g), node_budget).size;
}

}  // namespace ncg
