#include <bit>
#include <vector>

#include "ncg/graph.hpp"

namespace ncg {

std::size_t oracle_clique_number(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n > kOracleMaxVertices)
    fail(ErrorCode::TooLarge, "oracle enumerates subsets of at most 24 vertices, got " + std::to_string(n));
  std::vector<std::uint32_t> adj(n, 0);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u != v && g.has_edge(u, v)) adj[u] |= 1u << v;

  // clique[S] holds iff S minus its lowest vertex is a clique inside that
  // vertex's neighbourhood.
  const std::uint32_t subsets = 1u << n;
  std::vector<bool> clique(subsets, false);
  clique[0] = true;
  std::size_t best = 0;
  for (std::uint32_t s = 1; s < subsets; ++s) {
    const auto low = static_cast<std::uint32_t>(std::countr_zero(s));
    const std::uint32_t rest = s & (s - 1);
    if (clique[rest] && (rest & ~adj[low]) == 0) {
      clique[s] = true;
      best = std::max<std::size_t>(best, static_cast<std::size_t>(std::popcount(s)));
    }
  }
  return best;
}

}  // namespace ncg
