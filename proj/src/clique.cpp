#include <algorithm>
#include <numeric>

#include "ncg/graph.hpp"

namespace ncg {

namespace {

// Bitset branch and bound in the style of MCQ/BBMC: vertices are renumbered
// by non-increasing degree, and each node greedily colours the candidate set
// so that colour classes bound the clique still reachable.
class MaxCliqueSearch {
public:
  MaxCliqueSearch(const SimpleGraph& g, std::uint64_t budget) : budget_(budget) {
    const std::size_t n = g.vertex_count();
    order_.resize(n);
    std::iota(order_.begin(), order_.end(), Vertex{0});
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    std::vector<Vertex> position(n);
    for (std::size_t k = 0; k < n; ++k) position[order_[k]] = static_cast<Vertex>(k);
    adj_.assign(n, Bitset(n));
    for (std::size_t k = 0; k < n; ++k) {
      const Bitset& row = g.neighbors(order_[k]);
      for (std::size_t u = row.find_first(); u != Bitset::npos; u = row.find_next(u)) adj_[k].set(position[u]);
    }
  }

  CliqueResult run() {
    const std::size_t n = adj_.size();
    CliqueResult result;
    if (n == 0) return result;
    Bitset candidates(n);
    candidates.set_all();
    best_.assign(1, 0);  // any single vertex is a clique
    expand(candidates);
    result.size = best_.size();
    for (Vertex v : best_) result.witness.push_back(order_[v]);
    std::sort(result.witness.begin(), result.witness.end());
    result.nodes = nodes_;
    return result;
  }

private:
  void expand(Bitset candidates) {
    if (++nodes_ > budget_)
      fail(ErrorCode::Timeout, "clique search exceeded the node budget of " + std::to_string(budget_));

    std::vector<Vertex> vertices;
    std::vector<std::size_t> colors;
    colour(candidates, vertices, colors);

    for (std::size_t k = vertices.size(); k-- > 0;) {
      if (current_.size() + colors[k] <= best_.size()) return;
      const Vertex v = vertices[k];
      current_.push_back(v);
      Bitset next = candidates & adj_[v];
      if (next.none()) {
        if (current_.size() > best_.size()) best_ = current_;
      } else {
        expand(std::move(next));
      }
      current_.pop_back();
      candidates.reset(v);
    }
  }

  // Greedy sequential colouring in vertex order. Vertices whose colour
  // cannot lift the current clique past the incumbent are left out.
  void colour(const Bitset& candidates, std::vector<Vertex>& vertices, std::vector<std::size_t>& colors) const {
    const std::size_t needed = best_.size() >= current_.size() ? best_.size() - current_.size() + 1 : 1;
    Bitset uncoloured = candidates;
    std::size_t color = 0;
    while (uncoloured.any()) {
      ++color;
      Bitset available = uncoloured;
      for (std::size_t v = available.find_first(); v != Bitset::npos; v = available.find_next(v)) {
        uncoloured.reset(v);
        available.subtract(adj_[v]);
        if (color >= needed) {
          vertices.push_back(static_cast<Vertex>(v));
          colors.push_back(color);
        }
      }
    }
  }

  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<Vertex> order_;
  std::vector<Bitset> adj_;
  std::vector<Vertex> current_;
  std::vector<Vertex> best_;
};

}  // namespace

CliqueResult clique_number(const SimpleGraph& g, std::uint64_t node_budget) {
  return MaxCliqueSearch(g, node_budget).run();
}

}  // namespace ncg
