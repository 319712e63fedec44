#pragma once

#include <array>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "ncg/graph.hpp"

namespace ncg {

using Face = std::vector<Vertex>;  // sorted

/// Canonical face order: by size, then lexicographically.
struct FaceOrder {
  bool operator()(const Face& a, const Face& b) const {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  }
};

/// Explicit downward-closed face collection over vertices 0..n-1.
class SimplicialComplex {
public:
  /// Faces are sorted on entry. Throws InvalidComplex if the collection lacks
  /// the empty face, names a vertex out of range, or is not closed under subsets.
  SimplicialComplex(std::size_t vertex_count, std::vector<Face> faces);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  const std::set<Face, FaceOrder>& faces() const noexcept { return faces_; }
  std::size_t face_count() const noexcept { return faces_.size(); }
  bool contains(const Face& f) const { return faces_.count(f) != 0; }
  /// Largest face size minus one (-1 for {∅}).
  int dimension() const noexcept;

private:
  std::size_t vertex_count_;
  std::set<Face, FaceOrder> faces_;
};

/// ∅, every singleton and every edge.
SimplicialComplex from_graph(const SimpleGraph& g);

bool is_trim(const SimplicialComplex& c);

struct ExchangeResult {
  bool holds = true;
  /// First violating (I, J) with |I| = |J| + 1 in canonical order.
  std::optional<std::pair<Face, Face>> counterexample;
};

/// For all faces I, J with |I| = |J| + 1 there is i in I \ J with J ∪ {i} a face.
ExchangeResult has_exchange_property(const SimplicialComplex& c);

struct MatroidResult {
  bool is_matroid = true;
  /// (a, b, c): a–b and b–c are complement edges, a–c is not.
  std::optional<std::array<Vertex, 3>> witness;
};

/// True iff every component of the complement is complete (the complement is
/// a disjoint union of cliques).
MatroidResult is_matroid_graph(const SimpleGraph& g);

inline constexpr std::size_t kCrossValidateMaxVertices = 64;

/// Runs both criteria and returns the shared verdict. Throws TooLarge above 64
/// vertices and Inconsistent if they disagree.
bool cross_validate_matroid(const SimpleGraph& g);

/// Extends a clique of a matroid graph to a maximum clique by taking the
/// lowest vertex of every complement component the seed does not meet.
/// Throws NotAClique or NotAMatroid.
std::vector<Vertex> extend_clique(const SimpleGraph& g, std::span<const Vertex> seed);

}  // namespace ncg
