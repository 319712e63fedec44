#include "ncg/matroid.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace ncg {

namespace {

std::string face_text(const Face& f) {
  std::string s = "{";
  for (std::size_t k = 0; k < f.size(); ++k) s += (k ? "," : "") + std::to_string(f[k]);
  return s + "}";
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::size_t vertex_count, std::vector<Face> faces) : vertex_count_(vertex_count) {
  for (auto& f : faces) {
    std::sort(f.begin(), f.end());
    if (std::adjacent_find(f.begin(), f.end()) != f.end())
      fail(ErrorCode::InvalidComplex, "face " + face_text(f) + " repeats a vertex");
    for (Vertex v : f)
      if (v >= vertex_count) fail(ErrorCode::InvalidComplex, "face " + face_text(f) + " names a vertex out of range");
    faces_.insert(std::move(f));
  }
  if (!faces_.count(Face{})) fail(ErrorCode::InvalidComplex, "the empty face is missing");
  // Closure under removing one vertex implies closure under all subsets.
  for (const Face& f : faces_) {
    for (std::size_t k = 0; k < f.size(); ++k) {
      Face sub = f;
      sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(k));
      if (!faces_.count(sub))
        fail(ErrorCode::InvalidComplex, "face " + face_text(f) + " is present but its subset " + face_text(sub) + " is not");
    }
  }
}

int SimplicialComplex::dimension() const noexcept {
  return static_cast<int>(faces_.rbegin()->size()) - 1;
}

SimplicialComplex from_graph(const SimpleGraph& g) {
  std::vector<Face> faces;
  faces.push_back({});
  for (Vertex v = 0; v < g.vertex_count(); ++v) faces.push_back({v});
  for (auto [u, v] : g.edges()) faces.push_back({u, v});
  return SimplicialComplex(g.vertex_count(), std::move(faces));
}

bool is_trim(const SimplicialComplex& c) {
  for (Vertex v = 0; v < c.vertex_count(); ++v)
    if (!c.contains(Face{v})) return false;
  return true;
}

ExchangeResult has_exchange_property(const SimplicialComplex& c) {
  std::map<std::size_t, std::vector<const Face*>> by_size;
  for (const Face& f : c.faces()) by_size[f.size()].push_back(&f);

  for (const auto& [size, larger] : by_size) {
    if (size == 0) continue;
    auto smaller_it = by_size.find(size - 1);
    if (smaller_it == by_size.end()) continue;
    for (const Face* big : larger) {
      for (const Face* small : smaller_it->second) {
        bool found = false;
        for (Vertex i : *big) {
          if (std::binary_search(small->begin(), small->end(), i)) continue;
          Face joined = *small;
          joined.insert(std::lower_bound(joined.begin(), joined.end(), i), i);
          if (c.contains(joined)) {
            found = true;
            break;
          }
        }
        if (!found) return {false, std::make_pair(*big, *small)};
      }
    }
  }
  return {};
}

MatroidResult is_matroid_graph(const SimpleGraph& g) {
  const SimpleGraph co = complement(g);
  // The complement is a disjoint union of cliques iff it has no induced P3.
  for (Vertex b = 0; b < co.vertex_count(); ++b) {
    const Bitset& nb = co.neighbors(b);
    for (std::size_t a = nb.find_first(); a != Bitset::npos; a = nb.find_next(a)) {
      Bitset missing = nb;
      missing.subtract(co.neighbors(static_cast<Vertex>(a)));
      missing.reset(a);
      const std::size_t c = missing.find_first();
      if (c != Bitset::npos) return {false, std::array<Vertex, 3>{static_cast<Vertex>(a), b, static_cast<Vertex>(c)}};
    }
  }
  return {};
}

bool cross_validate_matroid(const SimpleGraph& g) {
  if (g.vertex_count() > kCrossValidateMaxVertices)
    fail(ErrorCode::TooLarge, "cross validation enumerates faces of graphs with at most 64 vertices");
  const bool by_components = is_matroid_graph(g).is_matroid;
  const bool by_exchange = has_exchange_property(from_graph(g)).holds;
  if (by_components != by_exchange)
    fail(ErrorCode::Inconsistent, std::string("component criterion says ") + (by_components ? "matroid" : "not matroid") +
                                      " but the exchange property says " + (by_exchange ? "holds" : "fails"));
  return by_components;
}

std::vector<Vertex> extend_clique(const SimpleGraph& g, std::span<const Vertex> seed) {
  if (!is_clique(g, seed)) fail(ErrorCode::NotAClique, "seed is not a clique");
  if (!is_matroid_graph(g).is_matroid) fail(ErrorCode::NotAMatroid, "graph is not a matroid");
  std::vector<Vertex> out(seed.begin(), seed.end());
  Bitset in_seed(g.vertex_count());
  for (Vertex v : seed) in_seed.set(v);
  for (const auto& comp : components(complement(g))) {
    const bool met = std::any_of(comp.begin(), comp.end(), [&](Vertex v) { return in_seed.test(v); });
    if (!met) out.push_back(comp.front());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ncg
