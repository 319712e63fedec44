#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "ncg/group.hpp"
#include "ncg/graph.hpp"

namespace ncg {

/// The non-commuting graph of a materialized group together with the
/// centralizer data every analysis below reuses.
///
/// Vertices are the non-central elements in ascending index order; u–v is
/// an edge iff [u, v] != 1. Centralizers are grouped into classes of equal
/// element sets, each represented by its lowest non-central element.
class NcgContext {
public:
  const FiniteGroup& group() const noexcept { return group_; }
  const ElementSet& center() const noexcept { return center_; }
  const std::vector<Element>& non_central() const noexcept { return non_central_; }
  const SimpleGraph& graph() const noexcept { return graph_; }
  bool is_abelian() const noexcept { return non_central_.empty(); }

  std::optional<Vertex> vertex_of(Element e) const;
  Element element_of(Vertex v) const { return non_central_.at(v); }

  ElementSet centralizer(Element a) const { return group_.centralizer(a); }
  const Bitset& centralizer_bits(Element a) const { return group_.commute_rows().at(a); }

  /// Distinct centralizers of non-central elements, in order of their lowest
  /// representative.
  const std::vector<Element>& centralizer_representatives() const noexcept { return representatives_; }
  /// Index into centralizer_representatives() for each vertex.
  std::size_t centralizer_class(Vertex v) const { return class_of_vertex_.at(v); }

private:
  friend NcgContext build_ncg(const FiniteGroup& g);
  FiniteGroup group_;
  ElementSet center_;
  std::vector<Element> non_central_;
  std::vector<std::int64_t> vertex_of_;
  SimpleGraph graph_;
  std::vector<Element> representatives_;
  std::vector<std::size_t> class_of_vertex_;

  explicit NcgContext(FiniteGroup g) : group_(std::move(g)) {}
};

NcgContext build_ncg(const FiniteGroup& g);

using ElementTriple = std::array<Element, 3>;

struct AcResult {
  bool is_ac = true;
  /// (a, x, y) with x, y in C(a) and xy != yx, for the lowest such a.
  std::optional<ElementTriple> witness;
};
AcResult is_ac(const NcgContext& ctx);

/// Every non-central centralizer is cyclic.
bool is_cc(const NcgContext& ctx);

struct TransitivityResult {
  bool transitive = true;
  /// Lexicographically first non-central (x, y, z) with [x,y] = 1, [y,z] = 1, [x,z] != 1.
  std::optional<ElementTriple> violation;
};
TransitivityResult commutativity_transitive(const NcgContext& ctx);

/// The distinct sets C(a) \ Z(G). Throws NotAcGroup.
std::vector<ElementSet> centralizer_partition(const NcgContext& ctx);

/// Number of distinct non-central centralizers. Throws NotAcGroup.
std::size_t omega_fast(const NcgContext& ctx);

struct Eq1Result {
  bool holds = false;
  std::int64_t lhs = 0;  // |G|
  std::int64_t rhs = 0;  // (1 - ω)|Z| + Σ |C(a_i)|
};
/// Throws NotAcGroup.
Eq1Result eq1_verify(const NcgContext& ctx);

/// Greedy (lowest index first) maximal set of pairwise non-commuting elements.
/// Throws AbelianGroup.
ElementSet maximal_noncommuting_set(const NcgContext& ctx);

/// The centralizers of `s` cover G and none can be dropped. Throws NotMaximal
/// unless `s` is a maximal pairwise non-commuting set of non-central elements.
bool verify_centralizer_cover(const NcgContext& ctx, const ElementSet& s);

/// N ∪ {g} if that is still pairwise non-commuting, otherwise N with its
/// lowest element commuting with g swapped for g.
/// Throws NotAcGroup, or BadInput for a commuting N or a central g.
ElementSet exchange_extend(const NcgContext& ctx, const ElementSet& n, Element g);

/// |C(x)| <= |G| - ω + 1 for every non-central x. Throws NotAcGroup.
bool degree_bound_check(const NcgContext& ctx);

/// (|G| - |Z|) / (k - |Z|) when every non-central centralizer has order k;
/// nullopt otherwise. Throws NotAcGroup.
std::optional<std::size_t> kregular_omega(const NcgContext& ctx);

/// For a group built from "Q:2^n" or "Q:2^nxC:m" (m odd): ω = 2^(n-2) + 1 and
/// ω equals that of Q:2^n alone. Throws SpecMismatch for any other spec.
bool cc_quotient_omega_check(const FiniteGroup& g);

}  // namespace ncg
