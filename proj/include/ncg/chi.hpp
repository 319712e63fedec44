#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "ncg/group.hpp"
#include "ncg/graph.hpp"

namespace ncg {

/// A property of subgroups, evaluated on a membership set inside `parent`.
struct ChiProperty {
  std::string name;
  std::function<bool(const FiniteGroup& parent, const Bitset& members)> holds;
};

ChiProperty chi_abelian();
ChiProperty chi_cyclic();
/// "abelian" or "cyclic".
std::optional<ChiProperty> chi_property(std::string_view name);

enum class ChiPolarity {
  FailsProperty,  ///< edge iff <x,y> lacks the property; "abelian" gives the non-commuting graph
  HasProperty,    ///< edge iff <x,y> has the property
};

/// Pairwise closures cost O(n^3); larger groups are refused with CapExceeded.
inline constexpr std::size_t kChiMaxOrder = 1000;

/// Graph over the non-central elements (ascending), edges decided by the
/// two-generated subgroup <x, y>.
SimpleGraph chi_graph(const FiniteGroup& g, const ChiProperty& chi,
                      ChiPolarity polarity = ChiPolarity::FailsProperty);

struct ChiCheck {
  bool centralizers_have_property = false;  // every non-central C(a) has χ
  bool graph_is_matroid = false;            // FailsProperty polarity
  bool literal_graph_is_matroid = false;    // HasProperty polarity
};

ChiCheck chi_group_check(const FiniteGroup& g, const ChiProperty& chi);

}  // namespace ncg
