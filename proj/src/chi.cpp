#include "ncg/chi.hpp"

#include <array>

#include "ncg/matroid.hpp"

namespace ncg {

ChiProperty chi_abelian() {
  return {"abelian", [](const FiniteGroup& parent, const Bitset& members) {
            const auto& commute = parent.commute_rows();
            for (std::size_t x = members.find_first(); x != Bitset::npos; x = members.find_next(x))
              if (!members.is_subset_of(commute[x])) return false;
            return true;
          }};
}

ChiProperty chi_cyclic() {
  return {"cyclic", [](const FiniteGroup& parent, const Bitset& members) {
            const std::size_t size = members.count();
            const auto& orders = parent.element_orders();
            for (std::size_t x = members.find_first(); x != Bitset::npos; x = members.find_next(x))
              if (orders[x] == size) return true;
            return false;
          }};
}

std::optional<ChiProperty> chi_property(std::string_view name) {
  if (name == "abelian") return chi_abelian();
  if (name == "cyclic") return chi_cyclic();
  return std::nullopt;
}

SimpleGraph chi_graph(const FiniteGroup& g, const ChiProperty& chi, ChiPolarity polarity) {
  if (g.order() > kChiMaxOrder)
    fail(ErrorCode::CapExceeded, "chi graphs close every pair; order " + std::to_string(g.order()) +
                                     " is above the limit " + std::to_string(kChiMaxOrder));
  const Bitset& central = g.center_bits();
  std::vector<Element> vertices;
  for (Element e = 0; e < g.order(); ++e)
    if (!central.test(e)) vertices.push_back(e);

  SimpleGraph out(vertices.size());
  for (Vertex u = 0; u < vertices.size(); ++u) {
    for (Vertex v = u + 1; v < vertices.size(); ++v) {
      const std::array<Element, 2> gens{vertices[u], vertices[v]};
      const bool has = chi.holds(g, g.closure_bits(gens));
      if (has == (polarity == ChiPolarity::HasProperty)) out.add_edge(u, v);
    }
  }
  out.set_tags(std::move(vertices));
  return out;
}

ChiCheck chi_group_check(const FiniteGroup& g, const ChiProperty& chi) {
  ChiCheck r;
  r.centralizers_have_property = true;
  const Bitset& central = g.center_bits();
  for (Element a = 0; a < g.order() && r.centralizers_have_property; ++a)
    if (!central.test(a)) r.centralizers_have_property = chi.holds(g, g.commute_rows()[a]);
  r.graph_is_matroid = is_matroid_graph(chi_graph(g, chi, ChiPolarity::FailsProperty)).is_matroid;
  r.literal_graph_is_matroid = is_matroid_graph(chi_graph(g, chi, ChiPolarity::HasProperty)).is_matroid;
  return r;
}

}  // namespace ncg
