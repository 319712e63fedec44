// Seeded property checks over the sweep groups and random graphs.

#include <algorithm>
#include <random>

#include "doctest.h"
#include "ncg/families.hpp"
#include "ncg/matroid.hpp"
#include "ncg/ncg.hpp"
#include "ncg/verify.hpp"

using namespace ncg;

namespace {

const std::vector<FiniteGroup>& sweep_groups() {
  static const std::vector<FiniteGroup> groups = [] {
    std::vector<FiniteGroup> out;
    for (const auto& spec : sweep_specs()) out.push_back(build_finite(spec));
    return out;
  }();
  return groups;
}

bool pairwise_noncommuting(const FiniteGroup& g, const ElementSet& s) {
  for (Element x : s)
    for (Element y : s)
      if (x != y && g.commutes(x, y)) return false;
  return true;
}

// Random pairwise non-commuting set: a greedy pass over a shuffled vertex order, cut short at random.
ElementSet random_noncommuting_set(const NcgContext& ctx, std::mt19937_64& rng) {
  std::vector<Element> order = ctx.non_central();
  std::shuffle(order.begin(), order.end(), rng);
  const std::size_t cap = rng() % (order.size() + 1);
  std::vector<Element> s;
  for (Element e : order) {
    if (s.size() >= cap) break;
    if (std::none_of(s.begin(), s.end(), [&](Element x) { return ctx.group().commutes(e, x); })) s.push_back(e);
  }
  return ElementSet(std::move(s));
}

}  // namespace

TEST_CASE("sweep covers enough groups") { CHECK(sweep_groups().size() >= kSweepMinGroups); }

TEST_CASE("AC, matroid and transitivity verdicts coincide") {
  for (const FiniteGroup& g : sweep_groups()) {
    CAPTURE(g.spec());
    const NcgContext ctx = build_ncg(g);
    const bool ac = is_ac(ctx).is_ac;
    CHECK(ac == is_matroid_graph(ctx.graph()).is_matroid);
    CHECK(ac == commutativity_transitive(ctx).transitive);
    if (is_cc(ctx)) CHECK(ac);
  }
}

TEST_CASE("AC groups: omega by every route") {
  for (const FiniteGroup& g : sweep_groups()) {
    const NcgContext ctx = build_ncg(g);
    if (ctx.is_abelian() || !is_ac(ctx).is_ac) continue;
    CAPTURE(g.spec());
    const std::size_t omega = omega_fast(ctx);
    CHECK(clique_number(ctx.graph()).size == omega);
    CHECK(components(complement(ctx.graph())).size() == omega);
    CHECK(maximal_noncommuting_set(ctx).size() == omega);
    CHECK(eq1_verify(ctx).holds);
    CHECK(degree_bound_check(ctx));
    const SimpleGraph comp = complement(ctx.graph());
    for (const auto& c : components(comp)) CHECK(is_clique(comp, c));
  }
}

TEST_CASE("subgroups of AC groups have matroid graphs") {
  std::mt19937_64 rng(0);
  for (const FiniteGroup& g : sweep_groups()) {
    const NcgContext ctx = build_ncg(g);
    if (!is_ac(ctx).is_ac) continue;
    CAPTURE(g.spec());
    for (int k = 0; k < 20; ++k) {
      const Element a = static_cast<Element>(rng() % g.order()), b = static_cast<Element>(rng() % g.order());
      const Subgroup h = g.generated_subgroup(ElementSet({std::min(a, b), std::max(a, b)}));
      CHECK(is_matroid_graph(build_ncg(h.group).graph()).is_matroid);
    }
  }
}

TEST_CASE("exchange_extend keeps sets pairwise non-commuting") {
  std::mt19937_64 rng(0);
  for (const FiniteGroup& g : sweep_groups()) {
    const NcgContext ctx = build_ncg(g);
    if (ctx.is_abelian() || !is_ac(ctx).is_ac) continue;
    CAPTURE(g.spec());
    int bad = 0;
    for (int k = 0; k < 1000; ++k) {
      const ElementSet n = random_noncommuting_set(ctx, rng);
      const Element e = ctx.non_central()[rng() % ctx.non_central().size()];
      const ElementSet out = exchange_extend(ctx, n, e);
      bad += !(pairwise_noncommuting(g, out) && out.size() >= n.size() && out.contains(e));
    }
    CHECK(bad == 0);
  }
}

TEST_CASE("random matroid graphs: extension and degree bound") {
  std::mt19937_64 rng(0);
  for (int k = 0; k < 200; ++k) {
    const RandomMatroidGraph m = random_matroid_graph(rng, 40);
    const std::size_t omega = clique_number(m.graph).size;
    CHECK(omega == m.parts);
    for (Vertex v = 0; v < m.graph.vertex_count(); ++v) {
      CHECK(m.graph.degree(v) + 1 >= omega);
      const std::vector<Vertex> seed{v};
      CHECK(extend_clique(m.graph, seed).size() == omega);
    }
  }
}
