// Compares library results with values from tools/oracle/ncg_oracle.py.

#include <fstream>
#include <set>

#include "doctest.h"
#include "json.hpp"
#include "ncg/families.hpp"
#include "ncg/matroid.hpp"
#include "ncg/ncg.hpp"

using namespace ncg;

TEST_CASE("library agrees with the brute-force oracle") {
  std::ifstream in(std::string(NCG_FIXTURE_DIR) + "/oracle_values.json");
  REQUIRE(in);
  const auto fixture = nlohmann::json::parse(in);
  REQUIRE(fixture.size() >= 20);

  for (const auto& [spec, want] : fixture.items()) {
    CAPTURE(spec);
    const NcgContext ctx = build_ncg(build_finite(spec));
    const FiniteGroup& g = ctx.group();
    const SimpleGraph& graph = ctx.graph();
    CHECK(g.order() == want["order"].get<std::size_t>());
    CHECK(ctx.center().size() == want["center_order"].get<std::size_t>());
    CHECK(graph.vertex_count() == want["vertices"].get<std::size_t>());
    CHECK(graph.edge_count() == want["edges"].get<std::size_t>());
    CHECK(ctx.is_abelian() == want["is_abelian"].get<bool>());
    CHECK(is_ac(ctx).is_ac == want["is_ac"].get<bool>());
    CHECK(is_cc(ctx) == want["is_cc"].get<bool>());
    CHECK(is_matroid_graph(graph).is_matroid == want["is_matroid"].get<bool>());
    CHECK(commutativity_transitive(ctx).transitive == want["is_matroid"].get<bool>());
    if (!want["omega"].is_null()) {
      CHECK(clique_number(graph).size == want["omega"].get<std::size_t>());
      CHECK(independence_number(graph) == want["alpha"].get<std::size_t>());
    }

    std::set<std::size_t> degrees, orders;
    for (Vertex v = 0; v < graph.vertex_count(); ++v) degrees.insert(graph.degree(v));
    for (Element a : ctx.centralizer_representatives()) orders.insert(ctx.centralizer_bits(a).count());
    CHECK(std::vector<std::size_t>(degrees.begin(), degrees.end()) == want["degrees"].get<std::vector<std::size_t>>());
    CHECK(std::vector<std::size_t>(orders.begin(), orders.end()) ==
          want["centralizer_orders"].get<std::vector<std::size_t>>());
    CHECK(ctx.centralizer_representatives().size() == want["distinct_centralizers"].get<std::size_t>());

    std::vector<std::size_t> sizes;
    for (const auto& c : components(complement(graph))) sizes.push_back(c.size());
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == want["complement_component_sizes"].get<std::vector<std::size_t>>());

    if (want.contains("eq1_rhs")) {
      CHECK(omega_fast(ctx) == want["distinct_centralizers"].get<std::size_t>());
      CHECK(eq1_verify(ctx).rhs == want["eq1_rhs"].get<std::int64_t>());
      const auto k = kregular_omega(ctx);
      if (want["kregular"].is_null())
        CHECK_FALSE(k.has_value());
      else
        CHECK(k == std::optional<std::size_t>(want["kregular"].get<std::size_t>()));
    }
  }
}
