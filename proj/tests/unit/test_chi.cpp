#include "doctest.h"
#include "helpers.hpp"
#include "ncg/chi.hpp"
#include "ncg/families.hpp"
#include "ncg/matroid.hpp"
#include "ncg/ncg.hpp"

using namespace ncg;

TEST_CASE("chi_graph with the abelian property is the non-commuting graph") {
  for (const char* spec : {"Q:8", "S:4", "D:6", "H:3", "A:4xC:2"}) {
    const FiniteGroup g = build_finite(spec);
    CHECK(chi_graph(g, chi_abelian()) == build_ncg(g).graph());
  }
}

TEST_CASE("chi_graph examples") {
  CHECK(chi_graph(make_cyclic(6), chi_cyclic()).vertex_count() == 0);

  const FiniteGroup q8 = make_quaternion(8);
  const SimpleGraph cyc = chi_graph(q8, chi_cyclic());
  const SimpleGraph ncg = build_ncg(q8).graph();
  for (const auto& [u, v] : ncg.edges()) CHECK(cyc.has_edge(u, v));

  const SimpleGraph literal = chi_graph(q8, chi_abelian(), ChiPolarity::HasProperty);
  CHECK(literal == complement(ncg));
  CHECK(test::error_code_of([] { chi_graph(make_cyclic(1001), chi_abelian()); }) == ErrorCode::CapExceeded);
}

TEST_CASE("chi_property lookup") {
  CHECK(chi_property("abelian")->name == "abelian");
  CHECK(chi_property("cyclic")->name == "cyclic");
  CHECK_FALSE(chi_property("nilpotent").has_value());
}

TEST_CASE("chi_group_check") {
  const ChiCheck q8 = chi_group_check(make_quaternion(8), chi_abelian());
  CHECK(q8.centralizers_have_property);
  CHECK(q8.graph_is_matroid);
  const ChiCheck s4 = chi_group_check(make_symmetric(4), chi_abelian());
  CHECK_FALSE(s4.centralizers_have_property);
  CHECK_FALSE(s4.graph_is_matroid);
  const ChiCheck q8c = chi_group_check(make_quaternion(8), chi_cyclic());
  CHECK(q8c.centralizers_have_property);
}
