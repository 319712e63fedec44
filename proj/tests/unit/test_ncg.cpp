#include "doctest.h"
#include "helpers.hpp"
#include "ncg/families.hpp"
#include "ncg/ncg.hpp"

using namespace ncg;
using test::by_label;
using test::set_of;

namespace {

NcgContext ctx_of(const char* spec) { return build_ncg(build_finite(spec)); }

bool pairwise_noncommuting(const FiniteGroup& g, const ElementSet& s) {
  for (Element x : s)
    for (Element y : s)
      if (x != y && g.commutes(x, y)) return false;
  return true;
}

}  // namespace

TEST_CASE("build_ncg") {
  CHECK(ctx_of("C:9").graph().vertex_count() == 0);
  CHECK(ctx_of("C:9").is_abelian());
  const NcgContext q8 = ctx_of("Q:8");
  CHECK(q8.graph().vertex_count() == 6);
  for (Vertex v = 0; v < 6; ++v) CHECK(q8.graph().degree(v) == 4);
  CHECK(ctx_of("D:3").graph().vertex_count() == 5);

  const NcgContext s4 = ctx_of("S:4");
  CHECK(s4.graph().vertex_count() == 23);
  for (Vertex u = 0; u < 23; ++u) {
    CHECK(s4.element_of(u) == s4.graph().tags()[u]);
    CHECK(s4.vertex_of(s4.element_of(u)) == u);
    for (Vertex v = 0; v < 23; ++v)
      CHECK(s4.graph().has_edge(u, v) == (s4.group().commutator(s4.element_of(u), s4.element_of(v)) != 0));
  }
  CHECK_FALSE(s4.vertex_of(0).has_value());
}

TEST_CASE("is_ac") {
  CHECK(is_ac(ctx_of("Q:16")).is_ac);
  CHECK(is_ac(ctx_of("H:3")).is_ac);
  CHECK(is_ac(ctx_of("C:4")).is_ac);

  const NcgContext s4 = ctx_of("S:4");
  const AcResult r = is_ac(s4);
  CHECK_FALSE(r.is_ac);
  REQUIRE(r.witness.has_value());
  const auto [a, x, y] = *r.witness;
  const FiniteGroup& g = s4.group();
  CHECK(s4.vertex_of(a).has_value());
  CHECK(g.commutes(a, x));
  CHECK(g.commutes(a, y));
  CHECK_FALSE(g.commutes(x, y));
}

TEST_CASE("is_cc") {
  CHECK(is_cc(ctx_of("Q:8")));
  CHECK_FALSE(is_cc(ctx_of("D:4")));
  for (const char* spec : {"Q:8", "Q:16", "Q:32", "D:3", "D:5", "S:3", "Q:8xC:5", "Q:16xC:3"}) {
    CAPTURE(spec);
    const NcgContext c = ctx_of(spec);
    CHECK(is_cc(c));
    CHECK(is_ac(c).is_ac);
  }
}

TEST_CASE("commutativity_transitive") {
  const NcgContext s4 = ctx_of("S:4");
  const FiniteGroup& g = s4.group();
  const Element a = by_label(g, "(3 4)"), b = by_label(g, "(1 2)(3 4)"), c = by_label(g, "(1 3)(2 4)");
  CHECK(g.commutes(a, b));
  CHECK(g.commutes(b, c));
  CHECK_FALSE(g.commutes(a, c));

  const TransitivityResult r = commutativity_transitive(s4);
  CHECK_FALSE(r.transitive);
  REQUIRE(r.violation.has_value());
  const auto [x, y, z] = *r.violation;
  CHECK(g.commutes(x, y));
  CHECK(g.commutes(y, z));
  CHECK_FALSE(g.commutes(x, z));

  CHECK(commutativity_transitive(ctx_of("D:8")).transitive);
}

TEST_CASE("centralizer_partition") {
  const auto q8 = centralizer_partition(ctx_of("Q:8"));
  CHECK(q8.size() == 3);
  for (const auto& b : q8) CHECK(b.size() == 2);
  CHECK(centralizer_partition(ctx_of("Q:20")).size() == 6);

  const NcgContext d8 = ctx_of("D:4");
  const FiniteGroup& g = d8.group();
  auto blocks = centralizer_partition(d8);
  std::sort(blocks.begin(), blocks.end());
  std::vector<ElementSet> expected{set_of(g, {"b", "b^3"}), set_of(g, {"a", "b^2a"}), set_of(g, {"ba", "b^3a"})};
  std::sort(expected.begin(), expected.end());
  CHECK(blocks == expected);

  CHECK(test::error_code_of([] { centralizer_partition(ctx_of("S:4")); }) == ErrorCode::NotAcGroup);
}

TEST_CASE("omega_fast") {
  for (std::size_t l = 2; l <= 10; ++l) CHECK(omega_fast(build_ncg(make_quaternion(4 * l))) == l + 1);
  for (std::size_t p : {2u, 3u, 5u}) CHECK(omega_fast(build_ncg(make_heisenberg(p))) == p + 1);
  CHECK(omega_fast(ctx_of("D:8")) == 5);
  CHECK(test::error_code_of([] { omega_fast(ctx_of("S:4")); }) == ErrorCode::NotAcGroup);
}

TEST_CASE("eq1_verify") {
  const Eq1Result q8 = eq1_verify(ctx_of("Q:8"));
  CHECK(q8.holds);
  CHECK(q8.lhs == 8);
  CHECK(q8.rhs == (1 - 3) * 2 + (4 + 4 + 4));
  const Eq1Result d6 = eq1_verify(ctx_of("D:3"));
  CHECK(d6.holds);
  CHECK(d6.rhs == (1 - 4) * 1 + (2 + 2 + 2 + 3));
  const Eq1Result h3 = eq1_verify(ctx_of("H:3"));
  CHECK(h3.holds);
  CHECK(h3.rhs == (1 - 4) * 3 + 4 * 9);
  CHECK(test::error_code_of([] { eq1_verify(ctx_of("S:4")); }) == ErrorCode::NotAcGroup);
}

TEST_CASE("maximal_noncommuting_set") {
  const NcgContext q8 = ctx_of("Q:8");
  const ElementSet s = maximal_noncommuting_set(q8);
  CHECK(s.size() == 3);
  CHECK(pairwise_noncommuting(q8.group(), s));
  CHECK(maximal_noncommuting_set(ctx_of("D:6")).size() == 4);

  const NcgContext s4 = ctx_of("S:4");
  const ElementSet m = maximal_noncommuting_set(s4);
  CHECK(pairwise_noncommuting(s4.group(), m));
  CHECK(m.size() <= 10);
  for (Element e : s4.non_central()) {
    if (m.contains(e)) continue;
    bool blocked = false;
    for (Element x : m) blocked |= s4.group().commutes(e, x);
    CHECK(blocked);
  }
  CHECK(test::error_code_of([] { maximal_noncommuting_set(ctx_of("C:6")); }) == ErrorCode::AbelianGroup);
}

TEST_CASE("verify_centralizer_cover") {
  const NcgContext q8 = ctx_of("Q:8");
  CHECK(verify_centralizer_cover(q8, maximal_noncommuting_set(q8)));
  const NcgContext d6 = ctx_of("D:3");
  CHECK(verify_centralizer_cover(d6, maximal_noncommuting_set(d6)));
  CHECK(test::error_code_of([&] { verify_centralizer_cover(q8, set_of(q8.group(), {"x", "y"})); }) ==
        ErrorCode::NotMaximal);
}

TEST_CASE("exchange_extend") {
  const NcgContext q8 = ctx_of("Q:8");
  const FiniteGroup& g = q8.group();
  const ElementSet xy = set_of(g, {"x", "y"});
  CHECK(exchange_extend(q8, xy, by_label(g, "x")) == xy);
  CHECK(exchange_extend(q8, xy, by_label(g, "xy")) == set_of(g, {"x", "y", "xy"}));
  CHECK(exchange_extend(q8, set_of(g, {"x", "y", "xy"}), by_label(g, "x^3")) == set_of(g, {"x^3", "y", "xy"}));

  CHECK(test::error_code_of([&] { exchange_extend(q8, set_of(g, {"x", "x^3"}), by_label(g, "y")); }) ==
        ErrorCode::BadInput);
  CHECK(test::error_code_of([&] { exchange_extend(q8, xy, by_label(g, "x^2")); }) == ErrorCode::BadInput);
  const NcgContext s4 = ctx_of("S:4");
  CHECK(test::error_code_of([&] { exchange_extend(s4, ElementSet(), 1); }) == ErrorCode::NotAcGroup);
}

TEST_CASE("degree_bound_check") {
  CHECK(degree_bound_check(ctx_of("Q:8")));
  CHECK(degree_bound_check(ctx_of("H:3")));
  CHECK(degree_bound_check(ctx_of("D:8")));
}

TEST_CASE("kregular_omega") {
  CHECK(kregular_omega(ctx_of("Q:8")) == std::optional<std::size_t>(3));
  CHECK(kregular_omega(ctx_of("H:3")) == std::optional<std::size_t>(4));
  CHECK_FALSE(kregular_omega(ctx_of("Q:16")).has_value());
  CHECK(test::error_code_of([] { kregular_omega(ctx_of("S:4")); }) == ErrorCode::NotAcGroup);
}

TEST_CASE("cc_quotient_omega_check") {
  CHECK(cc_quotient_omega_check(build_finite("Q:16xC:3")));
  CHECK(cc_quotient_omega_check(build_finite("Q:8xC:5")));
  CHECK(cc_quotient_omega_check(build_finite("Q:32")));
  CHECK(omega_fast(ctx_of("Q:16xC:3")) == 5);
  CHECK(test::error_code_of([] { cc_quotient_omega_check(build_finite("Q:12")); }) == ErrorCode::SpecMismatch);
  CHECK(test::error_code_of([] { cc_quotient_omega_check(build_finite("D:4xC:3")); }) == ErrorCode::SpecMismatch);
  CHECK(test::error_code_of([] { cc_quotient_omega_check(build_finite("Q:8xC:4")); }) == ErrorCode::SpecMismatch);
}
