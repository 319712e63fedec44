#include <numeric>

#include "doctest.h"
#include "helpers.hpp"
#include "ncg/families.hpp"
#include "ncg/kernels.hpp"

using namespace ncg;
using test::by_label;
using test::set_of;

TEST_CASE("multiply follows the family laws") {
  const FiniteGroup c6 = make_cyclic(6);
  CHECK(c6.multiply(2, 5) == 1);
  for (Element j = 0; j < 6; ++j) CHECK(c6.multiply(0, j) == j);

  // (1,1)(1,0) = (0,1) in the (i, e) encoding of Q_8: xy . x = y
  const FiniteGroup q8 = make_quaternion(8);
  CHECK(q8.multiply(by_label(q8, "xy"), by_label(q8, "x")) == by_label(q8, "y"));

  CHECK(test::error_code_of([&] { c6.multiply(6, 0); }) == ErrorCode::OutOfRange);
  CHECK(test::error_code_of([&] { c6.centralizer(7); }) == ErrorCode::OutOfRange);
}

TEST_CASE("commutators") {
  const FiniteGroup d8 = make_dihedral(4);
  for (Element x = 0; x < d8.order(); ++x) CHECK(d8.commutator(x, x) == d8.identity());
  CHECK(d8.commutator(by_label(d8, "b"), by_label(d8, "a")) == by_label(d8, "b^2"));

  const FiniteGroup c9 = make_cyclic(9);
  for (Element x = 0; x < 9; ++x)
    for (Element y = 0; y < 9; ++y) CHECK(c9.commutator(x, y) == 0);

  for (const char* spec : {"S:4", "Q:16", "H:3", "D:5xC:2"}) {
    const FiniteGroup g = build_finite(spec);
    for (Element x = 0; x < g.order(); ++x)
      for (Element y = 0; y < g.order(); ++y) CHECK((g.commutator(x, y) == 0) == (g.mul(x, y) == g.mul(y, x)));
  }
}

TEST_CASE("center and centralizers") {
  for (std::size_t l = 2; l <= 10; ++l) {
    const FiniteGroup q = make_quaternion(4 * l);
    CHECK(q.center() == set_of(q, {"1", "x^" + std::to_string(l)}));
  }
  CHECK(make_cyclic(7).center().size() == 7);
  CHECK(make_symmetric(4).center().size() == 1);

  const FiniteGroup q8 = make_quaternion(8);
  CHECK(q8.centralizer(0).size() == 8);
  CHECK(q8.centralizer(by_label(q8, "y")) == set_of(q8, {"1", "x^2", "y", "x^2y"}));

  const FiniteGroup d12 = make_dihedral(6);
  CHECK(d12.centralizer(by_label(d12, "b")) == set_of(d12, {"1", "b", "b^2", "b^3", "b^4", "b^5"}));
}

TEST_CASE("centralizers are subgroups and the center is their intersection") {
  for (const char* spec : {"S:4", "Q:24", "D:7", "H:3", "A:4xC:2", "D:4xQ:8"}) {
    const FiniteGroup g = build_finite(spec);
    Bitset meet(g.order());
    meet.set_all();
    for (Element a = 0; a < g.order(); ++a) {
      const Bitset c = g.centralizer(a).to_bitset(g.order());
      meet &= c;
      CHECK(c.test(a));
      CHECK(g.center_bits().is_subset_of(c));
      for (std::size_t x = c.find_first(); x != Bitset::npos; x = c.find_next(x)) {
        CHECK(c.test(g.inverse(static_cast<Element>(x))));
        for (std::size_t y = c.find_first(); y != Bitset::npos; y = c.find_next(y))
          CHECK(c.test(g.mul(static_cast<Element>(x), static_cast<Element>(y))));
      }
    }
    CHECK(meet == g.center_bits());
  }
}

TEST_CASE("generated subgroups") {
  const FiniteGroup s4 = make_symmetric(4);
  CHECK(s4.generated_subgroup(ElementSet({0})).group.order() == 1);
  CHECK(s4.generated_subgroup(set_of(s4, {"(1 2)", "(1 2 3 4)"})).group.order() == 24);

  const FiniteGroup q16 = make_quaternion(16);
  const Subgroup sx = q16.generated_subgroup(set_of(q16, {"x"}));
  CHECK(sx.group.order() == 8);
  CHECK(sx.group.is_abelian());
  for (Element e = 0; e < sx.group.order(); ++e)
    for (Element f = 0; f < sx.group.order(); ++f)
      CHECK(sx.parent_index[sx.group.mul(e, f)] == q16.mul(sx.parent_index[e], sx.parent_index[f]));

  for (const char* spec : {"S:4", "D:6", "H:3", "Q:8xC:3"}) {
    const FiniteGroup g = build_finite(spec);
    for (Element a = 0; a < g.order(); a += 3)
      for (Element b = 1; b < g.order(); b += 5)
        CHECK(g.order() % g.generated_subgroup(ElementSet({a, b})).group.order() == 0);
  }
  CHECK(test::error_code_of([&] { s4.generated_subgroup(ElementSet()); }) == ErrorCode::BadInput);
}

TEST_CASE("is_abelian") {
  CHECK(make_cyclic(12).is_abelian());
  CHECK_FALSE(make_dihedral(3).is_abelian());
  CHECK_FALSE(build_finite("Q:8xC:3").is_abelian());
}

TEST_CASE("table validation names the first violated law") {
  auto law_of = [](std::size_t n, std::vector<Element> t) {
    try {
      FiniteGroup::from_table(n, std::move(t), {}, "test");
    } catch (const TableError& e) {
      return e.law();
    }
    return std::string("none");
  };
  CHECK(law_of(2, {0, 1, 1, 0}) == "none");
  CHECK(law_of(2, {0, 1, 1, 1}) == "latin_row");
  CHECK(law_of(2, {0, 1, 1, 2}) == "range");
  // Every element is an involution, impossible in a group of order 5.
  CHECK(law_of(5, {0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3, 3, 2, 4, 0, 1, 4, 3, 1, 2, 0}) == "associativity");
}

TEST_CASE("identity elsewhere is re-indexed to 0") {
  // C_3 with the identity stored at index 2.
  const FiniteGroup g = FiniteGroup::from_table(3, {1, 2, 0, 2, 0, 1, 0, 1, 2}, {"a", "b", "e"}, "test");
  CHECK(g.labels()[0] == "e");
  for (Element j = 0; j < 3; ++j) CHECK(g.mul(0, j) == j);
  CHECK(g.is_abelian());
}

TEST_CASE("serial and parallel kernels agree") {
  for (const char* spec : {"S:5", "Q:64", "H:5", "D:9xC:4", "A:5"}) {
    const FiniteGroup g = build_finite(spec);
    const auto t = g.table();
    const std::size_t n = g.order();
    CHECK(kernels::commute_rows_serial(t, n) == kernels::commute_rows_parallel(t, n));
    CHECK(kernels::commutator_rows_serial(t, g.inverses(), n) == kernels::commutator_rows_parallel(t, g.inverses(), n));
    CHECK(kernels::element_orders_serial(t, n) == kernels::element_orders_parallel(t, n));
    CHECK_FALSE(kernels::find_nonassociative_serial(t, n).has_value());
    CHECK_FALSE(kernels::find_nonassociative_parallel(t, n).has_value());
  }
  // First non-associative triple in index order is the same for both.
  const std::vector<Element> loop{0, 1, 2, 3, 4, 1, 2, 0, 4, 3, 2, 4, 3, 1, 0, 3, 0, 4, 2, 1, 4, 3, 1, 0, 2};
  const auto s = kernels::find_nonassociative_serial(loop, 5);
  REQUIRE(s.has_value());
  CHECK(s == kernels::find_nonassociative_parallel(loop, 5));
}
