#include <variant>

#include "doctest.h"
#include "helpers.hpp"
#include "ncg/families.hpp"
#include "ncg/kernels.hpp"

using namespace ncg;
using test::by_label;

namespace {

Element power(const FiniteGroup& g, Element x, std::size_t k) {
  Element r = g.identity();
  for (std::size_t i = 0; i < k; ++i) r = g.mul(r, x);
  return r;
}

void check_group_axioms(const FiniteGroup& g) {
  const std::size_t n = g.order();
  for (Element i = 0; i < n; ++i) {
    CHECK(g.mul(0, i) == i);
    CHECK(g.mul(i, 0) == i);
    CHECK(g.mul(i, g.inverse(i)) == 0);
    Bitset row(n), col(n);
    for (Element j = 0; j < n; ++j) {
      row.set(g.mul(i, j));
      col.set(g.mul(j, i));
    }
    CHECK(row.count() == n);
    CHECK(col.count() == n);
  }
  CHECK_FALSE(kernels::find_nonassociative_serial(g.table(), n).has_value());
}

}  // namespace

TEST_CASE("parse_spec") {
  const GroupSpec q8 = parse_spec("Q:8");
  REQUIRE(q8.terms.size() == 1);
  CHECK(q8.terms[0].family == Family::Q);
  CHECK(q8.order() == 8);

  const GroupSpec p = parse_spec(" q:16 X c : 3 ");
  CHECK(p.render() == "Q:16xC:3");
  CHECK(p.order() == 48);
  CHECK(parse_spec(p.render()).render() == p.render());

  CHECK(test::error_code_of([] { parse_spec("Q:10"); }) == ErrorCode::ParameterError);
  CHECK(test::error_code_of([] { parse_spec("Q:4"); }) == ErrorCode::ParameterError);
  CHECK(test::error_code_of([] { parse_spec("H:4"); }) == ErrorCode::ParameterError);
  CHECK(test::error_code_of([] { parse_spec("C:0"); }) == ErrorCode::ParameterError);

  try {
    parse_spec("Q:8xZ:3");
    FAIL("expected a syntax error");
  } catch (const SpecError& e) {
    CHECK(e.code() == ErrorCode::SyntaxError);
    CHECK(e.position() == 4);
    CHECK(e.expected().size() == 6);
  }
  CHECK(test::error_code_of([] { parse_spec("Q8"); }) == ErrorCode::SyntaxError);
  CHECK(test::error_code_of([] { parse_spec("Q:8x"); }) == ErrorCode::SyntaxError);
  CHECK(test::error_code_of([] { parse_spec(""); }) == ErrorCode::SyntaxError);
}

TEST_CASE("build examples") {
  const FiniteGroup d3 = build_finite("D:3");
  CHECK(d3.order() == 6);
  CHECK(d3.center().size() == 1);

  const FiniteGroup q8 = build_finite("Q:8");
  CHECK(q8.order() == 8);
  CHECK(q8.center() == test::set_of(q8, {"1", "x^2"}));

  const FiniteGroup h3 = build_finite("H:3");
  CHECK(h3.order() == 27);
  CHECK(h3.center().size() == 3);
  CHECK(h3.order() / h3.center().size() == 9);
}

TEST_CASE("build respects the materialization cap") {
  CHECK(std::holds_alternative<LazyPermGroup>(build(parse_spec("S:10"))));
  CHECK(std::holds_alternative<LazyPermGroup>(build(parse_spec("A:500"))));
  CHECK(std::holds_alternative<LazyPermGroup>(build(parse_spec("S:7"))));
  CHECK(std::holds_alternative<FiniteGroup>(build(parse_spec("S:6"))));
  CHECK(test::error_code_of([] { build(parse_spec("C:6000")); }) == ErrorCode::CapExceeded);
  CHECK(test::error_code_of([] { build(parse_spec("S:10xC:2")); }) == ErrorCode::ProductOfLazy);
  CHECK(test::error_code_of([] { build(parse_spec("S:6xS:6")); }) == ErrorCode::CapExceeded);
  CHECK(std::holds_alternative<FiniteGroup>(build(parse_spec("C:6000"), 10000)));
}

TEST_CASE("families satisfy their presentations") {
  for (std::size_t n = 2; n <= 12; ++n) {
    // Q_4n = <x, y | x^2n = 1, y^2 = x^n, y^-1 x y = x^-1>
    const FiniteGroup q = make_quaternion(4 * n);
    const Element x = by_label(q, "x"), y = by_label(q, "y");
    CHECK(power(q, x, 2 * n) == 0);
    CHECK(q.element_order(x) == 2 * n);
    CHECK(power(q, y, 2) == power(q, x, n));
    CHECK(q.mul(q.mul(q.inverse(y), x), y) == q.inverse(x));
    CHECK(q.generated_subgroup(ElementSet({x, y})).group.order() == 4 * n);
  }
  for (std::size_t n = 1; n <= 12; ++n) {
    // D_2n = <a, b | a^2 = b^n = 1, ab = b^-1 a>
    const FiniteGroup d = make_dihedral(n);
    const Element a = by_label(d, "a"), b = n > 1 ? by_label(d, "b") : 0;
    CHECK(power(d, a, 2) == 0);
    CHECK(power(d, b, n) == 0);
    CHECK(d.mul(a, b) == d.mul(d.inverse(b), a));
    CHECK(d.generated_subgroup(ElementSet(std::vector<Element>{std::min(a, b), std::max(a, b)})).group.order() ==
          2 * n);
  }
  for (std::size_t p : {2u, 3u, 5u, 7u}) {
    // (a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab')
    const FiniteGroup h = make_heisenberg(p);
    const Element e100 = by_label(h, "(1,0,0)"), e010 = by_label(h, "(0,1,0)"), e001 = by_label(h, "(0,0,1)");
    CHECK(h.mul(e100, e010) == by_label(h, "(1,1,1)"));
    CHECK(h.mul(e010, e100) == by_label(h, "(1,1,0)"));
    CHECK(h.commutator(e100, e010) == e001);
    CHECK(h.center().size() == p);
    CHECK(h.order() / h.center().size() == p * p);
  }
}

TEST_CASE("built families are groups") {
  for (const char* spec : {"C:1", "C:12", "D:1", "D:2", "D:9", "D:50", "Q:8", "Q:36", "Q:200", "H:2", "H:5", "S:1",
                           "S:2", "S:5", "A:1", "A:3", "A:5", "D:3xQ:8", "H:2xC:5", "S:3xA:4"}) {
    CAPTURE(spec);
    check_group_axioms(build_finite(spec));
  }
}

TEST_CASE("family invariants") {
  CHECK(make_dihedral(1).is_abelian());
  CHECK(make_dihedral(2).is_abelian());
  for (std::size_t n = 3; n <= 20; ++n) CHECK_FALSE(make_dihedral(n).is_abelian());
  for (std::size_t m = 8; m <= 200; m += 4) CHECK(make_quaternion(m).center().size() == 2);
  CHECK(make_symmetric(1).is_abelian());
  CHECK(make_symmetric(2).is_abelian());
  CHECK(make_alternating(2).is_abelian());
  CHECK(make_alternating(3).is_abelian());
  CHECK_FALSE(make_alternating(4).is_abelian());
  const FiniteGroup a5 = make_alternating(5);
  CHECK(a5.order() == 60);
  for (const auto& label : a5.labels()) CHECK(Permutation::from_cycles(label, 5).is_even());
}

TEST_CASE("labels") {
  const FiniteGroup q8 = make_quaternion(8);
  CHECK(q8.labels() == std::vector<std::string>{"1", "x", "x^2", "x^3", "y", "xy", "x^2y", "x^3y"});
  const FiniteGroup d3 = make_dihedral(3);
  CHECK(d3.labels() == std::vector<std::string>{"1", "b", "b^2", "a", "ba", "b^2a"});
  CHECK(make_symmetric(3).labels()[0] == "()");
  const FiniteGroup p = build_finite("C:2xD:3");
  CHECK(p.spec() == "C:2xD:3");
  CHECK(p.labels()[7] == "g,b");
}

TEST_CASE("family_catalog") {
  const auto& cat = family_catalog();
  CHECK(cat.size() == 6);
  bool q = false, h = false;
  for (const auto& f : cat) {
    if (f.tag == 'Q') q = f.constraints == "order ≡ 0 mod 4, ≥ 8";
    if (f.tag == 'H') h = f.constraints == "parameter prime";
  }
  CHECK(q);
  CHECK(h);
}
