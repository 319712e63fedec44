#include "doctest.h"
#include "helpers.hpp"
#include "ncg/families.hpp"
#include "ncg/report.hpp"

using namespace ncg;
using Json = nlohmann::ordered_json;

namespace {

Json report_of(const char* spec, bool timing = false) {
  const BuiltGroup g = build(parse_spec(spec));
  return std::visit([&](const auto& group) { return to_json(analyze(group, {kDefaultNodeBudget, timing}), timing); }, g);
}

}  // namespace

TEST_CASE("report fields appear in a fixed order") {
  const Json r = report_of("Q:8");
  std::vector<std::string> keys;
  for (const auto& [k, v] : r.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"spec", "kind", "order", "center_order", "is_abelian", "is_ac", "is_cc",
                                         "is_matroid", "omega", "alpha", "complement_component_sizes",
                                         "distinct_centralizer_orders", "eq1_holds", "degree_bound_holds",
                                         "witnesses", "chi", "warnings", "timing"});
}

TEST_CASE("AC report") {
  const Json r = report_of("Q:8");
  CHECK(r["spec"] == "Q:8");
  CHECK(r["order"] == 8);
  CHECK(r["center_order"] == 2);
  CHECK(r["is_ac"] == true);
  CHECK(r["is_cc"] == true);
  CHECK(r["is_matroid"]["graph_components"] == true);
  CHECK(r["is_matroid"]["transitivity"] == true);
  CHECK(r["is_matroid"]["exchange_property"] == true);
  for (const char* method : {"fast_path", "search", "oracle", "kregular"}) CHECK(r["omega"][method] == 3);
  CHECK(r["alpha"] == 2);
  CHECK(r["complement_component_sizes"] == Json::array({2, 2, 2}));
  CHECK(r["distinct_centralizer_orders"] == Json::array({4}));
  CHECK(r["eq1_holds"] == true);
  CHECK(r["degree_bound_holds"] == true);
  CHECK(r["witnesses"]["non_matroid_triple"].is_null());
  CHECK(r["witnesses"]["maximal_noncommuting_set"].size() == 3);
  CHECK(r["timing"] == "skipped");
}

TEST_CASE("non-AC report") {
  const Json r = report_of("S:4");
  CHECK(r["is_ac"] == false);
  CHECK(r["is_matroid"]["graph_components"] == false);
  CHECK(r["is_matroid"]["transitivity"] == false);
  CHECK(r["is_matroid"]["exchange_property"] == false);
  CHECK(r["omega"]["fast_path"] == "not applicable");
  CHECK(r["omega"]["search"] == 10);
  CHECK(r["omega"]["oracle"] == 10);
  CHECK(r["eq1_holds"] == "not applicable");
  CHECK(r["witnesses"]["non_matroid_triple"].size() == 3);
  CHECK(r["witnesses"]["non_abelian_centralizer"].size() == 3);
  CHECK(r["witnesses"]["maximal_noncommuting_note"] == "maximal, possibly < omega");
}

TEST_CASE("abelian report") {
  const Json r = report_of("C:5");
  CHECK(r["is_abelian"] == true);
  CHECK(r["omega"]["search"] == 0);
  CHECK(r["witnesses"]["maximal_noncommuting_set"] == "not applicable");
}

TEST_CASE("lazy report marks everything it cannot compute") {
  const Json r = report_of("A:10");
  CHECK(r["kind"] == "lazy");
  CHECK(r["order"] == 1814400);
  CHECK(r["is_ac"] == "not computed");
  CHECK(r["omega"]["search"] == "not computed");
  CHECK(r["is_matroid"]["lazy_witness"] == false);
  CHECK(r["witnesses"]["lazy_triple"]["violates_transitivity"] == true);
  CHECK(r["witnesses"]["lazy_triple"]["elements"][2] == "(2 3)(9 10)");
}

TEST_CASE("large graphs skip the expensive checks") {
  const Json r = report_of("Q:400");
  CHECK(r["omega"]["fast_path"] == 101);
  CHECK(r["omega"]["oracle"] == "skipped");
  CHECK(r["is_matroid"]["exchange_property"] == "skipped");
  CHECK(r["chi"] == "skipped");
}

TEST_CASE("reports are byte-reproducible without timing") {
  for (const char* spec : {"S:4", "H:3", "D:7xC:2", "S:12"}) CHECK(report_of(spec).dump() == report_of(spec).dump());
  const Json t = report_of("D:5", true);
  CHECK(t["timing"].is_object());
  CHECK(t["timing"].contains("build_ncg"));
}
