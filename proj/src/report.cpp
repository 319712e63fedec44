#include "ncg/report.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include "ncg/chi.hpp"
#include "ncg/matroid.hpp"
#include "ncg/ncg.hpp"

namespace ncg {

namespace {

class PhaseTimer {
public:
  explicit PhaseTimer(std::vector<std::pair<std::string, double>>& sink) : sink_(sink) {}

  template <class F>
  void run(const char* phase, F&& f) {
    const auto start = std::chrono::steady_clock::now();
    f();
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
    sink_.emplace_back(phase, dt.count());
  }

private:
  std::vector<std::pair<std::string, double>>& sink_;
};

LabeledElement labeled(const FiniteGroup& g, Element e) { return {e, g.labels()[e]}; }

std::array<LabeledElement, 3> labeled(const FiniteGroup& g, const ElementTriple& t) {
  return {labeled(g, t[0]), labeled(g, t[1]), labeled(g, t[2])};
}

Outcome<std::size_t> search_omega(const SimpleGraph& g, std::uint64_t budget) {
  try {
    return clique_number(g, budget).size;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Timeout) return Absent::Timeout;
    throw;
  }
}

Outcome<std::size_t> search_alpha(const SimpleGraph& g, std::uint64_t budget) {
  try {
    return independence_number(g, budget);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Timeout) return Absent::Timeout;
    throw;
  }
}

const char* absent_text(Absent a) {
  switch (a) {
    case Absent::NotComputed: return "not computed";
    case Absent::Skipped: return "skipped";
    case Absent::NotApplicable: return "not applicable";
    case Absent::Timeout: return "timeout";
  }
  return "skipped";
}

using Json = nlohmann::ordered_json;

Json element_json(const LabeledElement& e) {
  Json j;
  j["index"] = e.index;
  j["label"] = e.label;
  return j;
}

template <class T, class F>
Json outcome_json(const Outcome<T>& o, F&& render) {
  if (const auto* a = std::get_if<Absent>(&o)) return absent_text(*a);
  return render(std::get<T>(o));
}

template <class T>
Json outcome_json(const Outcome<T>& o) {
  return outcome_json(o, [](const T& v) { return Json(v); });
}

Json triple_json(const Outcome<std::optional<std::array<LabeledElement, 3>>>& o) {
  return outcome_json(o, [](const std::optional<std::array<LabeledElement, 3>>& t) {
    if (!t) return Json(nullptr);
    Json arr = Json::array();
    for (const auto& e : *t) arr.push_back(element_json(e));
    return arr;
  });
}

}  // namespace

AnalysisReport analyze(const FiniteGroup& g, const AnalyzeOptions& options) {
  AnalysisReport r;
  PhaseTimer timer(r.timing);
  r.spec = g.spec();
  r.kind = "materialized";
  r.order = g.order();
  if (!g.associativity_checked()) r.warnings.push_back("SkippedAssociativityCheck");

  std::optional<NcgContext> ctx;
  timer.run("build_ncg", [&] { ctx.emplace(build_ncg(g)); });
  const SimpleGraph& graph = ctx->graph();
  const std::size_t vertices = graph.vertex_count();
  r.center_order = ctx->center().size();
  r.is_abelian = ctx->is_abelian();

  AcResult ac;
  timer.run("ac_cc", [&] {
    ac = is_ac(*ctx);
    r.is_ac = ac.is_ac;
    r.is_cc = is_cc(*ctx);
    r.witnesses.non_abelian_centralizer =
        ac.witness ? std::optional(labeled(g, *ac.witness)) : std::nullopt;
  });

  timer.run("matroid", [&] {
    r.is_matroid.graph_components = is_matroid_graph(graph).is_matroid;
    const auto tr = commutativity_transitive(*ctx);
    r.is_matroid.transitivity = tr.transitive;
    r.witnesses.non_matroid_triple = tr.violation ? std::optional(labeled(g, *tr.violation)) : std::nullopt;
    if (vertices <= kCrossValidateMaxVertices)
      r.is_matroid.exchange_property = has_exchange_property(from_graph(graph)).holds;
    else
      r.is_matroid.exchange_property = Absent::Skipped;
    r.is_matroid.lazy_witness = Absent::NotApplicable;
  });

  timer.run("omega", [&] {
    r.omega.fast_path = ac.is_ac ? Outcome<std::size_t>(omega_fast(*ctx)) : Absent::NotApplicable;
    r.omega.search = vertices <= kSearchMaxVertices ? search_omega(graph, options.node_budget) : Absent::Skipped;
    r.omega.oracle = vertices <= kOracleMaxVertices ? Outcome<std::size_t>(oracle_clique_number(graph)) : Absent::Skipped;
    if (ac.is_ac) {
      auto k = kregular_omega(*ctx);
      r.omega.kregular = k ? Outcome<std::size_t>(*k) : Absent::NotApplicable;
    } else {
      r.omega.kregular = Absent::NotApplicable;
    }
  });

  timer.run("alpha", [&] {
    r.alpha = vertices <= kSearchMaxVertices ? search_alpha(graph, options.node_budget) : Absent::Skipped;
  });

  timer.run("partition", [&] {
    std::vector<std::size_t> sizes;
    for (const auto& comp : components(complement(graph))) sizes.push_back(comp.size());
    r.complement_component_sizes = sizes;
    std::set<std::size_t> orders;
    for (Element a : ctx->centralizer_representatives()) orders.insert(ctx->centralizer_bits(a).count());
    r.distinct_centralizer_orders = std::vector<std::size_t>(orders.begin(), orders.end());
    if (ac.is_ac) {
      r.eq1_holds = eq1_verify(*ctx).holds;
      r.degree_bound_holds = degree_bound_check(*ctx);
    } else {
      r.eq1_holds = Absent::NotApplicable;
      r.degree_bound_holds = Absent::NotApplicable;
    }
    if (ctx->is_abelian()) {
      r.witnesses.maximal_noncommuting_set = Absent::NotApplicable;
    } else {
      std::vector<LabeledElement> set;
      for (Element e : maximal_noncommuting_set(*ctx)) set.push_back(labeled(g, e));
      r.witnesses.maximal_noncommuting_set = std::move(set);
      r.witnesses.maximal_noncommuting_note = ac.is_ac ? "maximal; size equals omega" : "maximal, possibly < omega";
    }
  });

  timer.run("chi", [&] {
    if (g.order() > kReportChiMaxOrder) {
      r.chi = Absent::Skipped;
      return;
    }
    std::vector<ChiRow> rows;
    for (const auto& chi : {chi_abelian(), chi_cyclic()}) {
      const ChiCheck c = chi_group_check(g, chi);
      rows.push_back({chi.name, c.centralizers_have_property, c.graph_is_matroid, c.literal_graph_is_matroid});
    }
    r.chi = std::move(rows);
  });

  r.witnesses.lazy_triple = Absent::NotApplicable;
  if (!options.timing) r.timing.clear();
  return r;
}

AnalysisReport analyze(const LazyPermGroup& g, const AnalyzeOptions& options) {
  AnalysisReport r;
  PhaseTimer timer(r.timing);
  r.spec = g.spec();
  r.kind = "lazy";
  r.order = g.order();
  timer.run("lazy_witness", [&] {
    if (auto t = known_transitivity_witness(g)) {
      const TripleCommutation c = check_triple(g, *t);
      r.witnesses.lazy_triple = std::make_pair(std::array<std::string, 3>{(*t)[0].to_cycles(), (*t)[1].to_cycles(),
                                                                          (*t)[2].to_cycles()},
                                               c);
      r.is_matroid.lazy_witness = !c.violates();
    } else {
      r.is_matroid.lazy_witness = Absent::NotComputed;
      r.witnesses.lazy_triple = Absent::NotComputed;
    }
  });
  if (!options.timing) r.timing.clear();
  return r;
}

Json to_json(const AnalysisReport& r, bool include_timing) {
  Json j;
  j["spec"] = r.spec;
  j["kind"] = r.kind;
  j["order"] = r.order;
  j["center_order"] = outcome_json(r.center_order);
  j["is_abelian"] = outcome_json(r.is_abelian);
  j["is_ac"] = outcome_json(r.is_ac);
  j["is_cc"] = outcome_json(r.is_cc);
  j["is_matroid"] = {
      {"graph_components", outcome_json(r.is_matroid.graph_components)},
      {"transitivity", outcome_json(r.is_matroid.transitivity)},
      {"exchange_property", outcome_json(r.is_matroid.exchange_property)},
      {"lazy_witness", outcome_json(r.is_matroid.lazy_witness)},
  };
  j["omega"] = {
      {"fast_path", outcome_json(r.omega.fast_path)},
      {"search", outcome_json(r.omega.search)},
      {"oracle", outcome_json(r.omega.oracle)},
      {"kregular", outcome_json(r.omega.kregular)},
  };
  j["alpha"] = outcome_json(r.alpha);
  j["complement_component_sizes"] = outcome_json(r.complement_component_sizes);
  j["distinct_centralizer_orders"] = outcome_json(r.distinct_centralizer_orders);
  j["eq1_holds"] = outcome_json(r.eq1_holds);
  j["degree_bound_holds"] = outcome_json(r.degree_bound_holds);

  Json w;
  w["non_matroid_triple"] = triple_json(r.witnesses.non_matroid_triple);
  w["non_abelian_centralizer"] = triple_json(r.witnesses.non_abelian_centralizer);
  w["maximal_noncommuting_set"] =
      outcome_json(r.witnesses.maximal_noncommuting_set, [](const std::vector<LabeledElement>& s) {
        Json arr = Json::array();
        for (const auto& e : s) arr.push_back(element_json(e));
        return arr;
      });
  w["maximal_noncommuting_note"] = r.witnesses.maximal_noncommuting_note;
  w["lazy_triple"] = outcome_json(r.witnesses.lazy_triple, [](const auto& t) {
    Json lt;
    lt["elements"] = t.first;
    lt["xy_commute"] = t.second.xy;
    lt["yz_commute"] = t.second.yz;
    lt["xz_commute"] = t.second.xz;
    lt["violates_transitivity"] = t.second.violates();
    return lt;
  });
  j["witnesses"] = std::move(w);

  j["chi"] = outcome_json(r.chi, [](const std::vector<ChiRow>& rows) {
    Json arr = Json::array();
    for (const auto& row : rows)
      arr.push_back({{"property", row.property},
                     {"centralizers_have_property", row.centralizers_have_property},
                     {"graph_is_matroid", row.graph_is_matroid},
                     {"literal_graph_is_matroid", row.literal_graph_is_matroid}});
    return arr;
  });
  j["warnings"] = r.warnings;
  if (include_timing) {
    Json t = Json::object();
    for (const auto& [phase, seconds] : r.timing) t[phase] = seconds;
    j["timing"] = std::move(t);
  } else {
    j["timing"] = "skipped";
  }
  return j;
}

}  // namespace ncg
