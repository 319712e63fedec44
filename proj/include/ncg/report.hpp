#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"
#include "ncg/graph.hpp"
#include "ncg/group.hpp"
#include "ncg/perm.hpp"

namespace ncg {

/// Why a report field carries no value.
enum class Absent {
  NotComputed,    ///< lazy groups: only witness checks run
  Skipped,        ///< analysis not run (size limits)
  NotApplicable,  ///< hypothesis fails (e.g. non-AC group for the fast path)
  Timeout,        ///< search exceeded its node budget
};

template <class T>
using Outcome = std::variant<Absent, T>;

struct LabeledElement {
  Element index;
  std::string label;
};

struct ChiRow {
  std::string property;
  bool centralizers_have_property;
  bool graph_is_matroid;
  bool literal_graph_is_matroid;
};

struct AnalysisReport {
  std::string spec;
  std::string kind;  // "materialized" or "lazy"
  std::uint64_t order = 0;
  Outcome<std::size_t> center_order;
  Outcome<bool> is_abelian;
  Outcome<bool> is_ac;
  Outcome<bool> is_cc;

  struct {
    Outcome<bool> graph_components;
    Outcome<bool> transitivity;
    Outcome<bool> exchange_property;
    Outcome<bool> lazy_witness;
  } is_matroid;

  struct {
    Outcome<std::size_t> fast_path;
    Outcome<std::size_t> search;
    Outcome<std::size_t> oracle;
    Outcome<std::size_t> kregular;
  } omega;

  Outcome<std::size_t> alpha;
  Outcome<std::vector<std::size_t>> complement_component_sizes;
  Outcome<std::vector<std::size_t>> distinct_centralizer_orders;
  Outcome<bool> eq1_holds;
  Outcome<bool> degree_bound_holds;

  struct {
    /// (x, y, z): [x,y] = 1, [y,z] = 1, [x,z] != 1. nullopt when none exists.
    Outcome<std::optional<std::array<LabeledElement, 3>>> non_matroid_triple;
    /// (a, x, y): x, y in C(a) do not commute.
    Outcome<std::optional<std::array<LabeledElement, 3>>> non_abelian_centralizer;
    Outcome<std::vector<LabeledElement>> maximal_noncommuting_set;
    std::string maximal_noncommuting_note;
    /// Lazy groups: cycles of the checked triple and its commutation verdicts.
    Outcome<std::pair<std::array<std::string, 3>, TripleCommutation>> lazy_triple;
  } witnesses;

  Outcome<std::vector<ChiRow>> chi;
  std::vector<std::string> warnings;
  std::vector<std::pair<std::string, double>> timing;  // seconds per phase
};

struct AnalyzeOptions {
  std::uint64_t node_budget = kDefaultNodeBudget;
  /// Serialize measured phase timings; off keeps reports byte-reproducible.
  bool timing = false;
};

/// Exact clique search on non-AC graphs only below this many vertices.
inline constexpr std::size_t kSearchMaxVertices = 2000;
/// χ-graph verdicts only for groups up to this order.
inline constexpr std::size_t kReportChiMaxOrder = 200;

AnalysisReport analyze(const FiniteGroup& g, const AnalyzeOptions& options = {});
AnalysisReport analyze(const LazyPermGroup& g, const AnalyzeOptions& options = {});

nlohmann::ordered_json to_json(const AnalysisReport& r, bool include_timing = false);

}  // namespace ncg
