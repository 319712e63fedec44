#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "ncg/families.hpp"
#include "ncg/graph.hpp"
#include "ncg/group.hpp"

namespace ncg {

enum class ClaimStatus { Pass, Fail, Skipped };

std::string_view to_string(ClaimStatus s);

struct ClaimResult {
  int id = 0;
  std::string title;
  ClaimStatus status = ClaimStatus::Skipped;
  std::string detail;
  double seconds = 0;
  /// Extra lines to print under the claim (e.g. the χ agreement table).
  std::vector<std::string> table;
};

struct VerifyOptions {
  std::size_t max_order = kDefaultMaxOrder;
  std::uint64_t seed = 0;
  std::uint64_t node_budget = kDefaultNodeBudget;
  /// Appended to the sweep; used to self-test the harness with corrupt tables.
  std::vector<FiniteGroup> extra_groups;
};

/// Largest order of a sweep group.
inline constexpr std::size_t kSweepMaxOrder = 200;
/// The full sweep must contain at least this many groups.
inline constexpr std::size_t kSweepMinGroups = 60;

/// Specs of the equivalence sweep: single family instances and pairwise
/// products, all of order at most kSweepMaxOrder.
std::vector<std::string> sweep_specs();

inline constexpr int kClaimCount = 12;

/// Runs the acceptance claims. Groups above `max_order` are not built;
/// claims that need one are reported as skipped.
class VerificationSuite {
public:
  explicit VerificationSuite(VerifyOptions options);
  ~VerificationSuite();

  /// Claim ids are 1..kClaimCount.
  ClaimResult run(int id);
  std::vector<ClaimResult> run_all();

  /// Sweep groups actually built under the cap, plus any extra groups.
  const std::vector<FiniteGroup>& sweep();

private:
  struct State;
  std::unique_ptr<State> state_;
};

// Random graph generators shared by the property claims and unit tests.

SimpleGraph random_graph(std::mt19937_64& rng, std::size_t vertices, double edge_probability);

struct RandomMatroidGraph {
  SimpleGraph graph;
  std::size_t parts = 0;  // number of complement cliques (the clique number)
};

/// Complement of a random disjoint union of cliques on 1..max_vertices vertices.
RandomMatroidGraph random_matroid_graph(std::mt19937_64& rng, std::size_t max_vertices);

}  // namespace ncg
