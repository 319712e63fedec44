#include "ncg/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

#include "ncg/chi.hpp"
#include "ncg/matroid.hpp"
#include "ncg/ncg.hpp"

namespace ncg {

std::string_view to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Pass: return "PASS";
    case ClaimStatus::Fail: return "FAIL";
    case ClaimStatus::Skipped: return "SKIP";
  }
  return "?";
}

std::vector<std::string> sweep_specs() {
  std::vector<std::string> specs;
  for (int m = 1; m <= 10; ++m) specs.push_back("C:" + std::to_string(m));
  for (int n = 1; n <= 20; ++n) specs.push_back("D:" + std::to_string(n));
  for (int n : {24, 30, 50, 100}) specs.push_back("D:" + std::to_string(n));
  for (int m = 8; m <= 48; m += 4) specs.push_back("Q:" + std::to_string(m));
  for (int m : {64, 96, 128, 200}) specs.push_back("Q:" + std::to_string(m));
  for (int n = 1; n <= 5; ++n) specs.push_back("S:" + std::to_string(n));
  for (int n = 1; n <= 5; ++n) specs.push_back("A:" + std::to_string(n));
  for (int p : {2, 3, 5}) specs.push_back("H:" + std::to_string(p));

  const std::vector<std::string> factors{"C:2", "C:3", "C:4", "C:5", "D:3", "D:4", "D:5",
                                         "Q:8", "Q:12", "H:2", "H:3", "S:3", "S:4", "A:4"};
  for (std::size_t i = 0; i < factors.size(); ++i)
    for (std::size_t j = i; j < factors.size(); ++j) {
      GroupSpec spec = parse_spec(factors[i] + "x" + factors[j]);
      if (spec.order() <= kSweepMaxOrder) specs.push_back(spec.render());
    }
  return specs;
}

SimpleGraph random_graph(std::mt19937_64& rng, std::size_t vertices, double edge_probability) {
  SimpleGraph g(vertices);
  std::bernoulli_distribution edge(edge_probability);
  for (Vertex u = 0; u < vertices; ++u)
    for (Vertex v = u + 1; v < vertices; ++v)
      if (edge(rng)) g.add_edge(u, v);
  return g;
}

RandomMatroidGraph random_matroid_graph(std::mt19937_64& rng, std::size_t max_vertices) {
  const std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_vertices)(rng);
  const std::size_t k = std::uniform_int_distribution<std::size_t>(1, n)(rng);
  std::vector<std::size_t> part(n);
  for (auto& p : part) p = std::uniform_int_distribution<std::size_t>(0, k - 1)(rng);
  std::set<std::size_t> used(part.begin(), part.end());
  RandomMatroidGraph out{SimpleGraph(n), used.size()};
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (part[u] != part[v]) out.graph.add_edge(u, v);
  return out;
}

// ------------------------------------------------------------------- suite

namespace {

using Clock = std::chrono::steady_clock;

/// Collects failed checks for a claim.
class Checks {
public:
  void expect(bool ok, const std::string& what) {
    ++total_;
    if (!ok && failures_.size() < 8) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  bool ok() const { return failed_ == 0; }
  std::size_t total() const { return total_; }
  std::string summary() const {
    std::string s = std::to_string(failed_) + " of " + std::to_string(total_) + " checks failed";
    for (const auto& f : failures_) s += "; " + f;
    return s;
  }

private:
  std::size_t total_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> failures_;
};

std::optional<Element> find_label(const FiniteGroup& g, const std::string& label) {
  const auto& labels = g.labels();
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) return std::nullopt;
  return static_cast<Element>(it - labels.begin());
}

std::set<std::vector<Element>> component_element_sets(const NcgContext& ctx) {
  std::set<std::vector<Element>> out;
  for (const auto& comp : components(complement(ctx.graph()))) {
    std::vector<Element> elems;
    for (Vertex v : comp) elems.push_back(ctx.element_of(v));
    std::sort(elems.begin(), elems.end());
    out.insert(std::move(elems));
  }
  return out;
}

/// Blocks of the dihedral complement read off the (i, e) = b^i a^e encoding:
/// the non-central rotations, then reflections b^i a paired with b^(i+n/2) a
/// for even n and alone for odd n.
std::set<std::vector<Element>> dihedral_blocks(std::size_t n) {
  std::set<std::vector<Element>> blocks;
  std::vector<Element> rotations;
  for (std::size_t i = 1; i < n; ++i)
    if (!(n % 2 == 0 && i == n / 2)) rotations.push_back(static_cast<Element>(i));
  if (!rotations.empty()) blocks.insert(rotations);
  if (n % 2 == 1) {
    for (std::size_t i = 0; i < n; ++i) blocks.insert({static_cast<Element>(n + i)});
  } else {
    for (std::size_t i = 0; i < n / 2; ++i)
      blocks.insert({static_cast<Element>(n + i), static_cast<Element>(n + i + n / 2)});
  }
  return blocks;
}

}  // namespace

struct VerificationSuite::State {
  VerifyOptions options;
  bool sweep_built = false;
  std::vector<FiniteGroup> sweep;
  std::vector<NcgContext> contexts;
  std::size_t skipped_for_cap = 0;

  bool fits(std::uint64_t order) const { return order <= options.max_order; }
  bool fits(const std::string& spec) const { return fits(parse_spec(spec).order()); }

  void build_sweep() {
    if (sweep_built) return;
    const std::size_t limit = std::min(kSweepMaxOrder, options.max_order);
    for (const auto& text : sweep_specs()) {
      GroupSpec spec = parse_spec(text);
      if (spec.order() > limit) {
        ++skipped_for_cap;
        continue;
      }
      sweep.push_back(build_finite(spec, options.max_order));
    }
    for (const auto& g : options.extra_groups) sweep.push_back(g);
    for (const auto& g : sweep) contexts.push_back(build_ncg(g));
    sweep_built = true;
  }
};

VerificationSuite::VerificationSuite(VerifyOptions options) : state_(std::make_unique<State>()) {
  state_->options = std::move(options);
}

VerificationSuite::~VerificationSuite() = default;

const std::vector<FiniteGroup>& VerificationSuite::sweep() {
  state_->build_sweep();
  return state_->sweep;
}

std::vector<ClaimResult> VerificationSuite::run_all() {
  std::vector<ClaimResult> out;
  for (int id = 1; id <= kClaimCount; ++id) out.push_back(run(id));
  return out;
}

ClaimResult VerificationSuite::run(int id) {
  State& s = *state_;
  ClaimResult r;
  r.id = id;
  Checks checks;
  double time_limit = 0;  // seconds; 0 = none
  std::vector<std::string> needs;  // specs that must fit under the cap

  // Each claim body fills `checks`; returning false means "skipped".
  std::function<bool()> body;
  switch (id) {
    case 1:
      r.title = "quaternion clique numbers: omega(Q_4l) = l+1, l = 2..10";
      time_limit = 5;
      needs = {"Q:40"};
      body = [&] {
        for (std::size_t l = 2; l <= 10; ++l) {
          const std::string spec = "Q:" + std::to_string(4 * l);
          NcgContext ctx = build_ncg(build_finite(spec, s.options.max_order));
          checks.expect(omega_fast(ctx) == l + 1, spec + " omega_fast");
          if (l <= 6) checks.expect(clique_number(ctx.graph(), s.options.node_budget).size == l + 1, spec + " search");
          if (l <= 4) checks.expect(oracle_clique_number(ctx.graph()) == l + 1, spec + " oracle");
        }
        return true;
      };
      break;

    case 2:
      r.title = "CC groups: omega(Q:2^n x C:m) = 2^(n-2)+1 and Q:2^n is CC";
      needs = {"Q:32xC:3"};
      body = [&] {
        const std::vector<std::pair<int, int>> cases{{3, 1}, {3, 5}, {4, 1}, {4, 3}, {5, 1}, {5, 3}};
        for (auto [n, m] : cases) {
          std::string spec = "Q:" + std::to_string(1 << n);
          if (m != 1) spec += "xC:" + std::to_string(m);
          const FiniteGroup g = build_finite(spec, s.options.max_order);
          NcgContext ctx = build_ncg(g);
          const std::size_t expected = (std::size_t{1} << (n - 2)) + 1;
          checks.expect(omega_fast(ctx) == expected, spec + " omega_fast");
          checks.expect(cc_quotient_omega_check(g), spec + " cc_quotient_omega_check");
          checks.expect(is_cc(ctx), spec + " is_cc");
        }
        for (int n : {3, 4, 5}) {
          const std::string spec = "Q:" + std::to_string(1 << n);
          checks.expect(is_cc(build_ncg(build_finite(spec, s.options.max_order))), spec + " is_cc");
        }
        return true;
      };
      break;

    case 3:
      r.title = "p-groups: omega(H:p) = p+1; omega(D:8) = omega(Q:16) = 5";
      needs = {"H:5"};
      body = [&] {
        for (std::size_t p : {2, 3, 5}) {
          const std::string spec = "H:" + std::to_string(p);
          NcgContext ctx = build_ncg(build_finite(spec, s.options.max_order));
          checks.expect(ctx.group().order() / ctx.center().size() == p * p, spec + " central quotient p^2");
          checks.expect(omega_fast(ctx) == p + 1, spec + " omega_fast");
        }
        for (const char* spec : {"D:8", "Q:16"}) {
          NcgContext ctx = build_ncg(build_finite(spec, s.options.max_order));
          const auto& g = ctx.group();
          checks.expect(g.order() / ctx.center().size() == 8, std::string(spec) + " central quotient 8");
          // An element of order |G|/2 generates an abelian maximal subgroup.
          const auto& orders = g.element_orders();
          checks.expect(std::find(orders.begin(), orders.end(), g.order() / 2) != orders.end(),
                        std::string(spec) + " abelian maximal subgroup");
          checks.expect(omega_fast(ctx) == 5, std::string(spec) + " omega_fast");
          checks.expect(clique_number(ctx.graph(), s.options.node_budget).size == 5, std::string(spec) + " search");
        }
        r.table.push_back("case (ii) (central quotient p^3, no abelian maximal subgroup): not exercised by built-ins");
        return true;
      };
      break;

    case 4:
      r.title = "equivalence sweep: is_ac = is_matroid_graph = commutativity_transitive";
      time_limit = 60;
      body = [&] {
        s.build_sweep();
        std::size_t cross = 0;
        for (const auto& ctx : s.contexts) {
          const std::string& spec = ctx.group().spec();
          const bool ac = is_ac(ctx).is_ac;
          const bool matroid = is_matroid_graph(ctx.graph()).is_matroid;
          const bool transitive = commutativity_transitive(ctx).transitive;
          checks.expect(ac == matroid && matroid == transitive,
                        spec + " disagrees (ac=" + std::to_string(ac) + ", matroid=" + std::to_string(matroid) +
                            ", transitive=" + std::to_string(transitive) + ")");
          if (ctx.graph().vertex_count() <= kCrossValidateMaxVertices) {
            ++cross;
            try {
              checks.expect(cross_validate_matroid(ctx.graph()) == ac, spec + " cross_validate_matroid");
            } catch (const Error& e) {
              checks.expect(false, spec + " " + e.what());
            }
          }
        }
        const bool full = s.options.max_order >= kSweepMaxOrder;
        if (full) checks.expect(s.sweep.size() >= kSweepMinGroups, "sweep has fewer than 60 groups");
        r.detail = std::to_string(s.sweep.size()) + " groups, " + std::to_string(cross) + " cross-validated" +
                   (full ? "" : ", reduced sweep (" + std::to_string(s.skipped_for_cap) + " above cap)");
        return true;
      };
      break;

    case 5:
      r.title = "counting identity |G| = (1-omega)|Z| + sum |C(a_i)| on every AC group";
      needs = {"Q:8"};
      body = [&] {
        s.build_sweep();
        std::size_t ac_groups = 0;
        for (const auto& ctx : s.contexts) {
          if (!is_ac(ctx).is_ac) continue;
          ++ac_groups;
          const Eq1Result e = eq1_verify(ctx);
          checks.expect(e.holds, ctx.group().spec() + ": " + std::to_string(e.lhs) + " != " + std::to_string(e.rhs));
        }
        NcgContext q8 = build_ncg(build_finite("Q:8", s.options.max_order));
        const Eq1Result e = eq1_verify(q8);
        std::int64_t sum = 0;
        for (Element a : q8.centralizer_representatives()) sum += static_cast<std::int64_t>(q8.centralizer_bits(a).count());
        checks.expect(e.lhs == 8 && e.rhs == 8 && omega_fast(q8) == 3 && q8.center().size() == 2 && sum == 12,
                      "Q_8 instance 8 = (1-3)*2 + 12");
        r.detail = std::to_string(ac_groups) + " AC groups";
        return true;
      };
      break;

    case 6:
      r.title = "non-matroid witnesses in S_4, S_5 and A_10";
      time_limit = 1;
      needs = {"S:5"};
      body = [&] {
        for (const char* spec : {"S:4", "S:5"}) {
          NcgContext ctx = build_ncg(build_finite(spec, s.options.max_order));
          const std::string name(spec);
          checks.expect(!is_ac(ctx).is_ac, name + " is_ac");
          checks.expect(!is_matroid_graph(ctx.graph()).is_matroid, name + " is_matroid_graph");
          checks.expect(!commutativity_transitive(ctx).transitive, name + " commutativity_transitive");
          checks.expect(!has_exchange_property(from_graph(ctx.graph())).holds, name + " exchange property");
          if (name == "S:4") {
            const FiniteGroup& g = ctx.group();
            auto a = find_label(g, "(3 4)"), b = find_label(g, "(1 2)(3 4)"), c = find_label(g, "(1 3)(2 4)");
            checks.expect(a && b && c, "S:4 witness elements present");
            if (a && b && c) {
              checks.expect(g.commutator(*a, *b) == 0, "[(3 4), (1 2)(3 4)] = 1");
              checks.expect(g.commutator(*b, *c) == 0, "[(1 2)(3 4), (1 3)(2 4)] = 1");
              checks.expect(g.commutator(*a, *c) != 0, "[(3 4), (1 3)(2 4)] != 1");
            }
          }
        }
        const LazyPermGroup a10(10, PermKind::Alternating);
        const PermTriple t{Permutation::from_cycles("(1 2)(3 4)", 10), Permutation::from_cycles("(5 6)(7 8)", 10),
                           Permutation::from_cycles("(2 3)(9 10)", 10)};
        const TripleCommutation c = check_triple(a10, t);
        checks.expect(c.xy && c.yz && !c.xz, "A_10 triple commutation pattern");
        return true;
      };
      break;

    case 7:
      r.title = "dihedral matroids: D:n for n = 3..16 with the expected complement blocks";
      needs = {"D:16"};
      body = [&] {
        for (std::size_t n = 3; n <= 16; ++n) {
          const std::string spec = "D:" + std::to_string(n);
          NcgContext ctx = build_ncg(build_finite(spec, s.options.max_order));
          checks.expect(is_matroid_graph(ctx.graph()).is_matroid, spec + " is_matroid_graph");
          checks.expect(is_ac(ctx).is_ac, spec + " is_ac");
          checks.expect(component_element_sets(ctx) == dihedral_blocks(n), spec + " complement blocks");
        }
        return true;
      };
      break;

    case 8:
      r.title = "k-regular formula: kregular_omega(Q_8) = 3, kregular_omega(H:3) = 4";
      needs = {"H:3"};
      body = [&] {
        for (auto [spec, expected] : {std::pair<const char*, std::size_t>{"Q:8", 3}, {"H:3", 4}}) {
          NcgContext ctx = build_ncg(build_finite(spec, s.options.max_order));
          const auto k = kregular_omega(ctx);
          checks.expect(k && *k == expected, std::string(spec) + " kregular_omega");
          checks.expect(k && *k == omega_fast(ctx), std::string(spec) + " kregular_omega = omega_fast");
        }
        return true;
      };
      break;

    case 9:
      r.title = "random matroid graphs: clique extension, degree bound, exchange property";
      time_limit = 30;
      body = [&] {
        std::mt19937_64 rng(s.options.seed);
        for (int trial = 0; trial < 200; ++trial) {
          RandomMatroidGraph m = random_matroid_graph(rng, 40);
          const std::size_t omega = clique_number(m.graph, s.options.node_budget).size;
          checks.expect(omega == m.parts, "matroid graph trial " + std::to_string(trial) + " omega = parts");
          for (Vertex v = 0; v < m.graph.vertex_count(); ++v) {
            const std::vector<Vertex> seed{v};
            const auto clique = extend_clique(m.graph, seed);
            checks.expect(clique.size() == omega && is_clique(m.graph, clique),
                          "extend_clique trial " + std::to_string(trial) + " vertex " + std::to_string(v));
            checks.expect(m.graph.degree(v) + 1 >= omega,
                          "degree bound trial " + std::to_string(trial) + " vertex " + std::to_string(v));
          }
        }
        std::size_t matroids = 0;
        for (int trial = 0; trial < 500; ++trial) {
          SimpleGraph g;
          if (trial % 2 == 0) {
            const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 12)(rng);
            g = random_graph(rng, n, std::uniform_real_distribution<double>(0.05, 0.95)(rng));
          } else {
            g = random_matroid_graph(rng, 12).graph;
            // Flip up to two edges so both verdicts occur.
            const std::size_t flips = std::uniform_int_distribution<std::size_t>(0, 2)(rng);
            for (std::size_t f = 0; f < flips && g.vertex_count() >= 2; ++f) {
              std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(g.vertex_count() - 1));
              const Vertex u = pick(rng), v = pick(rng);
              if (u == v) continue;
              g.has_edge(u, v) ? g.remove_edge(u, v) : g.add_edge(u, v);
            }
          }
          const bool by_components = is_matroid_graph(g).is_matroid;
          matroids += by_components;
          checks.expect(by_components == has_exchange_property(from_graph(g)).holds,
                        "exchange vs components trial " + std::to_string(trial));
        }
        r.detail = "seed " + std::to_string(s.options.seed) + ", " + std::to_string(matroids) +
                   " of 500 small graphs are matroids";
        return true;
      };
      break;

    case 10:
      r.title = "centralizer cover: greedy maximal sets cover G minimally (AC groups)";
      body = [&] {
        s.build_sweep();
        std::size_t ac_groups = 0;
        for (const auto& ctx : s.contexts) {
          if (!is_ac(ctx).is_ac || ctx.is_abelian()) continue;
          ++ac_groups;
          const ElementSet set = maximal_noncommuting_set(ctx);
          checks.expect(verify_centralizer_cover(ctx, set), ctx.group().spec() + " cover");
          checks.expect(set.size() == omega_fast(ctx), ctx.group().spec() + " |maximal set| = omega");
        }
        r.detail = std::to_string(ac_groups) + " non-abelian AC groups";
        return true;
      };
      break;

    case 11:
      r.title = "clique search equals the exhaustive oracle on graphs with <= 24 vertices";
      body = [&] {
        s.build_sweep();
        std::size_t graphs = 0;
        auto compare = [&](const SimpleGraph& g, const std::string& name) {
          ++graphs;
          checks.expect(clique_number(g, s.options.node_budget).size == oracle_clique_number(g), name);
        };
        for (const auto& ctx : s.contexts)
          if (ctx.graph().vertex_count() <= kOracleMaxVertices) compare(ctx.graph(), ctx.group().spec());
        std::mt19937_64 rng(s.options.seed + 11);
        for (int trial = 0; trial < 60; ++trial) {
          const std::size_t n = std::uniform_int_distribution<std::size_t>(1, kOracleMaxVertices)(rng);
          compare(random_graph(rng, n, std::uniform_real_distribution<double>(0.1, 0.9)(rng)),
                  "random graph " + std::to_string(trial));
        }
        for (int trial = 0; trial < 40; ++trial)
          compare(random_matroid_graph(rng, kOracleMaxVertices).graph, "random matroid graph " + std::to_string(trial));
        r.detail = std::to_string(graphs) + " graphs";
        return true;
      };
      break;

    case 12:
      r.title = "chi framework: chi_graph(abelian) equals the non-commuting graph";
      body = [&] {
        s.build_sweep();
        std::size_t agree_abelian = 0, agree_cyclic = 0, rows = 0;
        r.table.push_back("group | chi | centralizers have chi | complemented graph matroid | literal graph matroid");
        for (const auto& ctx : s.contexts) {
          const FiniteGroup& g = ctx.group();
          checks.expect(chi_graph(g, chi_abelian()) == ctx.graph(), g.spec() + " chi_graph(abelian)");
          for (const auto& chi : {chi_abelian(), chi_cyclic()}) {
            const ChiCheck c = chi_group_check(g, chi);
            const bool agree = c.centralizers_have_property == c.graph_is_matroid;
            (chi.name == "abelian" ? agree_abelian : agree_cyclic) += agree;
            r.table.push_back(g.spec() + " | " + chi.name + " | " + (c.centralizers_have_property ? "yes" : "no") +
                              " | " + (c.graph_is_matroid ? "yes" : "no") + " | " +
                              (c.literal_graph_is_matroid ? "yes" : "no") + (agree ? "" : "  (disagree)"));
          }
          ++rows;
        }
        r.detail = "agreement (recorded, not asserted): abelian " + std::to_string(agree_abelian) + "/" +
                   std::to_string(rows) + ", cyclic " + std::to_string(agree_cyclic) + "/" + std::to_string(rows);
        return true;
      };
      break;

    default:
      r.title = "unknown claim";
      r.status = ClaimStatus::Fail;
      r.detail = "claim ids run from 1 to " + std::to_string(kClaimCount);
      return r;
  }

  for (const auto& spec : needs) {
    if (!s.fits(spec)) {
      r.status = ClaimStatus::Skipped;
      r.detail = spec + " is above the cap " + std::to_string(s.options.max_order);
      return r;
    }
  }

  const auto start = Clock::now();
  try {
    body();
  } catch (const std::exception& e) {
    checks.expect(false, std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  if (time_limit > 0 && r.seconds >= time_limit)
    checks.expect(false, "runtime " + std::to_string(r.seconds) + " s exceeds " + std::to_string(time_limit) + " s");
  r.status = checks.ok() ? ClaimStatus::Pass : ClaimStatus::Fail;
  std::string counts = std::to_string(checks.total()) + " checks";
  if (!checks.ok()) counts = checks.summary();
  r.detail = r.detail.empty() ? counts : r.detail + "; " + counts;
  return r;
}

}  // namespace ncg
