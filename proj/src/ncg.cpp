#include "ncg/ncg.hpp"

#include <algorithm>
#include <unordered_map>

#include "ncg/families.hpp"

namespace ncg {

namespace {

std::size_t hash_bits(const Bitset& b) {
  std::size_t h = 1469598103934665603ull;
  for (auto w : b.words()) h = (h ^ w) * 1099511628211ull;
  return h;
}

void require_ac(const NcgContext& ctx, const char* op) {
  if (!is_ac(ctx).is_ac) fail(ErrorCode::NotAcGroup, std::string(op) + " requires an AC-group; " + ctx.group().spec() + " is not one");
}

/// Non-central elements as a membership set.
Bitset non_central_bits(const NcgContext& ctx) {
  Bitset b = ctx.group().center_bits();
  b.flip_all();
  return b;
}

}  // namespace

std::optional<Vertex> NcgContext::vertex_of(Element e) const {
  if (e >= vertex_of_.size() || vertex_of_[e] < 0) return std::nullopt;
  return static_cast<Vertex>(vertex_of_[e]);
}

NcgContext build_ncg(const FiniteGroup& g) {
  NcgContext ctx(g);
  const std::size_t n = g.order();
  ctx.center_ = g.center();
  const Bitset& central = g.center_bits();
  ctx.vertex_of_.assign(n, -1);
  for (Element e = 0; e < n; ++e) {
    if (central.test(e)) continue;
    ctx.vertex_of_[e] = static_cast<std::int64_t>(ctx.non_central_.size());
    ctx.non_central_.push_back(e);
  }

  const auto& commutator = g.commutator_rows();
  const std::size_t m = ctx.non_central_.size();
  SimpleGraph graph(m);
  for (Vertex u = 0; u < m; ++u) {
    const Bitset& row = commutator[ctx.non_central_[u]];
    for (Vertex v = u + 1; v < m; ++v)
      if (!row.test(ctx.non_central_[v])) graph.add_edge(u, v);
  }
  graph.set_tags(ctx.non_central_);
  ctx.graph_ = std::move(graph);

  const auto& commute = g.commute_rows();
  std::unordered_multimap<std::size_t, std::size_t> seen;
  ctx.class_of_vertex_.resize(m);
  for (Vertex v = 0; v < m; ++v) {
    const Bitset& c = commute[ctx.non_central_[v]];
    const std::size_t h = hash_bits(c);
    std::size_t cls = ctx.representatives_.size();
    auto [lo, hi] = seen.equal_range(h);
    for (auto it = lo; it != hi; ++it)
      if (commute[ctx.representatives_[it->second]] == c) {
        cls = it->second;
        break;
      }
    if (cls == ctx.representatives_.size()) {
      ctx.representatives_.push_back(ctx.non_central_[v]);
      seen.emplace(h, cls);
    }
    ctx.class_of_vertex_[v] = cls;
  }
  return ctx;
}

AcResult is_ac(const NcgContext& ctx) {
  const auto& commute = ctx.group().commute_rows();
  for (Element a : ctx.centralizer_representatives()) {
    const Bitset& c = commute[a];
    for (std::size_t x = c.find_first(); x != Bitset::npos; x = c.find_next(x)) {
      if (c.is_subset_of(commute[x])) continue;
      Bitset bad = c;
      bad.subtract(commute[x]);
      return {false, ElementTriple{a, static_cast<Element>(x), static_cast<Element>(bad.find_first())}};
    }
  }
  return {};
}

bool is_cc(const NcgContext& ctx) {
  const auto& commute = ctx.group().commute_rows();
  const auto& orders = ctx.group().element_orders();
  for (Element a : ctx.centralizer_representatives()) {
    const Bitset& c = commute[a];
    const std::size_t size = c.count();
    bool cyclic = false;
    for (std::size_t x = c.find_first(); x != Bitset::npos && !cyclic; x = c.find_next(x)) cyclic = orders[x] == size;
    if (!cyclic) return false;
  }
  return true;
}

TransitivityResult commutativity_transitive(const NcgContext& ctx) {
  const auto& comm = ctx.group().commutator_rows();
  const Bitset nc = non_central_bits(ctx);
  for (Element x : ctx.non_central()) {
    Bitset ys = comm[x] & nc;
    for (std::size_t y = ys.find_first(); y != Bitset::npos; y = ys.find_next(y)) {
      if (y == x) continue;
      Bitset zs = comm[y] & nc;
      zs.subtract(comm[x]);
      const std::size_t z = zs.find_first();
      if (z != Bitset::npos) return {false, ElementTriple{x, static_cast<Element>(y), static_cast<Element>(z)}};
    }
  }
  return {};
}

std::vector<ElementSet> centralizer_partition(const NcgContext& ctx) {
  require_ac(ctx, "centralizer_partition");
  const Bitset nc = non_central_bits(ctx);
  std::vector<ElementSet> blocks;
  Bitset covered(ctx.group().order());
  for (Element a : ctx.centralizer_representatives()) {
    Bitset block = ctx.centralizer_bits(a) & nc;
    if (block.intersects(covered))
      fail(ErrorCode::Inconsistent, "centralizer blocks overlap outside the center in " + ctx.group().spec());
    covered |= block;
    blocks.push_back(ElementSet::from_bitset(block));
  }
  return blocks;
}

std::size_t omega_fast(const NcgContext& ctx) {
  require_ac(ctx, "omega_fast");
  return ctx.centralizer_representatives().size();
}

Eq1Result eq1_verify(const NcgContext& ctx) {
  const std::size_t omega = omega_fast(ctx);
  Eq1Result r;
  r.lhs = static_cast<std::int64_t>(ctx.group().order());
  r.rhs = (1 - static_cast<std::int64_t>(omega)) * static_cast<std::int64_t>(ctx.center().size());
  for (Element a : ctx.centralizer_representatives()) r.rhs += static_cast<std::int64_t>(ctx.centralizer_bits(a).count());
  r.holds = r.lhs == r.rhs;
  return r;
}

ElementSet maximal_noncommuting_set(const NcgContext& ctx) {
  if (ctx.is_abelian()) fail(ErrorCode::AbelianGroup, ctx.group().spec() + " is abelian");
  const SimpleGraph& g = ctx.graph();
  Bitset candidates(g.vertex_count());
  candidates.set_all();
  std::vector<Element> chosen;
  for (std::size_t v = candidates.find_first(); v != Bitset::npos; v = candidates.find_first()) {
    chosen.push_back(ctx.element_of(static_cast<Vertex>(v)));
    candidates &= g.neighbors(static_cast<Vertex>(v));
  }
  ElementSet s(std::move(chosen));
  // Post-check: nothing outside s is adjacent to all of s.
  Bitset common(g.vertex_count());
  common.set_all();
  for (Element e : s) common &= g.neighbors(*ctx.vertex_of(e));
  if (common.any()) fail(ErrorCode::Inconsistent, "greedy non-commuting set is not maximal");
  return s;
}

bool verify_centralizer_cover(const NcgContext& ctx, const ElementSet& s) {
  const SimpleGraph& g = ctx.graph();
  std::vector<Vertex> vs;
  for (Element e : s) {
    auto v = ctx.vertex_of(e);
    if (!v) fail(ErrorCode::NotMaximal, "element " + std::to_string(e) + " is central or out of range");
    vs.push_back(*v);
  }
  if (vs.empty() || !is_clique(g, vs)) fail(ErrorCode::NotMaximal, "set is empty or not pairwise non-commuting");
  Bitset common(g.vertex_count());
  common.set_all();
  for (Vertex v : vs) common &= g.neighbors(v);
  if (common.any())
    fail(ErrorCode::NotMaximal, "element " + std::to_string(ctx.element_of(static_cast<Vertex>(common.find_first()))) +
                                    " extends the set");

  const std::size_t n = ctx.group().order();
  auto covers = [&](std::size_t skip) {
    Bitset u(n);
    for (std::size_t k = 0; k < s.size(); ++k)
      if (k != skip) u |= ctx.centralizer_bits(s[k]);
    return u.count() == n;
  };
  if (!covers(s.size())) return false;
  for (std::size_t k = 0; k < s.size(); ++k)
    if (covers(k)) return false;
  return true;
}

ElementSet exchange_extend(const NcgContext& ctx, const ElementSet& n, Element g) {
  require_ac(ctx, "exchange_extend");
  auto gv = ctx.vertex_of(g);
  if (!gv) fail(ErrorCode::BadInput, "g = " + std::to_string(g) + " is central or out of range");
  std::vector<Vertex> vs;
  for (Element e : n) {
    auto v = ctx.vertex_of(e);
    if (!v) fail(ErrorCode::BadInput, "N contains central element " + std::to_string(e));
    vs.push_back(*v);
  }
  const SimpleGraph& graph = ctx.graph();
  if (!is_clique(graph, vs)) fail(ErrorCode::BadInput, "N is not pairwise non-commuting");
  if (n.contains(g)) return n;

  auto with_g_is_clique = [&](std::optional<Element> dropped) {
    for (Element e : n)
      if (e != dropped && !graph.has_edge(*ctx.vertex_of(e), *gv)) return false;
    return true;
  };
  if (with_g_is_clique(std::nullopt)) {
    std::vector<Element> out(n.begin(), n.end());
    out.push_back(g);
    return ElementSet(std::move(out));
  }
  for (Element x : n) {
    if (graph.has_edge(*ctx.vertex_of(x), *gv)) continue;  // x must commute with g
    if (with_g_is_clique(x)) {
      std::vector<Element> out;
      for (Element e : n)
        if (e != x) out.push_back(e);
      out.push_back(g);
      return ElementSet(std::move(out));
    }
  }
  fail(ErrorCode::Inconsistent, "no exchange partner for " + std::to_string(g) + " in an AC-group");
}

bool degree_bound_check(const NcgContext& ctx) {
  const std::size_t omega = omega_fast(ctx);
  const std::size_t bound = ctx.group().order() - omega + 1;
  for (Element x : ctx.non_central())
    if (ctx.centralizer_bits(x).count() > bound) return false;
  return true;
}

std::optional<std::size_t> kregular_omega(const NcgContext& ctx) {
  require_ac(ctx, "kregular_omega");
  const auto& reps = ctx.centralizer_representatives();
  if (reps.empty()) return std::nullopt;
  const std::size_t k = ctx.centralizer_bits(reps.front()).count();
  for (Element a : reps)
    if (ctx.centralizer_bits(a).count() != k) return std::nullopt;
  const std::size_t z = ctx.center().size();
  const std::size_t num = ctx.group().order() - z, den = k - z;
  if (num % den != 0) fail(ErrorCode::Inconsistent, "k-regular quotient is not an integer");
  return num / den;
}

bool cc_quotient_omega_check(const FiniteGroup& g) {
  GroupSpec spec;
  try {
    spec = parse_spec(g.spec());
  } catch (const Error&) {
    fail(ErrorCode::SpecMismatch, "\"" + g.spec() + "\" is not a built-in spec");
  }
  const auto& t = spec.terms;
  const bool shape = (t.size() == 1 || t.size() == 2) && t[0].family == Family::Q &&
                     (t[0].parameter & (t[0].parameter - 1)) == 0 &&
                     (t.size() == 1 || (t[1].family == Family::C && t[1].parameter % 2 == 1));
  if (!shape) fail(ErrorCode::SpecMismatch, "\"" + g.spec() + "\" is not of the form Q:2^n or Q:2^nxC:m with m odd");

  std::size_t n = 0;
  while ((std::uint64_t{1} << n) < t[0].parameter) ++n;
  const std::size_t expected = (std::size_t{1} << (n - 2)) + 1;
  const std::size_t omega = omega_fast(build_ncg(g));
  const std::size_t omega_q = omega_fast(build_ncg(make_quaternion(static_cast<std::size_t>(t[0].parameter))));
  return omega == expected && omega == omega_q;
}

}  // namespace ncg
