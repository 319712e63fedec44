#include "ncg/group.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>

#include "ncg/kernels.hpp"

namespace ncg {

// ---------------------------------------------------------------- ElementSet

ElementSet::ElementSet(std::vector<Element> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

ElementSet ElementSet::from_bitset(const Bitset& bits) {
  ElementSet s;
  s.members_ = bits.to_indices();
  return s;
}

bool ElementSet::contains(Element e) const noexcept {
  return std::binary_search(members_.begin(), members_.end(), e);
}

Bitset ElementSet::to_bitset(std::size_t universe) const {
  Bitset b(universe);
  for (Element e : members_) b.set(e);
  return b;
}

// --------------------------------------------------------------- FiniteGroup

struct FiniteGroup::Data {
  std::size_t order = 0;
  std::vector<Element> table;
  std::vector<Element> inverses;
  std::vector<std::string> labels;
  std::string spec;
  bool associativity_checked = true;
};

struct FiniteGroup::Cache {
  std::once_flag commute_once;
  std::vector<Bitset> commute;
  Bitset center;
  std::once_flag commutator_once;
  std::vector<Bitset> commutator;
  std::once_flag orders_once;
  std::vector<std::uint32_t> orders;
};

namespace {

std::string triple_text(std::size_t a, std::size_t b, std::size_t c) {
  std::ostringstream os;
  os << "(" << a << ", " << b << ", " << c << ")";
  return os.str();
}

[[noreturn]] void table_fail(std::string law, std::vector<std::size_t> idx, const std::string& detail) {
  throw TableError(law, idx, "InvalidTable: " + law + " law violated: " + detail);
}

void check_latin(std::size_t n, const std::vector<Element>& table) {
  std::vector<std::uint8_t> seen(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t j = 0; j < n; ++j) {
      Element v = table[i * n + j];
      if (seen[v])
        table_fail("latin_row", {i, j},
                   "row " + std::to_string(i) + " repeats element " + std::to_string(v) + " at column " +
                       std::to_string(j));
      seen[v] = 1;
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t i = 0; i < n; ++i) {
      Element v = table[i * n + j];
      if (seen[v])
        table_fail("latin_column", {i, j},
                   "column " + std::to_string(j) + " repeats element " + std::to_string(v) + " at row " +
                       std::to_string(i));
      seen[v] = 1;
    }
  }
}

std::vector<Element> compute_inverses(std::size_t n, const std::vector<Element>& table, bool two_sided) {
  std::vector<Element> inv(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t k = 0;
    while (k < n && table[i * n + k] != 0) ++k;
    if (k == n) table_fail("inverse", {i}, "element " + std::to_string(i) + " has no right inverse");
    if (two_sided && table[k * n + i] != 0)
      table_fail("inverse", {i, k},
                 "right inverse " + std::to_string(k) + " of element " + std::to_string(i) + " is not a left inverse");
    inv[i] = static_cast<Element>(k);
  }
  return inv;
}

/// Index e whose row and column are both the identity map, if any.
std::optional<std::size_t> find_identity(std::size_t n, const std::vector<Element>& table) {
  for (std::size_t e = 0; e < n; ++e) {
    bool ok = true;
    for (std::size_t j = 0; j < n && ok; ++j) ok = table[e * n + j] == j && table[j * n + e] == j;
    if (ok) return e;
  }
  return std::nullopt;
}

}  // namespace

FiniteGroup::FiniteGroup(std::shared_ptr<const Data> data)
    : data_(std::move(data)), cache_(std::make_shared<Cache>()), table_ptr_(data_->table.data()) {}

FiniteGroup FiniteGroup::from_table(std::size_t order, std::vector<Element> table, std::vector<std::string> labels,
                                    std::string spec, Validation validation) {
  if (order == 0) table_fail("shape", {}, "order must be positive");
  if (table.size() != order * order)
    table_fail("shape", {table.size()},
               "expected " + std::to_string(order * order) + " entries, got " + std::to_string(table.size()));
  for (std::size_t k = 0; k < table.size(); ++k)
    if (table[k] >= order)
      table_fail("range", {k / order, k % order},
                 "entry (" + std::to_string(k / order) + ", " + std::to_string(k % order) + ") = " +
                     std::to_string(table[k]) + " is not below the order");
  if (!labels.empty() && labels.size() != order)
    table_fail("shape", {labels.size()}, "labels has " + std::to_string(labels.size()) + " entries");
  if (labels.empty()) {
    labels.resize(order);
    for (std::size_t i = 0; i < order; ++i) labels[i] = "g" + std::to_string(i);
  }

  if (validation == Validation::Full) check_latin(order, table);
  auto e = find_identity(order, table);
  if (!e) table_fail("identity", {}, "no element acts as a two-sided identity");
  // Swapping e and 0 is an involution, so the same map translates indices
  // back to the caller's numbering for error reports.
  const Element moved = static_cast<Element>(*e);
  auto swap_idx = [moved](Element v) -> Element {
    if (v == 0) return moved;
    if (v == moved) return 0;
    return v;
  };
  if (moved != 0) {
    std::vector<Element> re(order * order);
    for (std::size_t i = 0; i < order; ++i)
      for (std::size_t j = 0; j < order; ++j)
        re[swap_idx(static_cast<Element>(i)) * order + swap_idx(static_cast<Element>(j))] =
            swap_idx(table[i * order + j]);
    table = std::move(re);
    std::swap(labels[0], labels[moved]);
  }

  auto data = std::make_shared<Data>();
  data->order = order;
  try {
    if (validation == Validation::Full) {
      data->inverses = compute_inverses(order, table, true);
      if (order <= kAssociativityCheckLimit) {
        if (auto bad = kernels::find_nonassociative_parallel(table, order)) {
          const std::size_t x = swap_idx((*bad)[0]), y = swap_idx((*bad)[1]), z = swap_idx((*bad)[2]);
          table_fail("associativity", {x, y, z}, "(xy)z != x(yz) for (x, y, z) = " + triple_text(x, y, z));
        }
      } else {
        data->associativity_checked = false;
      }
    } else {
      data->inverses = compute_inverses(order, table, false);
      data->associativity_checked = false;
    }
  } catch (const TableError& err) {
    if (moved == 0 || err.law() != "inverse") throw;
    std::vector<std::size_t> idx;
    for (auto i : err.indices()) idx.push_back(swap_idx(static_cast<Element>(i)));
    std::string detail = "element " + std::to_string(idx.front()) + " has no two-sided inverse";
    table_fail("inverse", idx, detail);
  }
  data->table = std::move(table);
  data->labels = std::move(labels);
  data->spec = std::move(spec);
  return FiniteGroup(std::move(data));
}

FiniteGroup FiniteGroup::from_trusted(std::size_t order, std::vector<Element> table, std::vector<std::string> labels,
                                      std::string spec) {
  check_latin(order, table);
  auto data = std::make_shared<Data>();
  data->order = order;
  data->inverses = compute_inverses(order, table, true);
  data->table = std::move(table);
  data->labels = std::move(labels);
  data->spec = std::move(spec);
  return FiniteGroup(std::move(data));
}

std::size_t FiniteGroup::order() const noexcept { return data_->order; }
std::span<const Element> FiniteGroup::table() const noexcept { return data_->table; }
std::span<const Element> FiniteGroup::row(Element i) const noexcept {
  return std::span<const Element>(data_->table).subspan(static_cast<std::size_t>(i) * order(), order());
}
const std::vector<Element>& FiniteGroup::inverses() const noexcept { return data_->inverses; }
const std::vector<std::string>& FiniteGroup::labels() const noexcept { return data_->labels; }
const std::string& FiniteGroup::spec() const noexcept { return data_->spec; }
bool FiniteGroup::associativity_checked() const noexcept { return data_->associativity_checked; }

void FiniteGroup::check(Element i) const {
  if (i >= order())
    fail(ErrorCode::OutOfRange,
         "element " + std::to_string(i) + " out of range for group of order " + std::to_string(order()));
}

Element FiniteGroup::multiply(Element i, Element j) const {
  check(i);
  check(j);
  return mul(i, j);
}

Element FiniteGroup::inverse(Element i) const {
  check(i);
  return data_->inverses[i];
}

Element FiniteGroup::commutator(Element x, Element y) const {
  check(x);
  check(y);
  return mul(mul(mul(x, y), data_->inverses[x]), data_->inverses[y]);
}

bool FiniteGroup::commutes(Element x, Element y) const {
  check(x);
  check(y);
  return commute_rows()[x].test(y);
}

const std::string& FiniteGroup::label(Element i) const {
  check(i);
  return data_->labels[i];
}

const std::vector<Bitset>& FiniteGroup::commute_rows() const {
  std::call_once(cache_->commute_once, [this] {
    cache_->commute = kernels::commute_rows_parallel(data_->table, order());
    cache_->center = Bitset(order());
    for (std::size_t i = 0; i < order(); ++i)
      if (cache_->commute[i].count() == order()) cache_->center.set(i);
  });
  return cache_->commute;
}

const Bitset& FiniteGroup::center_bits() const {
  commute_rows();
  return cache_->center;
}

const std::vector<Bitset>& FiniteGroup::commutator_rows() const {
  std::call_once(cache_->commutator_once, [this] {
    cache_->commutator = kernels::commutator_rows_parallel(data_->table, data_->inverses, order());
  });
  return cache_->commutator;
}

const std::vector<std::uint32_t>& FiniteGroup::element_orders() const {
  std::call_once(cache_->orders_once,
                 [this] { cache_->orders = kernels::element_orders_parallel(data_->table, order()); });
  return cache_->orders;
}

ElementSet FiniteGroup::center() const { return ElementSet::from_bitset(center_bits()); }

ElementSet FiniteGroup::centralizer(Element a) const {
  check(a);
  return ElementSet::from_bitset(commute_rows()[a]);
}

bool FiniteGroup::is_abelian() const { return center_bits().count() == order(); }

std::uint32_t FiniteGroup::element_order(Element i) const {
  check(i);
  return element_orders()[i];
}

Bitset FiniteGroup::closure_bits(std::span<const Element> gens) const {
  for (Element g : gens) check(g);
  Bitset in(order());
  std::deque<Element> queue;
  in.set(0);
  queue.push_back(0);
  // Right-multiplying by generators from the identity reaches every product
  // of generators; in a finite group that is the whole generated subgroup.
  while (!queue.empty()) {
    Element x = queue.front();
    queue.pop_front();
    for (Element g : gens) {
      Element y = mul(x, g);
      if (!in.test(y)) {
        in.set(y);
        queue.push_back(y);
      }
    }
  }
  return in;
}

Subgroup FiniteGroup::generated_subgroup(const ElementSet& gens) const {
  if (gens.empty()) fail(ErrorCode::BadInput, "generated_subgroup needs at least one generator");
  Bitset in = closure_bits(gens.members());
  std::vector<Element> members = in.to_indices();
  std::vector<Element> position(order(), 0);
  for (std::size_t k = 0; k < members.size(); ++k) position[members[k]] = static_cast<Element>(k);

  const std::size_t m = members.size();
  std::vector<Element> table(m * m);
  std::vector<std::string> labels(m);
  for (std::size_t a = 0; a < m; ++a) {
    labels[a] = data_->labels[members[a]];
    for (std::size_t b = 0; b < m; ++b) table[a * m + b] = position[mul(members[a], members[b])];
  }
  std::string spec = "subgroup of " + data_->spec;
  return Subgroup{from_trusted(m, std::move(table), std::move(labels), std::move(spec)), std::move(members)};
}

}  // namespace ncg
