#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "ncg/bitset.hpp"
#include "ncg/error.hpp"

namespace ncg {

/// Dense element index. Index 0 is always the identity.
using Element = std::uint32_t;

/// Sorted, duplicate-free set of element indices.
class ElementSet {
public:
  ElementSet() = default;
  explicit ElementSet(std::vector<Element> members);
  static ElementSet from_bitset(const Bitset& bits);

  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(Element e) const noexcept;
  Bitset to_bitset(std::size_t universe) const;

  const std::vector<Element>& members() const noexcept { return members_; }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }
  Element operator[](std::size_t i) const noexcept { return members_[i]; }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;
  friend auto operator<=>(const ElementSet&, const ElementSet&) = default;

private:
  std::vector<Element> members_;
};

/// Thrown when a Cayley table fails one of the group laws. `law` names the
/// first violated law and `indices` the offending elements (in the indexing
/// of the table as supplied).
class TableError : public Error {
public:
  TableError(std::string law, std::vector<std::size_t> indices, const std::string& message)
      : Error(ErrorCode::InvalidTable, message), law_(std::move(law)), indices_(std::move(indices)) {}

  const std::string& law() const noexcept { return law_; }
  const std::vector<std::size_t>& indices() const noexcept { return indices_; }

private:
  std::string law_;
  std::vector<std::size_t> indices_;
};

struct Subgroup;

/// Materialized finite group backed by its full multiplication table.
///
/// Values are immutable and cheap to copy: the table and the lazily built
/// commutation caches are shared between copies. Concurrent reads are safe,
/// including the first call that fills a cache.
class FiniteGroup {
public:
  /// Associativity is checked exhaustively on import up to this order.
  static constexpr std::size_t kAssociativityCheckLimit = 512;

  enum class Validation {
    Full,       ///< every law; associativity up to kAssociativityCheckLimit
    Unchecked,  ///< identity row and inverses only; used for harness self-tests
  };

  /// Builds a group from a row-major table (row i = left multiplication by i).
  /// If the identity is not at index 0 the elements are re-indexed so that it
  /// is; `labels` follow their elements. Throws TableError.
  static FiniteGroup from_table(std::size_t order, std::vector<Element> table,
                                std::vector<std::string> labels, std::string spec,
                                Validation validation = Validation::Full);

  /// Builds a group from a multiplication law known to define a group with
  /// identity 0. Only the Latin-square shape is rechecked.
  template <class Mul>
  static FiniteGroup from_law(std::size_t order, Mul&& mul, std::vector<std::string> labels, std::string spec) {
    std::vector<Element> table(order * order);
    for (std::size_t i = 0; i < order; ++i)
      for (std::size_t j = 0; j < order; ++j) table[i * order + j] = static_cast<Element>(mul(i, j));
    return from_trusted(order, std::move(table), std::move(labels), std::move(spec));
  }

  std::size_t order() const noexcept;
  Element identity() const noexcept { return 0; }

  /// Checked product; throws OutOfRange.
  Element multiply(Element i, Element j) const;
  /// Unchecked product for inner loops.
  Element mul(Element i, Element j) const noexcept { return table_data()[static_cast<std::size_t>(i) * order() + j]; }
  Element inverse(Element i) const;
  /// x y x^-1 y^-1
  Element commutator(Element x, Element y) const;
  bool commutes(Element x, Element y) const;

  std::span<const Element> table() const noexcept;
  std::span<const Element> row(Element i) const noexcept;
  const std::vector<Element>& inverses() const noexcept;
  const std::string& label(Element i) const;
  const std::vector<std::string>& labels() const noexcept;
  const std::string& spec() const noexcept;

  /// False when the import skipped the associativity check (order above the limit).
  bool associativity_checked() const noexcept;

  ElementSet center() const;
  ElementSet centralizer(Element a) const;
  bool is_abelian() const;
  std::uint32_t element_order(Element i) const;

  /// Bit j of row i set iff g_i g_j = g_j g_i.
  const std::vector<Bitset>& commute_rows() const;
  /// Bit j of row i set iff [g_i, g_j] = 1. Agrees with commute_rows for groups.
  const std::vector<Bitset>& commutator_rows() const;
  const std::vector<std::uint32_t>& element_orders() const;
  const Bitset& center_bits() const;

  /// Closure of `gens` re-indexed as a standalone group. Throws OutOfRange.
  Subgroup generated_subgroup(const ElementSet& gens) const;
  /// Closure only, as a membership set in this group's indexing.
  Bitset closure_bits(std::span<const Element> gens) const;

private:
  struct Data;
  struct Cache;

  static FiniteGroup from_trusted(std::size_t order, std::vector<Element> table, std::vector<std::string> labels,
                                  std::string spec);
  explicit FiniteGroup(std::shared_ptr<const Data> data);

  const Element* table_data() const noexcept { return table_ptr_; }
  void check(Element i) const;

  std::shared_ptr<const Data> data_;
  std::shared_ptr<Cache> cache_;
  const Element* table_ptr_ = nullptr;
};

struct Subgroup {
  FiniteGroup group;
  /// parent_index[k] is the parent element that subgroup element k came from.
  std::vector<Element> parent_index;
};

}  // namespace ncg
