#include "ncg/kernels.hpp"

#include <atomic>
#include <limits>

namespace ncg::kernels {

namespace {

inline Element at(std::span<const Element> table, std::size_t n, std::size_t i, std::size_t j) {
  return table[i * n + j];
}

void fill_commute_row(std::span<const Element> table, std::size_t n, std::size_t i, Bitset& row) {
  for (std::size_t j = 0; j < n; ++j)
    if (at(table, n, i, j) == at(table, n, j, i)) row.set(j);
}

void fill_commutator_row(std::span<const Element> table, std::span<const Element> inverses, std::size_t n,
                         std::size_t i, Bitset& row) {
  for (std::size_t j = 0; j < n; ++j) {
    Element c = at(table, n, at(table, n, at(table, n, i, j), inverses[i]), inverses[j]);
    if (c == 0) row.set(j);
  }
}

std::optional<std::array<Element, 2>> first_violation_in_row(std::span<const Element> table, std::size_t n,
                                                             std::size_t i) {
  for (std::size_t j = 0; j < n; ++j) {
    const Element ij = at(table, n, i, j);
    for (std::size_t k = 0; k < n; ++k) {
      if (at(table, n, ij, k) != at(table, n, i, at(table, n, j, k)))
        return std::array<Element, 2>{static_cast<Element>(j), static_cast<Element>(k)};
    }
  }
  return std::nullopt;
}

std::uint32_t order_of(std::span<const Element> table, std::size_t n, std::size_t i) {
  std::size_t power = i;
  for (std::uint32_t k = 1; k <= n; ++k) {
    if (power == 0) return k;
    power = at(table, n, power, i);
  }
  return 0;
}

}  // namespace

std::vector<Bitset> commute_rows_serial(std::span<const Element> table, std::size_t n) {
  std::vector<Bitset> rows(n, Bitset(n));
  for (std::size_t i = 0; i < n; ++i) fill_commute_row(table, n, i, rows[i]);
  return rows;
}

std::vector<Bitset> commute_rows_parallel(std::span<const Element> table, std::size_t n) {
  std::vector<Bitset> rows(n, Bitset(n));
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < count; ++i) fill_commute_row(table, n, static_cast<std::size_t>(i), rows[i]);
  return rows;
}

std::vector<Bitset> commutator_rows_serial(std::span<const Element> table, std::span<const Element> inverses,
                                           std::size_t n) {
  std::vector<Bitset> rows(n, Bitset(n));
  for (std::size_t i = 0; i < n; ++i) fill_commutator_row(table, inverses, n, i, rows[i]);
  return rows;
}

std::vector<Bitset> commutator_rows_parallel(std::span<const Element> table, std::span<const Element> inverses,
                                             std::size_t n) {
  std::vector<Bitset> rows(n, Bitset(n));
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < count; ++i)
    fill_commutator_row(table, inverses, n, static_cast<std::size_t>(i), rows[i]);
  return rows;
}

std::optional<Triple> find_nonassociative_serial(std::span<const Element> table, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (auto jk = first_violation_in_row(table, n, i)) return Triple{static_cast<Element>(i), (*jk)[0], (*jk)[1]};
  return std::nullopt;
}

std::optional<Triple> find_nonassociative_parallel(std::span<const Element> table, std::size_t n) {
  // Rows above the best violating row found so far are skipped; the lowest
  // violating row wins, so the result matches the serial scan.
  std::atomic<std::int64_t> best{std::numeric_limits<std::int64_t>::max()};
  std::vector<std::optional<std::array<Element, 2>>> found(n);
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t i = 0; i < count; ++i) {
    if (i > best.load(std::memory_order_relaxed)) continue;
    found[i] = first_violation_in_row(table, n, static_cast<std::size_t>(i));
    if (found[i]) {
      std::int64_t cur = best.load(std::memory_order_relaxed);
      while (i < cur && !best.compare_exchange_weak(cur, i, std::memory_order_relaxed)) {
      }
    }
  }
  const std::int64_t row = best.load();
  if (row == std::numeric_limits<std::int64_t>::max()) return std::nullopt;
  return Triple{static_cast<Element>(row), (*found[row])[0], (*found[row])[1]};
}

std::vector<std::uint32_t> element_orders_serial(std::span<const Element> table, std::size_t n) {
  std::vector<std::uint32_t> orders(n);
  for (std::size_t i = 0; i < n; ++i) orders[i] = order_of(table, n, i);
  return orders;
}

std::vector<std::uint32_t> element_orders_parallel(std::span<const Element> table, std::size_t n) {
  std::vector<std::uint32_t> orders(n);
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t i = 0; i < count; ++i) orders[i] = order_of(table, n, static_cast<std::size_t>(i));
  return orders;
}

}  // namespace ncg::kernels
