#pragma once

// Data-parallel kernels over a Cayley table. Every kernel has a serial
// reference and an OpenMP version; the two must produce identical output
// (tests/unit/kernels_test.cpp checks this, bench/ compares their speed).

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ncg/bitset.hpp"

namespace ncg::kernels {

using Element = std::uint32_t;
using Triple = std::array<Element, 3>;

/// Row i has bit j set iff table[i][j] == table[j][i].
std::vector<Bitset> commute_rows_serial(std::span<const Element> table, std::size_t n);
std::vector<Bitset> commute_rows_parallel(std::span<const Element> table, std::size_t n);

/// Row i has bit j set iff ((i j) i^-1) j^-1 == 0.
std::vector<Bitset> commutator_rows_serial(std::span<const Element> table, std::span<const Element> inverses,
                                           std::size_t n);
std::vector<Bitset> commutator_rows_parallel(std::span<const Element> table, std::span<const Element> inverses,
                                             std::size_t n);

/// Lexicographically first (i, j, k) with (ij)k != i(jk).
std::optional<Triple> find_nonassociative_serial(std::span<const Element> table, std::size_t n);
std::optional<Triple> find_nonassociative_parallel(std::span<const Element> table, std::size_t n);

/// Multiplicative order of every element (0 if the powers never return to 0).
std::vector<std::uint32_t> element_orders_serial(std::span<const Element> table, std::size_t n);
std::vector<std::uint32_t> element_orders_parallel(std::span<const Element> table, std::size_t n);

}  // namespace ncg::kernels
