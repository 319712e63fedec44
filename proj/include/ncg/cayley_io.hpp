#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "ncg/group.hpp"

namespace ncg {

// Cayley-table documents are JSON objects:
//   {"order": n, "table": [[...n ints...] x n], "labels": [...n strings...]}
// Row i of "table" is left multiplication by element i. "labels" is optional.
// Malformed documents raise TableError with law "format"; law violations
// name the first violated law as FiniteGroup::from_table does.

FiniteGroup parse_cayley_table(std::string_view text, std::string spec,
                               FiniteGroup::Validation validation = FiniteGroup::Validation::Full);
/// Reads `path`; the group's spec becomes "imported:<path>". Throws Error(Io) if unreadable.
FiniteGroup import_cayley_table(const std::filesystem::path& path,
                                FiniteGroup::Validation validation = FiniteGroup::Validation::Full);

std::string cayley_table_json(const FiniteGroup& g);
void export_cayley_table(const FiniteGroup& g, const std::filesystem::path& path);

}  // namespace ncg
