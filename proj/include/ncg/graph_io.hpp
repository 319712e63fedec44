#pragma once

#include <string>
#include <vector>

#include "ncg/graph.hpp"

namespace ncg {

/// Undirected DOT; vertex k is emitted as node k with label labels[k]
/// (or its index when `labels` is empty), in ascending vertex order.
std::string to_dot(const SimpleGraph& g, const std::vector<std::string>& labels = {});

/// Header "u,v" then one line per edge with u < v, in lexicographic order.
std::string to_edge_csv(const SimpleGraph& g);

}  // namespace ncg
