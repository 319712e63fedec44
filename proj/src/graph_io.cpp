#include "ncg/graph_io.hpp"

#include <sstream>

namespace ncg {

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string to_dot(const SimpleGraph& g, const std::vector<std::string>& labels) {
  if (!labels.empty() && labels.size() != g.vertex_count())
    fail(ErrorCode::BadInput, "label count does not match vertex count");
  std::ostringstream os;
  os << "graph G {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    os << "  " << v << " [label=\"" << (labels.empty() ? std::to_string(v) : dot_escape(labels[v])) << "\"];\n";
  for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

std::string to_edge_csv(const SimpleGraph& g) {
  std::ostringstream os;
  os << "u,v\n";
  for (auto [u, v] : g.edges()) os << u << "," << v << "\n";
  return os.str();
}

}  // namespace ncg
