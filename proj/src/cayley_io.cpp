#include "ncg/cayley_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace ncg {

namespace {

[[noreturn]] void format_fail(const std::string& detail) {
  throw TableError("format", {}, "InvalidTable: format: " + detail);
}

}  // namespace

FiniteGroup parse_cayley_table(std::string_view text, std::string spec, FiniteGroup::Validation validation) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    format_fail(std::string("not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) format_fail("top level must be an object");
  if (!doc.contains("order") || !doc["order"].is_number_unsigned()) format_fail("\"order\" must be a positive integer");
  const auto order = doc["order"].get<std::size_t>();
  if (order == 0) format_fail("\"order\" must be a positive integer");
  if (!doc.contains("table") || !doc["table"].is_array()) format_fail("\"table\" must be an array of rows");
  const auto& rows = doc["table"];
  if (rows.size() != order)
    format_fail("\"table\" has " + std::to_string(rows.size()) + " rows, expected " + std::to_string(order));

  std::vector<Element> table;
  table.reserve(order * order);
  for (std::size_t i = 0; i < order; ++i) {
    const auto& row = rows[i];
    if (!row.is_array() || row.size() != order)
      format_fail("row " + std::to_string(i) + " must be an array of " + std::to_string(order) + " integers");
    for (std::size_t j = 0; j < order; ++j) {
      if (!row[j].is_number_unsigned())
        format_fail("entry (" + std::to_string(i) + ", " + std::to_string(j) + ") is not a non-negative integer");
      const auto v = row[j].get<std::uint64_t>();
      if (v >= order)
        throw TableError("range", {i, j},
                         "InvalidTable: range law violated: entry (" + std::to_string(i) + ", " + std::to_string(j) +
                             ") = " + std::to_string(v) + " is not below the order");
      table.push_back(static_cast<Element>(v));
    }
  }

  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    const auto& l = doc["labels"];
    if (!l.is_array() || l.size() != order) format_fail("\"labels\" must be an array of " + std::to_string(order) + " strings");
    for (const auto& s : l) {
      if (!s.is_string()) format_fail("\"labels\" entries must be strings");
      labels.push_back(s.get<std::string>());
    }
  }
  return FiniteGroup::from_table(order, std::move(table), std::move(labels), std::move(spec), validation);
}

FiniteGroup import_cayley_table(const std::filesystem::path& path, FiniteGroup::Validation validation) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::Io, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_cayley_table(buf.str(), "imported:" + path.string(), validation);
}

std::string cayley_table_json(const FiniteGroup& g) {
  nlohmann::ordered_json doc;
  doc["order"] = g.order();
  auto rows = nlohmann::ordered_json::array();
  for (Element i = 0; i < g.order(); ++i) {
    auto r = g.row(i);
    rows.push_back(std::vector<Element>(r.begin(), r.end()));
  }
  doc["table"] = std::move(rows);
  doc["labels"] = g.labels();
  return doc.dump() + "\n";
}

void export_cayley_table(const FiniteGroup& g, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::Io, "cannot write " + path.string());
  out << cayley_table_json(g);
  if (!out) fail(ErrorCode::Io, "write failed for " + path.string());
}

}  // namespace ncg
