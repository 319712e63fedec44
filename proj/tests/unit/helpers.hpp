#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "ncg/error.hpp"
#include "ncg/group.hpp"

namespace test {

inline ncg::Element by_label(const ncg::FiniteGroup& g, const std::string& label) {
  for (ncg::Element e = 0; e < g.order(); ++e)
    if (g.labels()[e] == label) return e;
  throw std::invalid_argument("no element labelled " + label + " in " + g.spec());
}

inline ncg::ElementSet set_of(const ncg::FiniteGroup& g, const std::vector<std::string>& labels) {
  std::vector<ncg::Element> es;
  for (const auto& l : labels) es.push_back(by_label(g, l));
  return ncg::ElementSet(std::move(es));
}

template <class F>
ncg::ErrorCode error_code_of(F&& f) {
  try {
    f();
  } catch (const ncg::Error& e) {
    return e.code();
  }
  throw std::logic_error("expected an ncg::Error");
}

}  // namespace test
