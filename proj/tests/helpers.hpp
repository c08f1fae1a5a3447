#pragma once

#include <string>

#include "jalg/catalog.hpp"
#include "jalg/io.hpp"

namespace testing {

inline jalg::Element el(const jalg::Algebra& a, const std::string& text) {
  jalg::VarNames params = a.params();
  return jalg::parse_combination(text, a.basis(), a.field(), params);
}

inline jalg::Algebra table(const std::string& field, const std::string& basis, const std::string& mults) {
  std::string text = "field " + field + "\nbasis " + basis + "\n";
  std::size_t start = 0;
  while (start < mults.size()) {
    auto end = mults.find(';', start);
    if (end == std::string::npos) end = mults.size();
    const std::string m = mults.substr(start, end - start);
    if (m.find_first_not_of(' ') != std::string::npos) text += "mult " + m + "\n";
    start = end + 1;
  }
  return jalg::parse_algebra(text);
}

inline jalg::Subspace span(const jalg::Algebra& a, const std::string& text) {
  return jalg::parse_subspace(text, a.basis(), a.field());
}

inline jalg::LinearMap map(const std::string& text, const jalg::Algebra& src, const jalg::Algebra& dst,
                           jalg::VarNames params = {}) {
  return jalg::parse_map(text, src.basis(), dst.basis(), src.field(), params);
}

}  // namespace testing
