#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qtcsf/coeff.hpp"

namespace qtcsf::detail {

/// Renders sum of coeff*basis as "a*b1 + c*b2 - b3". An empty basis string
/// stands for the unit.
inline std::string render_combination(const std::vector<std::pair<QTCoeff, std::string>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [c, basis] : terms) {
    QTCoeff a = c;
    bool negative = false;
    if (c.is_laurent() && c.num().is_monomial() && sgn(c.num().terms()[0].coeff) < 0) {
      negative = true;
      a = -c;
    }
    std::string term;
    if (basis.empty()) {
      term = a.to_string();
    } else {
      term = a.is_one() ? basis : a.to_string() + "*" + basis;
    }
    if (first) {
      out += negative ? "-" + term : term;
    } else {
      out += (negative ? " - " : " + ") + term;
    }
    first = false;
  }
  return out;
}

}  // namespace qtcsf::detail
