#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "qtcsf/coeff.hpp"
#include "qtcsf/symfn.hpp"
#include "qtcsf/xpoly.hpp"

namespace qtcsf {

/// Integer combination of e_lambda, parsed from text such as
/// "e[2,1] + 2*e[3] - e[1]" or "3". Parts inside e[...] may come in any order.
struct SymLiteral {
  std::vector<std::pair<Integer, Partition>> terms;

  XPoly to_xpoly(int m) const;
};

SymLiteral parse_sym_literal(std::string_view text);

}  // namespace qtcsf
