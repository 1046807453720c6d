#pragma once

#include <vector>

#include "qtcsf/chromatic.hpp"
#include "qtcsf/symfn.hpp"
#include "qtcsf/xpoly.hpp"

namespace qtcsf {

/// A polynomial in Y_1..Y_m, stored with the same layout as XPoly.
struct YPoly {
  XPoly poly;

  YPoly() = default;
  explicit YPoly(XPoly p);
  int nvars() const { return poly.nvars(); }
};

/// F(Y) applied to 1.
XPoly q_map(const YPoly& f);
/// e_r(Y_1..Y_m) applied to g.
XPoly apply_e_Y(int r, const XPoly& g);
/// e_lambda(Y) applied to 1.
XPoly q_map_elementary(const Partition& lambda, int m);

/// Coordinates c with sum_lambda c_lambda q_map(e_lambda(Y)) = f, for f
/// symmetric, homogeneous of degree d and m >= 2d.
EExpansion q_map_inv_sym(const XPoly& f);
EExpansion q_map_inv_sym(const XPoly& f, int degree);
/// q_map of sum c_lambda e_lambda(Y).
XPoly q_map(const EExpansion& y, int m);

/// Quantum product; f and g symmetric with m >= 2 (deg f + deg g).
XPoly star(const XPoly& f, const XPoly& g);

/// e_{lambda_1} star ... star e_{lambda_l}.
XPoly qt_elementary(const Partition& lambda, int m);
/// t^{-n_exponent(lambda)} q_map(e_lambda(Y)).
XPoly qt_elementary_via_qmap(const Partition& lambda, int m);

/// The right side (1 - q^{-1}) [r+1]_t e_{r+1} + q^{-1} e_1 e_r.
XPoly pieri_rhs(int r, int m);
/// star(e_1, e_r) against pieri_rhs, m >= 2(r+1).
Verdict check_pieri(int r, int m);
/// The partial-sum identity for one a in 1..m.
Verdict check_pieri_partial(int r, int m, int a);

}  // namespace qtcsf
