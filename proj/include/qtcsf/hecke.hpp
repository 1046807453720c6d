#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qtcsf/coeff.hpp"
#include "qtcsf/xpoly.hpp"

namespace qtcsf {

// Level-one action of the affine Hecke algebra on XPoly. Indices of s and T
// are read mod m, so T_0 = T_m is the affine generator.

XPoly apply_s(int i, const XPoly& f);
XPoly apply_T(int i, const XPoly& f);
XPoly apply_T_inv(int i, const XPoly& f);
XPoly apply_pi(const XPoly& f);
XPoly apply_pi_inv(const XPoly& f);
/// Y_i = t^{m-i} T_{i-1} ... T_1 Pi T_{m-1}^{-1} ... T_i^{-1}, 1 <= i <= m.
XPoly apply_Y(int i, const XPoly& f);

struct HeckeAtom {
  enum class Kind { T, Tinv, Pi, PiInv, Y, Scalar };
  Kind kind = Kind::Scalar;
  int index = 0;
  QTCoeff scalar = 1;

  static HeckeAtom T(int i) { return {Kind::T, i, 1}; }
  static HeckeAtom Tinv(int i) { return {Kind::Tinv, i, 1}; }
  static HeckeAtom Pi() { return {Kind::Pi, 0, 1}; }
  static HeckeAtom PiInv() { return {Kind::PiInv, 0, 1}; }
  static HeckeAtom Y(int i) { return {Kind::Y, i, 1}; }
  static HeckeAtom Scalar(QTCoeff c) { return {Kind::Scalar, 0, std::move(c)}; }
};

/// A product of atoms; the rightmost factor acts first.
struct HeckeWord {
  std::vector<HeckeAtom> factors;
};

/// Parses "T3 Ti3 P Pi Y2" (Ti = T inverse, P = Pi, Pi = Pi inverse).
/// T indices must lie in 0..m-1 and Y indices in 1..m.
HeckeWord parse_hecke_word(std::string_view text, int m);
std::string to_string(const HeckeWord& w);

XPoly apply_atom(const HeckeAtom& a, const XPoly& f);
XPoly apply_word(const HeckeWord& w, const XPoly& f);

}  // namespace qtcsf
