#pragma once

#include <string>

#include "qtcsf/graphs.hpp"
#include "qtcsf/symfn.hpp"
#include "qtcsf/xpoly.hpp"

namespace qtcsf {

/// Outcome of an identity check. On failure both sides are rendered.
struct Verdict {
  bool pass = false;
  std::string expected;
  std::string actual;

  explicit operator bool() const { return pass; }
};

/// S_{i,e} = 1 + T_i^{-1} + T_{i+1}^{-1} T_i^{-1} + ... + T_{m+e-1}^{-1} ... T_i^{-1},
/// T indices mod m; zero when e < i - m.
XPoly apply_S(int i, int e, const XPoly& f);
/// HatS_a = (1 + T_1^{-1} + ... + T_a^{-1} ... T_1^{-1}) Pi; zero for a < 0,
/// DomainError for a >= m.
XPoly apply_hatS(int a, const XPoly& f);

/// t^{n(m-1)} HatS_{m-1-a(1)} ... HatS_{m-1-a(n)} applied to 1.
XPoly qt_csf(const ESeq& e, int m);
/// t^{n(m-1)} S_{1,e(1)} ... S_{n,e(n)} Pi^n applied to 1.
XPoly qt_csf_via_S(const ESeq& e, int m);

/// Applies a coefficient map to every term (q = 1, q -> infinity).
XPoly specialize_q1(const XPoly& f);
XPoly limit_q_infinity(const XPoly& f);

/// truncate(qt_csf(e, m), m') == qt_csf(e, m'), 2 <= m' < m.
Verdict check_stability(const ESeq& e, int m, int m_prime);
/// q = 1 value against N applied to the coloring sum, in e-coordinates.
Verdict check_q1_collapse(const ESeq& e, int m);
/// e-expansion of the coloring sum with m = n.
EExpansion c_lambda(const ESeq& e);
/// sum_lambda t^{|e| - e_stat(lambda)} c_lambda / prod [lambda_i]_t! == 1.
Verdict check_dist_identity(const ESeq& e);
/// lim_{q->inf} qt_csf(e, m) == t^{n(n-1)/2 - |e|} [n]_t! e_n, m >= n.
Verdict check_qinf_limit(const ESeq& e, int m);

}  // namespace qtcsf
