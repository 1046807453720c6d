#include "qtcsf/chromatic.hpp"

#include "qtcsf/error.hpp"
#include "qtcsf/hecke.hpp"

namespace qtcsf {

XPoly apply_S(int i, int e, const XPoly& f) {
  const int m = f.nvars();
  if (e < i - m) return XPoly(m);
  XPoly acc = f;
  XPoly cur = f;
  for (int j = i; j <= m + e - 1; ++j) {
    cur = apply_T_inv(j, cur);
    acc += cur;
  }
  return acc;
}

XPoly apply_hatS(int a, const XPoly& f) {
  const int m = f.nvars();
  if (a >= m) {
    throw DomainError("HatS_a needs a < m (a = " + std::to_string(a) + ", m = " + std::to_string(m) + ")");
  }
  if (a < 0) return XPoly(m);
  XPoly cur = apply_pi(f);
  XPoly acc = cur;
  for (int j = 1; j <= a; ++j) {
    cur = apply_T_inv(j, cur);
    acc += cur;
  }
  return acc;
}

namespace {

void require_m(int m) {
  if (m < 2) throw DomainError("need m >= 2, got " + std::to_string(m));
}

}  // namespace

XPoly qt_csf(const ESeq& e, int m) {
  require_m(m);
  const ASeq a = to_aseq(e);
  XPoly g = XPoly::constant(m, 1);
  for (int j = e.n(); j >= 1 && !g.is_zero(); --j) g = apply_hatS(m - 1 - a(j), g);
  return g * QTCoeff::t(e.n() * (m - 1));
}

XPoly qt_csf_via_S(const ESeq& e, int m) {
  require_m(m);
  XPoly g = XPoly::constant(m, 1);
  for (int j = 0; j < e.n(); ++j) g = apply_pi(g);
  for (int i = e.n(); i >= 1 && !g.is_zero(); --i) g = apply_S(i, e(i), g);
  return g * QTCoeff::t(e.n() * (m - 1));
}

XPoly specialize_q1(const XPoly& f) {
  return f.map_coefficients([](const QTCoeff& c) { return specialize_q1(c); });
}

XPoly limit_q_infinity(const XPoly& f) {
  return f.map_coefficients([](const QTCoeff& c) { return limit_q_infinity(c); });
}

Verdict check_stability(const ESeq& e, int m, int m_prime) {
  if (m_prime < 2 || m_prime >= m) throw DomainError("check_stability needs 2 <= m' < m");
  const XPoly lhs = truncate(qt_csf(e, m), m_prime);
  const XPoly rhs = qt_csf(e, m_prime);
  return {lhs == rhs, to_string(rhs), to_string(lhs)};
}

Verdict check_q1_collapse(const ESeq& e, int m) {
  if (m < e.n()) throw DomainError("check_q1_collapse needs m >= n");
  const int n = e.n();
  const EExpansion lhs = expand_in_e(specialize_q1(qt_csf(e, m)), n);
  const EExpansion rhs = apply_N(expand_in_e(chromatic_qsf(graph_of(e), m), n));
  return {lhs == rhs, to_string(rhs), to_string(lhs)};
}

EExpansion c_lambda(const ESeq& e) {
  const int n = e.n();
  if (n == 0) {
    EExpansion one(0);
    one.add(Partition(), 1);
    return one;
  }
  return expand_in_e(chromatic_qsf(graph_of(e), n), n);
}

Verdict check_dist_identity(const ESeq& e) {
  QTCoeff sum;
  const EExpansion expansion = c_lambda(e);
  for (const auto& [lam, c] : expansion.coeffs()) {
    QTCoeff denom = 1;
    for (int p : lam.parts()) denom *= t_factorial(p);
    sum += QTCoeff::t(e.weight() - e_stat(lam)) * c / denom;
  }
  return {sum.is_one(), "1", sum.to_plain_string()};
}

Verdict check_qinf_limit(const ESeq& e, int m) {
  const int n = e.n();
  if (m < n) throw DomainError("check_qinf_limit needs m >= n");
  const XPoly rhs = elementary(n, 1, m, m) * (QTCoeff::t(n * (n - 1) / 2 - e.weight()) * t_factorial(n));
  const XPoly f = qt_csf(e, m);
  try {
    const XPoly lhs = limit_q_infinity(f);
    return {lhs == rhs, to_string(rhs), to_string(lhs)};
  } catch (const DomainError& err) {
    return {false, to_string(rhs), std::string(err.what()) + " in " + to_string(f)};
  }
}

}  // namespace qtcsf
