#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>

#include "qtcsf/coeff.hpp"

namespace qtcsf {

inline constexpr int kMaxVars = 16;

/// Exponent vector X_1^{a_1} ... X_m^{a_m}; entries may be negative.
/// Indexing is 0-based (entry k is the exponent of X_{k+1}).
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(int m);
  Monomial(std::initializer_list<int> exps);
  static Monomial from_span(std::span<const int> exps);

  int size() const { return m_; }
  int operator[](int k) const { return exps_[k]; }
  int& operator[](int k) { return exps_[k]; }
  int degree() const;
  bool is_polynomial() const;

  auto operator<=>(const Monomial&) const = default;

 private:
  std::array<std::int32_t, kMaxVars> exps_{};
  std::int32_t m_ = 0;
};

/// Laurent polynomial in X_1..X_m with coefficients in Q(q,t).
class XPoly {
 public:
  /// Terms iterate in decreasing lexicographic order of exponent vectors.
  using TermMap = std::map<Monomial, QTCoeff, std::greater<>>;

  XPoly() = default;
  explicit XPoly(int m);

  static XPoly constant(int m, const QTCoeff& c);
  static XPoly monomial(const Monomial& mono, const QTCoeff& c = 1);
  /// X_i for any integer i, using X_{i+km} = q^{-k} X_i.
  static XPoly variable(int m, int i);

  int nvars() const { return m_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Coefficient of mono (zero if absent).
  QTCoeff coeff(const Monomial& mono) const;

  void add_term(const Monomial& mono, const QTCoeff& c);

  XPoly& operator+=(const XPoly& other);
  XPoly& operator-=(const XPoly& other);
  XPoly& operator*=(const QTCoeff& c);
  friend XPoly operator+(XPoly a, const XPoly& b) { return a += b; }
  friend XPoly operator-(XPoly a, const XPoly& b) { return a -= b; }
  friend XPoly operator*(XPoly a, const QTCoeff& c) { return a *= c; }
  friend XPoly operator*(const QTCoeff& c, XPoly a) { return a *= c; }
  friend XPoly operator*(const XPoly& a, const XPoly& b);
  XPoly operator-() const;

  bool operator==(const XPoly& other) const = default;

  /// Set of total degrees of the terms.
  std::set<int> degrees() const;
  /// The degree if every term has the same total degree (nullopt for 0).
  std::optional<int> homogeneous_degree() const;
  XPoly homogeneous_part(int d) const;
  bool is_polynomial() const;

  template <class F>
  XPoly map_coefficients(F&& f) const {
    XPoly r(m_);
    for (const auto& [mono, c] : terms_) r.add_term(mono, f(c));
    return r;
  }

 private:
  int m_ = 0;
  TermMap terms_;
};

/// (i0, qpow) with i = i0 + k m, 1 <= i0 <= m and qpow = -k, so that
/// X_i = q^{qpow} X_{i0}.
std::pair<int, int> resolve_index(int i, int m);

/// Sets X_{m'+1} = ... = X_m = 0. Requires 0 < m' < f.nvars() and no
/// negative exponent on a truncated variable.
XPoly truncate(const XPoly& f, int m_prime);

/// Invariance under every adjacent transposition s_1..s_{m-1}.
bool is_symmetric(const XPoly& f);
/// Invariance under the single swap X_i <-> X_{i+1}, 1 <= i < m.
bool is_invariant_under_swap(const XPoly& f, int i);

/// Every coefficient lies in Z[q^{-1}, t^{±1}].
bool assert_integral(const XPoly& f);

/// Text form such as "q^-1*t^2*X1^2*X2 + (1+t)*X1*X2*X3".
std::string to_string(const XPoly& f);

}  // namespace qtcsf
