#pragma once

#include <compare>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qtcsf/coeff.hpp"
#include "qtcsf/xpoly.hpp"

namespace qtcsf {

/// Weakly decreasing sequence of positive integers.
class Partition {
 public:
  Partition() = default;
  /// Throws DomainError unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;  // sum of parts
  int operator[](int i) const { return parts_[i]; }
  bool empty() const { return parts_.empty(); }

  Partition conjugate() const;
  /// Multiset union of the parts.
  Partition join(const Partition& other) const;

  /// "[2,1]"; the empty partition is "[]".
  std::string to_string() const;

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

/// All partitions of n in reverse-lexicographic order: (n), (n-1,1), ...
std::vector<Partition> partitions_of(int n);

/// e_r in the variables X_first..X_last of an m-variable ring (0 if r is
/// out of range, 1 if r = 0).
XPoly elementary(int r, int first, int last, int m);
/// e_lambda(X_1..X_m).
XPoly e_poly(const Partition& lambda, int m);

/// sum_{i<j} lambda_i lambda_j.
int e_stat(const Partition& lambda);
/// sum_i lambda_i (lambda_i - 1) / 2.
int n_exponent(const Partition& lambda);

/// A homogeneous symmetric function in the elementary basis.
class EExpansion {
 public:
  /// Reverse-lexicographic key order.
  using CoeffMap = std::map<Partition, QTCoeff, std::greater<>>;

  EExpansion() = default;
  explicit EExpansion(int n) : n_(n) {}

  int degree() const { return n_; }
  const CoeffMap& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  QTCoeff coeff(const Partition& lambda) const;

  /// Adds c to the coefficient of lambda; lambda must have weight n.
  void add(const Partition& lambda, const QTCoeff& c);

  EExpansion& operator+=(const EExpansion& other);
  EExpansion& operator-=(const EExpansion& other);
  EExpansion& operator*=(const QTCoeff& c);
  friend EExpansion operator+(EExpansion a, const EExpansion& b) { return a += b; }
  friend EExpansion operator-(EExpansion a, const EExpansion& b) { return a -= b; }
  friend EExpansion operator*(EExpansion a, const QTCoeff& c) { return a *= c; }
  /// Product in the e-basis: e_lambda e_mu = e_{lambda join mu}.
  friend EExpansion operator*(const EExpansion& a, const EExpansion& b);

  bool operator==(const EExpansion& other) const = default;

  template <class F>
  EExpansion map_coefficients(F&& f) const {
    EExpansion r(n_);
    for (const auto& [lam, c] : coeffs_) r.add(lam, f(c));
    return r;
  }

 private:
  int n_ = 0;
  CoeffMap coeffs_;
};

/// Sum of c_lambda e_lambda(X_1..X_m).
XPoly to_xpoly(const EExpansion& e, int m);

/// Unique e-expansion of a symmetric polynomial homogeneous of degree n
/// with m >= n. The zero polynomial expands to the zero expansion of
/// degree 0 unless a degree is supplied.
EExpansion expand_in_e(const XPoly& f);
EExpansion expand_in_e(const XPoly& f, int degree);

/// Scales the coefficient of e_lambda by t^{n_exponent(lambda)}.
EExpansion apply_N(const EExpansion& e);

/// Text form in increasing partition order, e.g. "t^2*e[2,1] + (1+t)*e[3]".
std::string to_string(const EExpansion& e);

}  // namespace qtcsf
