#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace qtcsf {

using Integer = mpz_class;

struct LaurentTerm {
  int qexp = 0;
  int texp = 0;
  Integer coeff;

  bool operator==(const LaurentTerm& other) const {
    return qexp == other.qexp && texp == other.texp && coeff == other.coeff;
  }
};

/// Element of Z[q^{±1}, t^{±1}]. Terms are kept sorted by (qexp, texp) with
/// no zero coefficients, so structural equality is value equality.
class QTLaurent {
 public:
  QTLaurent() = default;
  QTLaurent(long c);  // NOLINT(google-explicit-constructor)
  explicit QTLaurent(const Integer& c);

  static QTLaurent monomial(const Integer& c, int qexp, int texp);
  /// Sums duplicate exponents and drops zeros.
  static QTLaurent from_terms(std::vector<LaurentTerm> terms);

  const std::vector<LaurentTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }

  int min_qexp() const;
  int max_qexp() const;
  int min_texp() const;
  int max_texp() const;

  /// Multiplies by q^dq t^dt.
  QTLaurent shifted(int dq, int dt) const;
  /// Substitutes q = 1.
  QTLaurent at_q1() const;
  /// Coefficient of q^e as a q-free Laurent polynomial in t.
  QTLaurent q_coefficient(int e) const;
  /// Leading term under graded-lex order with q > t.
  const LaurentTerm& grlex_leading() const;
  /// gcd of the integer coefficients (nonnegative).
  Integer content() const;

  QTLaurent operator-() const;
  QTLaurent& operator+=(const QTLaurent& other);
  QTLaurent& operator-=(const QTLaurent& other);
  QTLaurent& operator*=(const QTLaurent& other);
  QTLaurent& operator*=(const Integer& c);

  friend QTLaurent operator+(QTLaurent a, const QTLaurent& b) { return a += b; }
  friend QTLaurent operator-(QTLaurent a, const QTLaurent& b) { return a -= b; }
  friend QTLaurent operator*(const QTLaurent& a, const QTLaurent& b);

  bool operator==(const QTLaurent& other) const = default;

  std::string to_string() const;

 private:
  std::vector<LaurentTerm> terms_;
};

/// Element of the field Q(q,t), kept as a normalized fraction num/den.
///
/// Normal form: den is an honest polynomial in q,t divisible by neither q
/// nor t, gcd(num, den) is a unit in Z[q,t], and den has a positive leading
/// coefficient under graded-lex order (q > t). Zero is 0/1.
class QTCoeff {
 public:
  QTCoeff() : den_(1) {}
  QTCoeff(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  QTCoeff(QTLaurent num) : num_(std::move(num)), den_(1) {}  // NOLINT
  /// Throws DivisionByZero if den is zero.
  QTCoeff(QTLaurent num, QTLaurent den);

  static QTCoeff q(int e = 1) { return QTLaurent::monomial(1, e, 0); }
  static QTCoeff t(int e = 1) { return QTLaurent::monomial(1, 0, e); }

  const QTLaurent& num() const { return num_; }
  const QTLaurent& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_laurent() const { return den_.is_one(); }
  /// True when no q appears in num or den.
  bool is_q_free() const;

  QTCoeff operator-() const;
  QTCoeff inverse() const;
  QTCoeff& operator+=(const QTCoeff& other);
  QTCoeff& operator-=(const QTCoeff& other);
  QTCoeff& operator*=(const QTCoeff& other);
  QTCoeff& operator/=(const QTCoeff& other);

  friend QTCoeff operator+(QTCoeff a, const QTCoeff& b) { return a += b; }
  friend QTCoeff operator-(QTCoeff a, const QTCoeff& b) { return a -= b; }
  friend QTCoeff operator*(QTCoeff a, const QTCoeff& b) { return a *= b; }
  friend QTCoeff operator/(QTCoeff a, const QTCoeff& b) { return a /= b; }

  bool operator==(const QTCoeff& other) const = default;

  /// "t^2", "(1+t)", "(1)/(1+t)"; parenthesized whenever it is not a
  /// single monomial so it can be used as a factor.
  std::string to_string() const;
  /// Like to_string but never wraps a bare sum in parentheses.
  std::string to_plain_string() const;

 private:
  struct Raw {};
  QTCoeff(Raw, QTLaurent num, QTLaurent den) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  QTLaurent num_;
  QTLaurent den_;
};

/// [n]_t = (1 - t^n) / (1 - t), any integer n.
QTCoeff t_int(int n);
/// [n]_t! = [1]_t ... [n]_t.
QTCoeff t_factorial(int n);

/// Substitutes q = 1. Throws DomainError if den(c) vanishes at q = 1.
QTCoeff specialize_q1(const QTCoeff& c);
/// Limit as q -> infinity, viewing c as a rational function of q over Q(t).
/// Throws DomainError ("divergent at q=∞") if the q-degree of the numerator
/// exceeds that of the denominator.
QTCoeff limit_q_infinity(const QTCoeff& c);

}  // namespace qtcsf
