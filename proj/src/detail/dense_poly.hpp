#pragma once

// Dense univariate polynomials over a gcd domain, used recursively as
// Z[t] = DensePoly<Integer> and Z[t][q] = DensePoly<DensePoly<Integer>> to
// normalize fractions in Q(q,t).

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "qtcsf/error.hpp"

namespace qtcsf::detail {

inline bool is_zero(const mpz_class& a) { return sgn(a) == 0; }
inline int leading_sign(const mpz_class& a) { return sgn(a); }
inline mpz_class ring_gcd(const mpz_class& a, const mpz_class& b) { return gcd(a, b); }
inline bool is_unit(const mpz_class& a) { return a == 1 || a == -1; }

inline mpz_class exact_div(const mpz_class& a, const mpz_class& b) {
  if (is_zero(b)) throw DivisionByZero();
  if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) {
    throw Error("internal: inexact integer division");
  }
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

template <class R>
class DensePoly {
 public:
  DensePoly() = default;
  explicit DensePoly(R constant) {
    if (!is_zero(constant)) c_.push_back(std::move(constant));
  }
  explicit DensePoly(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool zero() const { return c_.empty(); }
  const R& lc() const { return c_.back(); }
  const std::vector<R>& coeffs() const { return c_; }
  const R& operator[](int i) const { return c_[i]; }

  DensePoly& operator+=(const DensePoly& b) {
    if (b.c_.size() > c_.size()) c_.resize(b.c_.size());
    for (std::size_t i = 0; i < b.c_.size(); ++i) c_[i] += b.c_[i];
    trim();
    return *this;
  }
  DensePoly& operator-=(const DensePoly& b) {
    if (b.c_.size() > c_.size()) c_.resize(b.c_.size());
    for (std::size_t i = 0; i < b.c_.size(); ++i) c_[i] -= b.c_[i];
    trim();
    return *this;
  }
  friend DensePoly operator+(DensePoly a, const DensePoly& b) { return a += b; }
  friend DensePoly operator-(DensePoly a, const DensePoly& b) { return a -= b; }
  DensePoly operator-() const {
    DensePoly r;
    r.c_.reserve(c_.size());
    for (const auto& x : c_) r.c_.push_back(-x);
    return r;
  }
  friend DensePoly operator*(const DensePoly& a, const DensePoly& b) {
    if (a.zero() || b.zero()) return {};
    std::vector<R> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return DensePoly(std::move(out));
  }
  DensePoly scaled(const R& s) const {
    std::vector<R> out;
    out.reserve(c_.size());
    for (const auto& x : c_) out.push_back(x * s);
    return DensePoly(std::move(out));
  }
  DensePoly divided_by_scalar(const R& s) const {
    std::vector<R> out;
    out.reserve(c_.size());
    for (const auto& x : c_) out.push_back(exact_div(x, s));
    return DensePoly(std::move(out));
  }
  DensePoly shifted(int k) const {
    if (zero()) return {};
    std::vector<R> out(k, R());
    out.insert(out.end(), c_.begin(), c_.end());
    return DensePoly(std::move(out));
  }

  bool operator==(const DensePoly& other) const = default;

 private:
  void trim() {
    while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
  }
  std::vector<R> c_;
};

template <class R>
bool is_zero(const DensePoly<R>& a) {
  return a.zero();
}

template <class R>
int leading_sign(const DensePoly<R>& a) {
  return a.zero() ? 0 : leading_sign(a.lc());
}

/// Exact division a / b; throws if b does not divide a.
template <class R>
DensePoly<R> exact_div(const DensePoly<R>& a, const DensePoly<R>& b) {
  if (b.zero()) throw DivisionByZero();
  if (a.zero()) return {};
  if (a.degree() < b.degree()) throw Error("internal: inexact polynomial division");
  std::vector<R> quot(a.degree() - b.degree() + 1);
  DensePoly<R> rem = a;
  while (!rem.zero() && rem.degree() >= b.degree()) {
    const int k = rem.degree() - b.degree();
    R c = exact_div(rem.lc(), b.lc());
    std::vector<R> mono(k + 1);
    mono[k] = c;
    rem -= DensePoly<R>(std::move(mono)) * b;
    quot[k] = std::move(c);
  }
  if (!rem.zero()) throw Error("internal: inexact polynomial division");
  return DensePoly<R>(std::move(quot));
}

/// lc(b)^(deg a - deg b + 1) * a  mod  b.
template <class R>
DensePoly<R> pseudo_remainder(const DensePoly<R>& a, const DensePoly<R>& b) {
  DensePoly<R> r = a;
  int e = a.degree() - b.degree() + 1;
  const DensePoly<R> lcb(b.lc());
  while (!r.zero() && r.degree() >= b.degree()) {
    const int k = r.degree() - b.degree();
    std::vector<R> mono(k + 1);
    mono[k] = r.lc();
    r = r * lcb - DensePoly<R>(std::move(mono)) * b;
    --e;
  }
  for (; e > 0; --e) r = r * lcb;
  return r;
}

template <class R>
R power(const R& base, int e) {
  R r(1);
  for (int i = 0; i < e; ++i) r = r * base;
  return r;
}

template <class R>
DensePoly<R> normalized_sign(DensePoly<R> a) {
  if (leading_sign(a) < 0) return -a;
  return a;
}

template <class R>
R content(const DensePoly<R>& a) {
  R g;
  for (const auto& c : a.coeffs()) {
    g = ring_gcd(g, c);
    if (leading_sign(g) != 0 && is_unit(g)) break;
  }
  return g;
}

template <class R>
bool is_unit(const DensePoly<R>& a) {
  return a.degree() == 0 && is_unit(a.lc());
}

/// gcd via the subresultant polynomial remainder sequence; the result has
/// positive leading sign.
template <class R>
DensePoly<R> ring_gcd(const DensePoly<R>& a0, const DensePoly<R>& b0) {
  if (a0.zero()) return normalized_sign(b0);
  if (b0.zero()) return normalized_sign(a0);
  DensePoly<R> a = a0;
  DensePoly<R> b = b0;
  if (a.degree() < b.degree()) std::swap(a, b);
  const R ca = content(a);
  const R cb = content(b);
  const R d = ring_gcd(ca, cb);
  a = a.divided_by_scalar(ca);
  b = b.divided_by_scalar(cb);
  R g(1);
  R h(1);
  while (true) {
    const int delta = a.degree() - b.degree();
    DensePoly<R> r = pseudo_remainder(a, b);
    if (r.zero()) break;
    if (r.degree() == 0) {
      b = DensePoly<R>(R(1));
      break;
    }
    a = std::move(b);
    b = r.divided_by_scalar(g * power(h, delta));
    g = a.lc();
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      h = exact_div(power(g, delta), power(h, delta - 1));
    }
  }
  DensePoly<R> result = b.divided_by_scalar(content(b)).scaled(d);
  return normalized_sign(std::move(result));
}

}  // namespace qtcsf::detail
