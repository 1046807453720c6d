#include "qtcsf/coeff.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "detail/dense_poly.hpp"
#include "qtcsf/error.hpp"

namespace qtcsf {

namespace {

using detail::DensePoly;
using UPoly = DensePoly<Integer>;   // Z[t]
using BiPoly = DensePoly<UPoly>;    // Z[t][q]

bool term_less(const LaurentTerm& a, const LaurentTerm& b) {
  return std::tie(a.qexp, a.texp) < std::tie(b.qexp, b.texp);
}

// Sorted merge of two canonical term lists, b scaled by sign.
std::vector<LaurentTerm> merge(const std::vector<LaurentTerm>& a,
                               const std::vector<LaurentTerm>& b, bool subtract) {
  std::vector<LaurentTerm> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && term_less(a[i], b[j]))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || term_less(b[j], a[i])) {
      out.push_back(b[j++]);
      if (subtract) out.back().coeff = -out.back().coeff;
    } else {
      Integer c = subtract ? Integer(a[i].coeff - b[j].coeff) : Integer(a[i].coeff + b[j].coeff);
      if (sgn(c) != 0) out.push_back({a[i].qexp, a[i].texp, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

// Requires nonnegative exponents.
BiPoly to_bipoly(const QTLaurent& p) {
  std::vector<std::vector<Integer>> rows(p.max_qexp() + 1);
  for (const auto& term : p.terms()) {
    auto& row = rows[term.qexp];
    if (static_cast<int>(row.size()) <= term.texp) row.resize(term.texp + 1);
    row[term.texp] = term.coeff;
  }
  std::vector<UPoly> coeffs;
  coeffs.reserve(rows.size());
  for (auto& row : rows) coeffs.emplace_back(std::move(row));
  return BiPoly(std::move(coeffs));
}

QTLaurent from_bipoly(const BiPoly& p) {
  std::vector<LaurentTerm> terms;
  for (int qe = 0; qe <= p.degree(); ++qe) {
    const auto& row = p[qe].coeffs();
    for (int te = 0; te < static_cast<int>(row.size()); ++te) {
      if (sgn(row[te]) != 0) terms.push_back({qe, te, row[te]});
    }
  }
  return QTLaurent::from_terms(std::move(terms));
}

QTLaurent divide_by_integer(const QTLaurent& p, const Integer& c) {
  std::vector<LaurentTerm> terms = p.terms();
  for (auto& term : terms) term.coeff = detail::exact_div(term.coeff, c);
  return QTLaurent::from_terms(std::move(terms));
}

std::string monomial_string(int qexp, int texp) {
  std::string s;
  auto var = [&](char name, int e) {
    if (e == 0) return;
    if (!s.empty()) s += '*';
    s += name;
    if (e != 1) s += '^' + std::to_string(e);
  };
  var('q', qexp);
  var('t', texp);
  return s;
}

}  // namespace

// ---------------------------------------------------------------- QTLaurent

QTLaurent::QTLaurent(long c) {
  if (c != 0) terms_.push_back({0, 0, Integer(c)});
}

QTLaurent::QTLaurent(const Integer& c) {
  if (sgn(c) != 0) terms_.push_back({0, 0, c});
}

QTLaurent QTLaurent::monomial(const Integer& c, int qexp, int texp) {
  QTLaurent p;
  if (sgn(c) != 0) p.terms_.push_back({qexp, texp, c});
  return p;
}

QTLaurent QTLaurent::from_terms(std::vector<LaurentTerm> terms) {
  std::sort(terms.begin(), terms.end(), term_less);
  QTLaurent p;
  p.terms_.reserve(terms.size());
  for (auto& term : terms) {
    if (!p.terms_.empty() && p.terms_.back().qexp == term.qexp &&
        p.terms_.back().texp == term.texp) {
      p.terms_.back().coeff += term.coeff;
    } else {
      if (!p.terms_.empty() && sgn(p.terms_.back().coeff) == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(term));
    }
  }
  if (!p.terms_.empty() && sgn(p.terms_.back().coeff) == 0) p.terms_.pop_back();
  return p;
}

bool QTLaurent::is_one() const {
  return terms_.size() == 1 && terms_[0].qexp == 0 && terms_[0].texp == 0 &&
         terms_[0].coeff == 1;
}

bool QTLaurent::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_[0].qexp == 0 && terms_[0].texp == 0);
}

int QTLaurent::min_qexp() const { return terms_.empty() ? 0 : terms_.front().qexp; }
int QTLaurent::max_qexp() const { return terms_.empty() ? 0 : terms_.back().qexp; }

int QTLaurent::min_texp() const {
  int r = 0;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    r = i == 0 ? terms_[i].texp : std::min(r, terms_[i].texp);
  }
  return r;
}

int QTLaurent::max_texp() const {
  int r = 0;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    r = i == 0 ? terms_[i].texp : std::max(r, terms_[i].texp);
  }
  return r;
}

QTLaurent QTLaurent::shifted(int dq, int dt) const {
  QTLaurent p = *this;
  for (auto& term : p.terms_) {
    term.qexp += dq;
    term.texp += dt;
  }
  return p;
}

QTLaurent QTLaurent::at_q1() const {
  std::vector<LaurentTerm> terms = terms_;
  for (auto& term : terms) term.qexp = 0;
  return from_terms(std::move(terms));
}

QTLaurent QTLaurent::q_coefficient(int e) const {
  QTLaurent p;
  for (const auto& term : terms_) {
    if (term.qexp == e) p.terms_.push_back({0, term.texp, term.coeff});
  }
  return p;
}

const LaurentTerm& QTLaurent::grlex_leading() const {
  if (terms_.empty()) throw DomainError("leading term of zero");
  const LaurentTerm* best = &terms_[0];
  for (const auto& term : terms_) {
    const int d = term.qexp + term.texp;
    const int bd = best->qexp + best->texp;
    if (d > bd || (d == bd && term.qexp > best->qexp)) best = &term;
  }
  return *best;
}

Integer QTLaurent::content() const {
  Integer g;
  for (const auto& term : terms_) {
    g = gcd(g, term.coeff);
    if (g == 1) break;
  }
  return g;
}

QTLaurent QTLaurent::operator-() const {
  QTLaurent p = *this;
  for (auto& term : p.terms_) term.coeff = -term.coeff;
  return p;
}

QTLaurent& QTLaurent::operator+=(const QTLaurent& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  terms_ = merge(terms_, other.terms_, false);
  return *this;
}

QTLaurent& QTLaurent::operator-=(const QTLaurent& other) {
  if (other.is_zero()) return *this;
  terms_ = merge(terms_, other.terms_, true);
  return *this;
}

QTLaurent operator*(const QTLaurent& a, const QTLaurent& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_monomial()) {
    QTLaurent p = b.shifted(a.terms_[0].qexp, a.terms_[0].texp);
    if (a.terms_[0].coeff != 1) p *= a.terms_[0].coeff;
    return p;
  }
  if (b.is_monomial()) return b * a;
  std::vector<LaurentTerm> terms;
  terms.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      terms.push_back({x.qexp + y.qexp, x.texp + y.texp, x.coeff * y.coeff});
    }
  }
  return QTLaurent::from_terms(std::move(terms));
}

QTLaurent& QTLaurent::operator*=(const QTLaurent& other) { return *this = *this * other; }

QTLaurent& QTLaurent::operator*=(const Integer& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& term : terms_) term.coeff *= c;
  return *this;
}

std::string QTLaurent::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& term : terms_) {
    const std::string mono = monomial_string(term.qexp, term.texp);
    Integer c = term.coeff;
    if (first) {
      if (sgn(c) < 0) out << '-';
    } else {
      out << (sgn(c) < 0 ? '-' : '+');
    }
    c = abs(c);
    if (mono.empty()) {
      out << c.get_str();
    } else if (c == 1) {
      out << mono;
    } else {
      out << c.get_str() << '*' << mono;
    }
    first = false;
  }
  return out.str();
}

// ------------------------------------------------------------------ QTCoeff

QTCoeff::QTCoeff(QTLaurent num, QTLaurent den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero();
  normalize();
}

void QTCoeff::normalize() {
  if (num_.is_zero()) {
    den_ = QTLaurent(1);
    return;
  }
  if (den_.is_one()) return;
  // Move the monomial part of den into num.
  {
    const int dq = den_.min_qexp();
    const int dt = den_.min_texp();
    if (dq != 0 || dt != 0) {
      den_ = den_.shifted(-dq, -dt);
      num_ = num_.shifted(-dq, -dt);
    }
  }
  if (den_.is_constant()) {
    Integer g = gcd(num_.content(), den_.terms()[0].coeff);
    if (sgn(den_.terms()[0].coeff) < 0) g = -g;
    num_ = divide_by_integer(num_, g);
    den_ = divide_by_integer(den_, g);
    return;
  }
  const int nq = num_.min_qexp();
  const int nt = num_.min_texp();
  const QTLaurent num_poly = num_.shifted(-nq, -nt);
  const BiPoly n = to_bipoly(num_poly);
  const BiPoly d = to_bipoly(den_);
  const BiPoly g = detail::ring_gcd(n, d);
  if (!detail::is_unit(g)) {
    num_ = from_bipoly(detail::exact_div(n, g)).shifted(nq, nt);
    den_ = from_bipoly(detail::exact_div(d, g));
  }
  if (sgn(den_.grlex_leading().coeff) < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

bool QTCoeff::is_q_free() const {
  auto q_free = [](const QTLaurent& p) {
    return std::all_of(p.terms().begin(), p.terms().end(),
                       [](const LaurentTerm& term) { return term.qexp == 0; });
  };
  return q_free(num_) && q_free(den_);
}

QTCoeff QTCoeff::operator-() const { return QTCoeff(Raw{}, -num_, den_); }

QTCoeff QTCoeff::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return QTCoeff(den_, num_);
}

QTCoeff& QTCoeff::operator+=(const QTCoeff& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  if (den_.is_one() && other.den_.is_one()) {
    num_ += other.num_;
    return *this;
  }
  if (den_ == other.den_) {
    num_ += other.num_;
  } else {
    num_ = num_ * other.den_ + other.num_ * den_;
    den_ = den_ * other.den_;
  }
  normalize();
  return *this;
}

QTCoeff& QTCoeff::operator-=(const QTCoeff& other) { return *this += -other; }

QTCoeff& QTCoeff::operator*=(const QTCoeff& other) {
  if (is_zero() || other.is_zero()) return *this = QTCoeff();
  if (den_.is_one() && other.den_.is_one()) {
    num_ *= other.num_;
    return *this;
  }
  num_ *= other.num_;
  den_ *= other.den_;
  normalize();
  return *this;
}

QTCoeff& QTCoeff::operator/=(const QTCoeff& other) { return *this *= other.inverse(); }

std::string QTCoeff::to_plain_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

std::string QTCoeff::to_string() const {
  if (den_.is_one()) {
    if (num_.terms().size() <= 1) return num_.to_string();
    return "(" + num_.to_string() + ")";
  }
  return to_plain_string();
}

// ------------------------------------------------------------- t-integers

QTCoeff t_int(int n) {
  if (n == 0) return {};
  if (n > 0) {
    std::vector<LaurentTerm> terms;
    for (int i = 0; i < n; ++i) terms.push_back({0, i, Integer(1)});
    return QTLaurent::from_terms(std::move(terms));
  }
  // (1 - t^n)/(1 - t) = -t^n (1 + t + ... + t^{-n-1})
  std::vector<LaurentTerm> terms;
  for (int i = n; i < 0; ++i) terms.push_back({0, i, Integer(-1)});
  return QTLaurent::from_terms(std::move(terms));
}

QTCoeff t_factorial(int n) {
  if (n < 0) throw DomainError("t_factorial: negative argument " + std::to_string(n));
  QTCoeff r(1);
  for (int i = 2; i <= n; ++i) r *= t_int(i);
  return r;
}

QTCoeff specialize_q1(const QTCoeff& c) {
  const QTLaurent den = c.den().at_q1();
  if (den.is_zero()) {
    throw DomainError("specialize_q1: denominator " + c.den().to_string() +
                      " vanishes at q=1");
  }
  return QTCoeff(c.num().at_q1(), den);
}

QTCoeff limit_q_infinity(const QTCoeff& c) {
  if (c.is_zero()) return {};
  const int num_deg = c.num().max_qexp();
  const int den_deg = c.den().max_qexp();
  if (num_deg > den_deg) {
    throw DomainError("divergent at q=∞: " + c.to_plain_string());
  }
  if (num_deg < den_deg) return {};
  return QTCoeff(c.num().q_coefficient(num_deg), c.den().q_coefficient(den_deg));
}

}  // namespace qtcsf
