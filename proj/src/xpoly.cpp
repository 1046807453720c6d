#include "qtcsf/xpoly.hpp"

#include <algorithm>
#include <numeric>

#include "detail/render.hpp"
#include "qtcsf/error.hpp"

namespace qtcsf {

namespace {

void check_nvars(int m) {
  if (m < 1 || m > kMaxVars) {
    throw DomainError("number of variables must be in 1.." + std::to_string(kMaxVars) +
                      ", got " + std::to_string(m));
  }
}

void check_same(const XPoly& a, const XPoly& b) {
  if (a.nvars() != b.nvars()) {
    throw DomainError("mismatched number of variables: " + std::to_string(a.nvars()) +
                      " vs " + std::to_string(b.nvars()));
  }
}

}  // namespace

// ----------------------------------------------------------------- Monomial

Monomial::Monomial(int m) : m_(m) { check_nvars(m); }

Monomial::Monomial(std::initializer_list<int> exps)
    : Monomial(Monomial::from_span(std::span<const int>(exps.begin(), exps.size()))) {}

Monomial Monomial::from_span(std::span<const int> exps) {
  Monomial mono(static_cast<int>(exps.size()));
  std::copy(exps.begin(), exps.end(), mono.exps_.begin());
  return mono;
}

int Monomial::degree() const { return std::accumulate(exps_.begin(), exps_.begin() + m_, 0); }

bool Monomial::is_polynomial() const {
  return std::all_of(exps_.begin(), exps_.begin() + m_, [](int e) { return e >= 0; });
}

// -------------------------------------------------------------------- XPoly

XPoly::XPoly(int m) : m_(m) { check_nvars(m); }

XPoly XPoly::constant(int m, const QTCoeff& c) {
  XPoly f(m);
  f.add_term(Monomial(m), c);
  return f;
}

XPoly XPoly::monomial(const Monomial& mono, const QTCoeff& c) {
  XPoly f(mono.size());
  f.add_term(mono, c);
  return f;
}

XPoly XPoly::variable(int m, int i) {
  const auto [base, qpow] = resolve_index(i, m);
  Monomial mono(m);
  mono[base - 1] = 1;
  return monomial(mono, QTCoeff::q(qpow));
}

QTCoeff XPoly::coeff(const Monomial& mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? QTCoeff() : it->second;
}

void XPoly::add_term(const Monomial& mono, const QTCoeff& c) {
  if (c.is_zero()) return;
  if (mono.size() != m_) throw DomainError("monomial has the wrong number of variables");
  auto [it, inserted] = terms_.try_emplace(mono, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

XPoly& XPoly::operator+=(const XPoly& other) {
  check_same(*this, other);
  for (const auto& [mono, c] : other.terms_) add_term(mono, c);
  return *this;
}

XPoly& XPoly::operator-=(const XPoly& other) {
  check_same(*this, other);
  for (const auto& [mono, c] : other.terms_) add_term(mono, -c);
  return *this;
}

XPoly& XPoly::operator*=(const QTCoeff& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  if (c.is_one()) return *this;
  for (auto& [mono, coeff] : terms_) coeff *= c;
  return *this;
}

XPoly operator*(const XPoly& a, const XPoly& b) {
  check_same(a, b);
  XPoly r(a.m_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Monomial mono(a.m_);
      for (int k = 0; k < a.m_; ++k) mono[k] = ma[k] + mb[k];
      r.add_term(mono, ca * cb);
    }
  }
  return r;
}

XPoly XPoly::operator-() const {
  XPoly r = *this;
  for (auto& [mono, c] : r.terms_) c = -c;
  return r;
}

std::set<int> XPoly::degrees() const {
  std::set<int> out;
  for (const auto& [mono, c] : terms_) out.insert(mono.degree());
  return out;
}

std::optional<int> XPoly::homogeneous_degree() const {
  const auto ds = degrees();
  if (ds.size() != 1) return std::nullopt;
  return *ds.begin();
}

XPoly XPoly::homogeneous_part(int d) const {
  XPoly r(m_);
  for (const auto& [mono, c] : terms_) {
    if (mono.degree() == d) r.terms_.emplace(mono, c);
  }
  return r;
}

bool XPoly::is_polynomial() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& term) { return term.first.is_polynomial(); });
}

// ------------------------------------------------------------- operations

std::pair<int, int> resolve_index(int i, int m) {
  if (m < 1) throw DomainError("resolve_index: m must be positive");
  // i = i0 + k m with 1 <= i0 <= m, k = floor((i - 1) / m)
  int k = (i - 1) / m;
  if ((i - 1) % m != 0 && i - 1 < 0) --k;
  const int i0 = i - k * m;
  return {i0, -k};
}

XPoly truncate(const XPoly& f, int m_prime) {
  if (m_prime <= 0 || m_prime >= f.nvars()) {
    throw DomainError("truncate: need 0 < m' < m (m' = " + std::to_string(m_prime) +
                      ", m = " + std::to_string(f.nvars()) + ")");
  }
  XPoly r(m_prime);
  for (const auto& [mono, c] : f.terms()) {
    bool killed = false;
    for (int k = m_prime; k < f.nvars(); ++k) {
      if (mono[k] < 0) {
        throw DomainError("truncate: negative exponent on X" + std::to_string(k + 1));
      }
      if (mono[k] > 0) killed = true;
    }
    if (killed) continue;
    Monomial small(m_prime);
    for (int k = 0; k < m_prime; ++k) small[k] = mono[k];
    r.add_term(small, c);
  }
  return r;
}

bool is_invariant_under_swap(const XPoly& f, int i) {
  for (const auto& [mono, c] : f.terms()) {
    Monomial swapped = mono;
    std::swap(swapped[i - 1], swapped[i]);
    if (swapped == mono) continue;
    auto it = f.terms().find(swapped);
    if (it == f.terms().end() || it->second != c) return false;
  }
  return true;
}

bool is_symmetric(const XPoly& f) {
  for (int i = 1; i < f.nvars(); ++i) {
    if (!is_invariant_under_swap(f, i)) return false;
  }
  return true;
}

bool assert_integral(const XPoly& f) {
  for (const auto& [mono, c] : f.terms()) {
    if (!c.is_laurent()) return false;
    for (const auto& term : c.num().terms()) {
      if (term.qexp > 0) return false;
    }
  }
  return true;
}

std::string to_string(const XPoly& f) {
  std::vector<std::pair<QTCoeff, std::string>> terms;
  for (const auto& [mono, c] : f.terms()) {
    std::string vars;
    for (int k = 0; k < mono.size(); ++k) {
      if (mono[k] == 0) continue;
      if (!vars.empty()) vars += '*';
      vars += "X" + std::to_string(k + 1);
      if (mono[k] != 1) vars += "^" + std::to_string(mono[k]);
    }
    terms.emplace_back(c, std::move(vars));
  }
  return detail::render_combination(terms);
}

}  // namespace qtcsf
