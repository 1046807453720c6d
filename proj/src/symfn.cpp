#include "qtcsf/symfn.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

#include "detail/render.hpp"
#include "qtcsf/error.hpp"

namespace qtcsf {

// ---------------------------------------------------------------- Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw DomainError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw DomainError("partition parts must be weakly decreasing");
    }
  }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::conjugate() const {
  std::vector<int> out;
  if (parts_.empty()) return {};
  for (int j = 1; j <= parts_[0]; ++j) {
    int count = 0;
    for (int p : parts_) count += p >= j ? 1 : 0;
    out.push_back(count);
  }
  return Partition(std::move(out));
}

Partition Partition::join(const Partition& other) const {
  std::vector<int> out = parts_;
  out.insert(out.end(), other.parts_.begin(), other.parts_.end());
  std::sort(out.begin(), out.end(), std::greater<>());
  return Partition(std::move(out));
}

std::string Partition::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out + "]";
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw DomainError("partitions_of: negative n");
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

// --------------------------------------------------------------- elementary

XPoly elementary(int r, int first, int last, int m) {
  XPoly out(m);
  const int count = last - first + 1;
  if (r < 0 || r > std::max(count, 0)) return out;
  if (first < 1 || last > m) {
    if (count > 0) throw DomainError("elementary: variable range outside 1..m");
  }
  // walk r-subsets of [first, last] in lexicographic order
  std::vector<int> idx(r);
  std::iota(idx.begin(), idx.end(), first);
  while (true) {
    Monomial mono(m);
    for (int i : idx) mono[i - 1] = 1;
    out.add_term(mono, 1);
    int k = r - 1;
    while (k >= 0 && idx[k] == last - (r - 1 - k)) --k;
    if (k < 0) break;
    ++idx[k];
    for (int j = k + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

XPoly e_poly(const Partition& lambda, int m) {
  XPoly out = XPoly::constant(m, 1);
  for (int r : lambda.parts()) {
    if (r > m) return XPoly(m);
    out = out * elementary(r, 1, m, m);
  }
  return out;
}

int e_stat(const Partition& lambda) {
  int total = 0;
  int prefix = 0;
  for (int p : lambda.parts()) {
    total += prefix * p;
    prefix += p;
  }
  return total;
}

int n_exponent(const Partition& lambda) {
  int total = 0;
  for (int p : lambda.parts()) total += p * (p - 1) / 2;
  return total;
}

// --------------------------------------------------------------- EExpansion

QTCoeff EExpansion::coeff(const Partition& lambda) const {
  auto it = coeffs_.find(lambda);
  return it == coeffs_.end() ? QTCoeff() : it->second;
}

void EExpansion::add(const Partition& lambda, const QTCoeff& c) {
  if (c.is_zero()) return;
  if (lambda.size() != n_) {
    throw DomainError("partition " + lambda.to_string() + " does not have weight " +
                      std::to_string(n_));
  }
  auto [it, inserted] = coeffs_.try_emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

EExpansion& EExpansion::operator+=(const EExpansion& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) n_ = other.n_;
  for (const auto& [lam, c] : other.coeffs_) add(lam, c);
  return *this;
}

EExpansion& EExpansion::operator-=(const EExpansion& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) n_ = other.n_;
  for (const auto& [lam, c] : other.coeffs_) add(lam, -c);
  return *this;
}

EExpansion& EExpansion::operator*=(const QTCoeff& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [lam, x] : coeffs_) x *= c;
  return *this;
}

EExpansion operator*(const EExpansion& a, const EExpansion& b) {
  EExpansion r(a.n_ + b.n_);
  for (const auto& [la, ca] : a.coeffs_) {
    for (const auto& [lb, cb] : b.coeffs_) r.add(la.join(lb), ca * cb);
  }
  return r;
}

XPoly to_xpoly(const EExpansion& e, int m) {
  XPoly out(m);
  for (const auto& [lam, c] : e.coeffs()) out += e_poly(lam, m) * c;
  return out;
}

namespace {

// Row lambda: coefficients of X^mu (mu |- n, padded with zeros) in
// e_lambda. These do not depend on m once m >= n.
using Transition = std::map<Partition, std::map<Partition, Integer>>;

const Transition& transition_matrix(int n) {
  static std::mutex mu;
  static std::map<int, Transition> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  Transition table;
  const int m = std::max(n, 1);
  for (const auto& lam : partitions_of(n)) {
    const XPoly e = e_poly(lam, m);
    auto& row = table[lam];
    for (const auto& mu : partitions_of(n)) {
      Monomial mono(m);
      for (int i = 0; i < mu.length(); ++i) mono[i] = mu[i];
      const QTCoeff c = e.coeff(mono);
      if (!c.is_zero()) row[mu] = c.num().terms()[0].coeff;
    }
  }
  return cache.emplace(n, std::move(table)).first->second;
}

}  // namespace

EExpansion expand_in_e(const XPoly& f) {
  if (f.is_zero()) return EExpansion(0);
  const auto d = f.homogeneous_degree();
  if (!d) throw DomainError("expand_in_e: input is not homogeneous");
  return expand_in_e(f, *d);
}

EExpansion expand_in_e(const XPoly& f, int n) {
  if (f.is_zero()) return EExpansion(n);
  const auto d = f.homogeneous_degree();
  if (!d || *d != n) throw DomainError("expand_in_e: input is not homogeneous of degree " + std::to_string(n));
  if (!f.is_polynomial()) throw DomainError("expand_in_e: input has negative exponents");
  if (f.nvars() < n) {
    throw DomainError("expand_in_e: need m >= n (m = " + std::to_string(f.nvars()) +
                      ", n = " + std::to_string(n) + ")");
  }
  if (!is_symmetric(f)) throw DomainError("expand_in_e: input is not symmetric");

  const int m = f.nvars();
  std::map<Partition, QTCoeff, std::greater<>> coords;
  for (const auto& mu : partitions_of(n)) {
    Monomial mono(m);
    for (int i = 0; i < mu.length(); ++i) mono[i] = mu[i];
    coords[mu] = f.coeff(mono);
  }
  const Transition& table = transition_matrix(n);
  EExpansion out(n);
  // e_{lambda'} = m_lambda + lex-smaller terms
  for (const auto& [lam, c0] : coords) {
    const QTCoeff c = c0;
    if (c.is_zero()) continue;
    const Partition conj = lam.conjugate();
    out.add(conj, c);
    for (const auto& [mu, k] : table.at(conj)) coords[mu] -= c * QTCoeff(QTLaurent(k));
  }
  return out;
}

EExpansion apply_N(const EExpansion& e) {
  EExpansion out(e.degree());
  for (const auto& [lam, c] : e.coeffs()) out.add(lam, c * QTCoeff::t(n_exponent(lam)));
  return out;
}

std::string to_string(const EExpansion& e) {
  std::vector<std::pair<QTCoeff, std::string>> terms;
  for (auto it = e.coeffs().rbegin(); it != e.coeffs().rend(); ++it) {
    terms.emplace_back(it->second, it->first.empty() ? std::string() : "e" + it->first.to_string());
  }
  return detail::render_combination(terms);
}

}  // namespace qtcsf
