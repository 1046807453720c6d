#include "qtcsf/qmap.hpp"

#include <map>
#include <mutex>

#include "qtcsf/error.hpp"
#include "qtcsf/hecke.hpp"

namespace qtcsf {

YPoly::YPoly(XPoly p) : poly(std::move(p)) {
  if (!poly.is_polynomial()) throw DomainError("Y-polynomials must have nonnegative exponents");
}

namespace {

const XPoly& q_map_monomial(const Monomial& alpha, std::map<Monomial, XPoly>& memo) {
  auto it = memo.find(alpha);
  if (it != memo.end()) return it->second;
  const int m = alpha.size();
  int last = m - 1;
  while (last >= 0 && alpha[last] == 0) --last;
  XPoly image = XPoly::constant(m, 1);
  if (last >= 0) {
    Monomial rest = alpha;
    --rest[last];
    image = apply_Y(last + 1, q_map_monomial(rest, memo));
  }
  return memo.emplace(alpha, std::move(image)).first->second;
}

}  // namespace

XPoly q_map(const YPoly& f) {
  std::map<Monomial, XPoly> memo;
  XPoly out(f.nvars());
  for (const auto& [alpha, c] : f.poly.terms()) out += q_map_monomial(alpha, memo) * c;
  return out;
}

XPoly apply_e_Y(int r, const XPoly& g) {
  const int m = g.nvars();
  if (r < 0 || r > m) return XPoly(m);
  // G[k] = e_k(Y_1..Y_i) g after step i
  std::vector<XPoly> G(r + 1, XPoly(m));
  G[0] = g;
  for (int i = 1; i <= m; ++i) {
    for (int k = std::min(i, r); k >= 1; --k) {
      if (!G[k - 1].is_zero()) G[k] += apply_Y(i, G[k - 1]);
    }
  }
  return G[r];
}

namespace {

struct QMapCache {
  std::mutex mu;
  std::map<std::pair<int, Partition>, XPoly> images;
  std::map<std::pair<int, Partition>, EExpansion> coords;
};

QMapCache& cache() {
  static QMapCache c;
  return c;
}

}  // namespace

XPoly q_map_elementary(const Partition& lambda, int m) {
  auto& C = cache();
  {
    std::lock_guard lock(C.mu);
    auto it = C.images.find({m, lambda});
    if (it != C.images.end()) return it->second;
  }
  XPoly image(m);
  if (lambda.empty()) {
    image = XPoly::constant(m, 1);
  } else {
    const std::vector<int>& p = lambda.parts();
    const XPoly inner = q_map_elementary(Partition(std::vector<int>(p.begin() + 1, p.end())), m);
    image = apply_e_Y(p[0], inner);
  }
  std::lock_guard lock(C.mu);
  return C.images.emplace(std::make_pair(m, lambda), std::move(image)).first->second;
}

namespace {

const EExpansion& q_map_elementary_coords(const Partition& lambda, int m) {
  auto& C = cache();
  {
    std::lock_guard lock(C.mu);
    auto it = C.coords.find({m, lambda});
    if (it != C.coords.end()) return it->second;
  }
  EExpansion coords = expand_in_e(q_map_elementary(lambda, m), lambda.size());
  std::lock_guard lock(C.mu);
  return C.coords.emplace(std::make_pair(m, lambda), std::move(coords)).first->second;
}

// Solves A x = b over Q(q,t) by Gaussian elimination; throws if singular.
std::vector<QTCoeff> solve(std::vector<std::vector<QTCoeff>> A, std::vector<QTCoeff> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && A[pivot][col].is_zero()) ++pivot;
    if (pivot == n) throw DomainError("q_map_inv_sym: singular system (is m >= 2d?)");
    std::swap(A[pivot], A[col]);
    std::swap(b[pivot], b[col]);
    const QTCoeff inv = A[col][col].inverse();
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || A[row][col].is_zero()) continue;
      const QTCoeff factor = A[row][col] * inv;
      for (std::size_t k = col; k < n; ++k) {
        if (!A[col][k].is_zero()) A[row][k] -= factor * A[col][k];
      }
      b[row] -= factor * b[col];
    }
  }
  std::vector<QTCoeff> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / A[i][i];
  return x;
}

}  // namespace

EExpansion q_map_inv_sym(const XPoly& f) {
  if (f.is_zero()) return EExpansion(0);
  const auto d = f.homogeneous_degree();
  if (!d) throw DomainError("q_map_inv_sym: input is not homogeneous");
  return q_map_inv_sym(f, *d);
}

EExpansion q_map_inv_sym(const XPoly& f, int d) {
  const int m = f.nvars();
  if (m < 2 * d) {
    throw DomainError("q_map_inv_sym needs m >= 2d (m = " + std::to_string(m) + ", d = " +
                      std::to_string(d) + ")");
  }
  const EExpansion target = expand_in_e(f, d);
  EExpansion out(d);
  if (target.is_zero()) return out;
  const std::vector<Partition> parts = partitions_of(d);
  const std::size_t p = parts.size();
  std::vector<std::vector<QTCoeff>> A(p, std::vector<QTCoeff>(p));
  std::vector<QTCoeff> b(p);
  for (std::size_t j = 0; j < p; ++j) {
    const EExpansion& col = q_map_elementary_coords(parts[j], m);
    for (std::size_t i = 0; i < p; ++i) A[i][j] = col.coeff(parts[i]);
  }
  for (std::size_t i = 0; i < p; ++i) b[i] = target.coeff(parts[i]);
  const std::vector<QTCoeff> x = solve(std::move(A), std::move(b));
  for (std::size_t j = 0; j < p; ++j) out.add(parts[j], x[j]);
  return out;
}

XPoly q_map(const EExpansion& y, int m) {
  XPoly out(m);
  for (const auto& [lam, c] : y.coeffs()) out += q_map_elementary(lam, m) * c;
  return out;
}

XPoly star(const XPoly& f, const XPoly& g) {
  if (f.nvars() != g.nvars()) throw DomainError("star: mismatched number of variables");
  const int m = f.nvars();
  XPoly out(m);
  if (f.is_zero() || g.is_zero()) return out;
  const auto fd = f.degrees();
  const auto gd = g.degrees();
  const int top = *fd.rbegin() + *gd.rbegin();
  if (m < 2 * top) {
    throw DomainError("star needs m >= 2(deg f + deg g) (m = " + std::to_string(m) +
                      ", degree " + std::to_string(top) + ")");
  }
  std::vector<EExpansion> fy, gy;
  for (int d : fd) fy.push_back(q_map_inv_sym(f.homogeneous_part(d), d));
  for (int d : gd) gy.push_back(q_map_inv_sym(g.homogeneous_part(d), d));
  for (const auto& a : fy) {
    for (const auto& b : gy) out += q_map(a * b, m);
  }
  return out;
}

XPoly qt_elementary(const Partition& lambda, int m) {
  if (m < 2 * lambda.size()) throw DomainError("qt_elementary needs m >= 2n");
  if (lambda.empty()) return XPoly::constant(m, 1);
  const auto& p = lambda.parts();
  XPoly acc = elementary(p.back(), 1, m, m);
  for (auto it = p.rbegin() + 1; it != p.rend(); ++it) acc = star(elementary(*it, 1, m, m), acc);
  return acc;
}

XPoly qt_elementary_via_qmap(const Partition& lambda, int m) {
  return q_map_elementary(lambda, m) * QTCoeff::t(-n_exponent(lambda));
}

XPoly pieri_rhs(int r, int m) {
  const QTCoeff qi = QTCoeff::q(-1);
  return elementary(r + 1, 1, m, m) * ((QTCoeff(1) - qi) * t_int(r + 1)) +
         elementary(1, 1, m, m) * elementary(r, 1, m, m) * qi;
}

namespace {

XPoly partial_rhs(int r, int m, int a) {
  const QTCoeff qi = QTCoeff::q(-1);
  XPoly first(m), second(m);
  const XPoly e1 = elementary(1, 1, a, m);
  for (int k = 1; k <= a; ++k) {
    first += elementary(k, 1, a, m) * elementary(r - k + 1, a + 1, m, m) * t_int(k);
  }
  for (int k = 0; k <= a; ++k) {
    second += e1 * elementary(k, 1, a, m) * elementary(r - k, a + 1, m, m);
  }
  return first * (QTCoeff(1) - qi) + second * qi;
}

}  // namespace

Verdict check_pieri_partial(int r, int m, int a) {
  if (a < 1 || a > m) throw DomainError("check_pieri_partial needs 1 <= a <= m");
  XPoly cur = apply_pi(elementary(r, 1, m, m));
  XPoly acc = cur;
  for (int j = 1; j <= a - 1; ++j) {
    cur = apply_T(j, cur);
    acc += cur;
  }
  const XPoly rhs = partial_rhs(r, m, a);
  return {acc == rhs, to_string(rhs), to_string(acc)};
}

Verdict check_pieri(int r, int m) {
  if (m < 2 * (r + 1)) throw DomainError("check_pieri needs m >= 2(r+1)");
  const XPoly rhs = pieri_rhs(r, m);
  const XPoly lhs = star(elementary(1, 1, m, m), elementary(r, 1, m, m));
  if (lhs != rhs) return {false, to_string(rhs), to_string(lhs)};
  XPoly cur = apply_pi(elementary(r, 1, m, m));
  XPoly acc = cur;
  for (int a = 1; a <= m; ++a) {
    if (a > 1) {
      cur = apply_T(a - 1, cur);
      acc += cur;
    }
    const XPoly partial = partial_rhs(r, m, a);
    if (acc != partial) {
      return {false, "a=" + std::to_string(a) + ": " + to_string(partial),
              "a=" + std::to_string(a) + ": " + to_string(acc)};
    }
  }
  return {true, to_string(rhs), to_string(lhs)};
}

}  // namespace qtcsf
