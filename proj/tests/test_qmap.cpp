#include <doctest.h>

#include "oracles.hpp"
#include "qtcsf/chromatic.hpp"
#include "qtcsf/error.hpp"
#include "qtcsf/hecke.hpp"
#include "qtcsf/qmap.hpp"
#include "qtcsf/symfn.hpp"

using namespace qtcsf;

namespace {
const QTCoeff q = QTCoeff::q(1);
const QTCoeff t = QTCoeff::t(1);
XPoly one(int m) { return XPoly::constant(m, 1); }
XPoly e(int r, int m) { return elementary(r, 1, m, m); }

// exact rank over Q(q,t)
int rank_of(std::vector<std::vector<QTCoeff>> A) {
  int rank = 0;
  const std::size_t rows = A.size(), cols = rows ? A[0].size() : 0;
  for (std::size_t col = 0; col < cols && rank < static_cast<int>(rows); ++col) {
    std::size_t p = rank;
    while (p < rows && A[p][col].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(A[p], A[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (A[r][col].is_zero()) continue;
      const QTCoeff f = A[r][col] / A[rank][col];
      for (std::size_t k = col; k < cols; ++k) A[r][k] -= f * A[rank][k];
    }
    ++rank;
  }
  return rank;
}

std::vector<Monomial> monomials_of_degree(int m, int d) {
  std::vector<Monomial> out;
  Monomial cur(m);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == m - 1) {
      cur[i] = left;
      out.push_back(cur);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      cur[i] = k;
      self(self, i + 1, left - k);
    }
  };
  rec(rec, 0, d);
  return out;
}
}  // namespace

TEST_CASE("q_map on elementary and square-free monomials") {
  CHECK(q_map(YPoly(one(3))) == one(3));
  for (int m = 2; m <= 5; ++m) {
    for (int r = 0; r <= m; ++r) {
      CHECK(q_map(YPoly(e(r, m))) == e(r, m) * QTCoeff::t(r * (r - 1) / 2));
      CHECK(apply_e_Y(r, one(m)) == e(r, m) * QTCoeff::t(r * (r - 1) / 2));
    }
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
      Monomial mono(m);
      for (int k = 0; k < m; ++k) mono[k] = (mask >> k) & 1;
      const int s = __builtin_popcount(mask);
      CHECK(q_map(YPoly(XPoly::monomial(mono))) == XPoly::monomial(mono, QTCoeff::t(s * (s - 1) / 2)));
    }
  }
  CHECK_THROWS_AS(YPoly(XPoly::monomial(Monomial{-1, 0})), DomainError);
}

TEST_CASE("q_map is injective on low degrees") {
  for (int m = 2; m <= 4; ++m) {
    for (int d = 0; d <= 3; ++d) {
      const auto monos = monomials_of_degree(m, d);
      std::vector<XPoly> images;
      std::set<Monomial> support;
      for (const auto& mono : monos) {
        images.push_back(q_map(YPoly(XPoly::monomial(mono))));
        for (const auto& [x, c] : images.back().terms()) support.insert(x);
      }
      std::vector<std::vector<QTCoeff>> A;
      for (const auto& img : images) {
        std::vector<QTCoeff> row;
        for (const auto& x : support) row.push_back(img.coeff(x));
        A.push_back(std::move(row));
      }
      CHECK(rank_of(A) == static_cast<int>(monos.size()));
    }
  }
}

TEST_CASE("q_map images of symmetric and non-symmetric inputs") {
  const int m = 4;
  for (int d = 1; d <= 3; ++d) {
    for (const auto& lam : partitions_of(d)) CHECK(is_symmetric(q_map(YPoly(e_poly(lam, m)))));
  }
  CHECK_FALSE(is_symmetric(q_map(YPoly(XPoly::variable(m, 1)))));
  CHECK_FALSE(is_symmetric(q_map(YPoly(XPoly::variable(m, 2) * XPoly::variable(m, 2)))));
}

TEST_CASE("q_map_elementary is compatible with truncation") {
  for (int d = 1; d <= 3; ++d) {
    for (const auto& lam : partitions_of(d)) {
      const XPoly big = q_map_elementary(lam, 6);
      for (int mp = 2; mp < 6; ++mp) CHECK(truncate(big, mp) == q_map_elementary(lam, mp));
    }
  }
}

TEST_CASE("inverse q-map") {
  for (int r = 1; r <= 3; ++r) {
    const EExpansion y = q_map_inv_sym(e(r, 2 * r) * QTCoeff::t(r * (r - 1) / 2));
    CHECK(y.coeffs().size() == 1);
    CHECK(y.coeff(Partition({r})) == QTCoeff(1));
  }
  const EExpansion unit = q_map_inv_sym(one(4), 0);
  CHECK(unit.coeff(Partition()) == QTCoeff(1));
  CHECK_THROWS_AS(q_map_inv_sym(e(2, 3), 2), DomainError);
  CHECK_THROWS_AS(q_map_inv_sym(XPoly::variable(4, 1), 1), DomainError);
  CHECK_THROWS_AS(q_map_inv_sym(e(1, 4) + e(2, 4)), DomainError);
  std::mt19937_64 rng(11);
  for (int d = 1; d <= 3; ++d) {
    EExpansion y(d);
    for (const auto& lam : partitions_of(d)) y.add(lam, oracle::random_laurent(rng));
    CHECK(q_map_inv_sym(q_map(y, 2 * d), d) == y);
  }
  for (int n = 1; n <= 3; ++n) {
    for (const auto& es : enumerate_eseqs(n)) CHECK(q_map_inv_sym(qt_csf(es, 2 * n), n) == c_lambda(es));
  }
}

TEST_CASE("star product") {
  for (int r = 0; r <= 2; ++r) {
    const int m = 2 * (r + 1);
    CHECK(star(one(m), e(r, m)) == e(r, m));
    CHECK(star(e(1, m), e(r, m)) == pieri_rhs(r, m));
  }
  const int m = 6;
  const XPoly f = e(1, m) * e(1, m) + e(2, m) * t;
  const XPoly g = e(1, m) * q;
  CHECK(star(f, g) == star(g, f));
  CHECK(specialize_q1(star(f, g)) == specialize_q1(f * g));
  CHECK(specialize_q1(star(e(2, m), e(1, m))) == e(2, m) * e(1, m));
  CHECK_THROWS_AS(star(e(2, 5), e(1, 5)), DomainError);
  CHECK_THROWS_AS(star(e(1, 4), XPoly::variable(4, 1)), DomainError);
}

TEST_CASE("(q,t)-elementary functions") {
  for (int r = 1; r <= 3; ++r) CHECK(qt_elementary(Partition({r}), 2 * r) == e(r, 2 * r));
  const XPoly e11 = e(2, 4) * ((QTCoeff(1) - QTCoeff::q(-1)) * t_int(2)) + e(1, 4) * e(1, 4) * QTCoeff::q(-1);
  CHECK(qt_elementary(Partition({1, 1}), 4) == e11);
  for (int n = 1; n <= 3; ++n) {
    for (const auto& lam : partitions_of(n)) {
      const int m = 2 * n;
      const XPoly a = qt_elementary(lam, m);
      CHECK(a == qt_elementary_via_qmap(lam, m));
      QTCoeff denom = 1;
      for (int p : lam.parts()) denom *= t_factorial(p);
      CHECK(limit_q_infinity(a) == e(n, m) * (t_factorial(n) / denom));
    }
  }
  CHECK_THROWS_AS(qt_elementary(Partition({2, 1}), 5), DomainError);
}

TEST_CASE("Pieri rule with partial sums") {
  for (int r = 0; r <= 3; ++r) {
    const int m = 2 * r + 2;
    CHECK(check_pieri(r, m));
    for (int a = 1; a <= m; ++a) CHECK(check_pieri_partial(r, m, a));
  }
  CHECK_THROWS_AS(check_pieri(2, 5), DomainError);
}

TEST_CASE("q-map is multiplicative on graph functions") {
  for (int n1 = 1; n1 <= 2; ++n1) {
    for (int n2 = 1; n1 + n2 <= 3; ++n2) {
      const int m = 2 * (n1 + n2);
      for (const auto& a : enumerate_eseqs(n1)) {
        for (const auto& b : enumerate_eseqs(n2)) {
          CHECK(star(qt_csf(a, m), qt_csf(b, m)) == qt_csf(concat(a, b), m));
        }
      }
    }
  }
}
