#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qtcsf/error.hpp"
#include "qtcsf/json_io.hpp"
#include "qtcsf/literal.hpp"
#include "qtcsf/symfn.hpp"

using namespace qtcsf;

namespace {
Partition P(std::vector<int> v) { return Partition(std::move(v)); }
const QTCoeff t = QTCoeff::t(1);
}  // namespace

TEST_CASE("partitions") {
  CHECK(partitions_of(0) == std::vector<Partition>{Partition()});
  CHECK(partitions_of(3) == std::vector<Partition>{P({3}), P({2, 1}), P({1, 1, 1})});
  CHECK(partitions_of(6).size() == 11);
  for (int n = 0; n <= 10; ++n) {
    const auto parts = partitions_of(n);
    const auto brute = oracle::brute_partitions(n);
    CHECK(parts.size() == brute.size());
    for (std::size_t k = 0; k < parts.size(); ++k) {
      CHECK(brute.count(parts[k].parts()) == 1);
      if (k) CHECK(parts[k - 1] > parts[k]);
    }
  }
  CHECK(P({3, 1, 1}).conjugate() == P({3, 1, 1}));
  CHECK(P({4, 2}).conjugate() == P({2, 2, 1, 1}));
  CHECK(P({2, 1}).join(P({3, 1})) == P({3, 2, 1, 1}));
  CHECK_THROWS_AS(P({1, 2}), DomainError);
  CHECK_THROWS_AS(P({2, 0}), DomainError);
}

TEST_CASE("elementary polynomials") {
  const int m = 3;
  const XPoly e1 = XPoly::variable(m, 1) + XPoly::variable(m, 2) + XPoly::variable(m, 3);
  CHECK(e_poly(P({1}), 2) == XPoly::variable(2, 1) + XPoly::variable(2, 2));
  CHECK(e_poly(P({2, 1}), 3) == oracle::brute_elementary(2, 3) * e1);
  CHECK(e_poly(P({3}), 2).is_zero());
  for (int mm = 1; mm <= 6; ++mm) {
    for (int r = 0; r <= mm + 1; ++r) CHECK(elementary(r, 1, mm, mm) == oracle::brute_elementary(r, mm));
  }
  CHECK(elementary(0, 4, 3, 3) == XPoly::constant(3, 1));
  CHECK(elementary(1, 4, 3, 3).is_zero());
}

TEST_CASE("statistics") {
  CHECK(e_stat(P({4})) == 0);
  CHECK(e_stat(P({2, 1})) == 2);
  CHECK(e_stat(P({1, 1, 1})) == 3);
  for (int n = 0; n <= 8; ++n) {
    for (const auto& lam : partitions_of(n)) CHECK(e_stat(lam) + n_exponent(lam) == n * (n - 1) / 2);
  }
}

TEST_CASE("e-expansion examples") {
  const EExpansion a = expand_in_e(e_poly(P({2, 1}), 3));
  CHECK(a.degree() == 3);
  CHECK(a.coeffs().size() == 1);
  CHECK(a.coeff(P({2, 1})) == QTCoeff(1));
  for (int n = 1; n <= 5; ++n) {
    const EExpansion b = expand_in_e(e_poly(P({n}), n) * t_factorial(n));
    CHECK(b.coeffs().size() == 1);
    CHECK(b.coeff(P({n})) == t_factorial(n));
  }
  CHECK_THROWS_AS(expand_in_e(XPoly::variable(3, 1)), DomainError);                         // not symmetric
  CHECK_THROWS_AS(expand_in_e(e_poly(P({1}), 3) + e_poly(P({2}), 3)), DomainError);        // not homogeneous
  CHECK_THROWS_AS(expand_in_e(e_poly(P({1, 1, 1}), 2)), DomainError);                      // m < n
}

TEST_CASE("e-expansion round trip on random combinations") {
  std::mt19937_64 rng(21);
  for (int n = 0; n <= 5; ++n) {
    for (int m = std::max(n, 1); m <= n + 1; ++m) {
      for (int trial = 0; trial < 4; ++trial) {
        EExpansion want(n);
        for (const auto& lam : partitions_of(n)) {
          if (rng() % 3 == 0) continue;
          want.add(lam, oracle::random_fraction(rng));
        }
        const XPoly f = to_xpoly(want, m);
        CHECK(expand_in_e(f, n) == want);
      }
    }
  }
}

TEST_CASE("the N automorphism") {
  EExpansion a(2);
  a.add(P({1, 1}), 1);
  CHECK(apply_N(a) == a);
  EExpansion b(3);
  b.add(P({2, 1}), t);
  CHECK(apply_N(b).coeff(P({2, 1})) == t * t);
  EExpansion c(3);
  c.add(P({3}), t_int(3));
  CHECK(apply_N(c).coeff(P({3})) == QTCoeff::t(3) * t_int(3));
  // multiplicative on joined partitions
  for (const auto& lam : partitions_of(4)) {
    for (const auto& mu : partitions_of(3)) {
      EExpansion x(4), y(3);
      x.add(lam, 1);
      y.add(mu, 1);
      CHECK(apply_N(x * y) == apply_N(x) * apply_N(y));
    }
  }
}

TEST_CASE("e-expansion rendering and json") {
  EExpansion e(3);
  e.add(P({3}), QTCoeff::t(3) + QTCoeff::t(4) + QTCoeff::t(5));
  e.add(P({2, 1}), t * t);
  CHECK(to_string(e) == "t^2*e[2,1] + (t^3+t^4+t^5)*e[3]");
  const json j = to_json(e);
  CHECK(j["coeffs"][0]["partition"] == json::array({3}));
  CHECK(j["coeffs"][1]["partition"] == json::array({2, 1}));
  CHECK(eexpansion_from_json(j) == e);
  CHECK(to_string(EExpansion(2)) == "0");
}

TEST_CASE("symmetric-function literals") {
  const SymLiteral lit = parse_sym_literal("e[2,1] + 2*e[3] - e[1,2]");
  REQUIRE(lit.terms.size() == 3);
  CHECK(lit.terms[1].first == 2);
  CHECK(lit.terms[2].first == -1);
  CHECK(lit.terms[2].second == P({2, 1}));
  CHECK(lit.to_xpoly(3) == e_poly(P({3}), 3) * QTCoeff(2));
  CHECK(parse_sym_literal("3").to_xpoly(2) == XPoly::constant(2, 3));
  CHECK(parse_sym_literal("  -e[1] ").to_xpoly(2) == -e_poly(P({1}), 2));
  CHECK(parse_sym_literal("e[]").to_xpoly(2) == XPoly::constant(2, 1));
  CHECK_THROWS_AS(parse_sym_literal(""), DomainError);
  CHECK_THROWS_AS(parse_sym_literal("e[0]"), DomainError);
  CHECK_THROWS_AS(parse_sym_literal("e[1] e[2]"), DomainError);
  CHECK_THROWS_AS(parse_sym_literal("x[1]"), DomainError);
}
