#pragma once

// Independent reference computations used by the tests. Nothing here calls
// the code paths being tested except for basic XPoly/QTCoeff arithmetic.

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "qtcsf/coeff.hpp"
#include "qtcsf/graphs.hpp"
#include "qtcsf/hecke.hpp"
#include "qtcsf/xpoly.hpp"

namespace oracle {

using namespace qtcsf;

/// Catalan number via the product formula.
inline long catalan(int n) {
  long c = 1;
  for (int k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

/// All integer sequences with 0 <= e(i) < i, filtered by monotonicity.
inline std::vector<std::vector<int>> brute_eseqs(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(n, 0);
  while (true) {
    bool ok = true;
    for (int i = 0; i + 1 < n; ++i) ok = ok && cur[i] <= cur[i + 1];
    if (ok) out.push_back(cur);
    int k = n - 1;
    while (k >= 0 && cur[k] == k) {
      cur[k] = 0;
      --k;
    }
    if (k < 0) break;
    ++cur[k];
  }
  return out;
}

/// Partitions of n obtained by sorting all compositions.
inline std::set<std::vector<int>> brute_partitions(int n) {
  std::set<std::vector<int>> out;
  if (n == 0) {
    out.insert(std::vector<int>{});
    return out;
  }
  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::vector<int> parts;
    int run = 1;
    for (int k = 0; k < n - 1; ++k) {
      if (mask & (1u << k)) {
        parts.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    parts.push_back(run);
    std::sort(parts.rbegin(), parts.rend());
    out.insert(parts);
  }
  return out;
}

/// e_r(X_1..X_m) by scanning all bitmasks.
inline XPoly brute_elementary(int r, int m) {
  XPoly out(m);
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    if (__builtin_popcount(mask) != r) continue;
    Monomial mono(m);
    for (int k = 0; k < m; ++k) mono[k] = (mask >> k) & 1;
    out.add_term(mono, 1);
  }
  return out;
}

/// Checks T_i by its defining divided-difference relation, multiplied out:
/// (1 - X_i X_{i+1}^{-1}) (T_i F - t s_i F) = (t - 1)(F - s_i F),
/// where X_0 = q X_m for the affine index.
inline bool T_satisfies_divided_difference(int i, const XPoly& f) {
  const int m = f.nvars();
  const int r = ((i % m) + m) % m;
  Monomial ratio(m);
  QTCoeff scale = 1;
  if (r == 0) {
    ratio[m - 1] += 1;
    ratio[0] -= 1;
    scale = QTCoeff::q(1);
  } else {
    ratio[r - 1] += 1;
    ratio[r] -= 1;
  }
  const XPoly factor = XPoly::constant(m, 1) - XPoly::monomial(ratio, scale);
  const QTCoeff t = QTCoeff::t(1);
  const XPoly sf = apply_s(r, f);
  const XPoly lhs = factor * (apply_T(r, f) - sf * t);
  const XPoly rhs = (f - sf) * (t - 1);
  return lhs == rhs;
}

/// Same check for T_i^{-1} written as T_i^{-1} = t^{-1} T_i - (1 - t^{-1}).
inline bool T_inv_matches_quadratic(int i, const XPoly& f) {
  const XPoly expected = apply_T(i, f) * QTCoeff::t(-1) - f * (QTCoeff(1) - QTCoeff::t(-1));
  return apply_T_inv(i, f) == expected;
}

/// Modular triples from the Hessenberg-side definition, translated back.
struct HTriple {
  std::vector<int> e, e1, e2;
  auto operator<=>(const HTriple&) const = default;
};

inline std::set<HTriple> modular_triples_via_hessenberg(int n) {
  std::set<HTriple> out;
  auto to_e = [](const std::vector<int>& h) { return to_eseq(HSeq(h)).values(); };
  for (const auto& es : brute_eseqs(n)) {
    const std::vector<int> h = to_hseq(ESeq(es)).values();
    auto H = [&](int i) { return i == 0 ? 1 : h[i - 1]; };
    for (int i = 1; i <= n - 1; ++i) {
      // (i): h(i-1) < h(i) < h(i+1) and h(h(i)) = h(h(i)+1)
      if (H(i - 1) < H(i) && H(i) < H(i + 1) && H(i) + 1 <= n && H(H(i)) == H(H(i) + 1)) {
        auto h1 = h, h2 = h;
        h1[i - 1] -= 1;
        h2[i - 1] += 1;
        out.insert({es, to_e(h1), to_e(h2)});
      }
      // (ii): h(i+1) = h(i)+1 and no j with h(j) = i
      if (H(i + 1) == H(i) + 1 && std::find(h.begin(), h.end(), i) == h.end()) {
        auto h1 = h, h2 = h;
        h1[i - 1] = h1[i] = H(i);
        h2[i - 1] = h2[i] = H(i + 1);
        out.insert({es, to_e(h1), to_e(h2)});
      }
    }
  }
  return out;
}

/// Random Laurent polynomial coefficient with small support.
inline QTCoeff random_laurent(std::mt19937_64& rng, int spread = 2, int terms = 3) {
  std::uniform_int_distribution<int> e(-spread, spread), c(-4, 4), k(1, terms);
  std::vector<LaurentTerm> out;
  const int count = k(rng);
  for (int i = 0; i < count; ++i) out.push_back({e(rng), e(rng), Integer(c(rng))});
  return QTLaurent::from_terms(std::move(out));
}

/// Random element of Q(q,t) with a nonzero denominator.
inline QTCoeff random_fraction(std::mt19937_64& rng) {
  QTCoeff den;
  while (den.is_zero()) den = random_laurent(rng, 2, 2);
  return random_laurent(rng) / den;
}

/// Cross-multiplication equality a/b == c/d, independent of normal forms.
inline bool same_fraction(const QTCoeff& x, const QTCoeff& y) {
  return x.num() * y.den() == y.num() * x.den();
}

}  // namespace oracle
