#include "qtcsf/hecke.hpp"

#include <cctype>
#include <sstream>

#include "qtcsf/error.hpp"

namespace qtcsf {

namespace {

int mod(int i, int m) {
  const int r = i % m;
  return r < 0 ? r + m : r;
}

void require_two_vars(const XPoly& f) {
  if (f.nvars() < 2) throw DomainError("the Hecke action needs at least 2 variables");
}

struct Constants {
  QTCoeff t = QTCoeff::t(1);
  QTCoeff t_inv = QTCoeff::t(-1);
  QTCoeff t_minus_1 = QTCoeff::t(1) - 1;
  QTCoeff one_minus_t_inv = QTCoeff(1) - QTCoeff::t(-1);
};

const Constants& constants() {
  static const Constants c;
  return c;
}

// T_i on X_i^k X_{i+1}^l, written into out; p = i - 1 is the 0-based slot.
void T_monomial(int p, const Monomial& mono, const QTCoeff& c, XPoly& out) {
  const auto& K = constants();
  const int k = mono[p];
  const int l = mono[p + 1];
  Monomial x = mono;
  x[p] = l;
  x[p + 1] = k;
  if (l >= k) {
    out.add_term(x, c * K.t);
    if (l > k) {
      const QTCoeff s = c * K.t_minus_1;
      for (int j = 1; j <= l - k; ++j) {
        x[p] = l - j;
        x[p + 1] = k + j;
        out.add_term(x, s);
      }
    }
  } else {
    out.add_term(x, c);
    if (k - l > 1) {
      const QTCoeff s = -(c * K.t_minus_1);
      for (int j = 1; j <= k - l - 1; ++j) {
        x[p] = l + j;
        x[p + 1] = k - j;
        out.add_term(x, s);
      }
    }
  }
}

void T_inv_monomial(int p, const Monomial& mono, const QTCoeff& c, XPoly& out) {
  const auto& K = constants();
  const int k = mono[p];
  const int l = mono[p + 1];
  Monomial x = mono;
  x[p] = l;
  x[p + 1] = k;
  if (l > k) {
    out.add_term(x, c);
    if (l - k > 1) {
      const QTCoeff s = c * K.one_minus_t_inv;
      for (int j = 1; j <= l - k - 1; ++j) {
        x[p] = l - j;
        x[p + 1] = k + j;
        out.add_term(x, s);
      }
    }
  } else {
    out.add_term(x, c * K.t_inv);
    if (k > l) {
      const QTCoeff s = -(c * K.one_minus_t_inv);
      for (int j = 1; j <= k - l; ++j) {
        x[p] = l + j;
        x[p + 1] = k - j;
        out.add_term(x, s);
      }
    }
  }
}

template <class MonoFn>
XPoly map_terms(const XPoly& f, MonoFn&& fn) {
  XPoly out(f.nvars());
  for (const auto& [mono, c] : f.terms()) fn(mono, c, out);
  return out;
}

}  // namespace

XPoly apply_s(int i, const XPoly& f) {
  require_two_vars(f);
  const int m = f.nvars();
  const int r = mod(i, m);
  if (r != 0) {
    return map_terms(f, [r](const Monomial& mono, const QTCoeff& c, XPoly& out) {
      Monomial x = mono;
      std::swap(x[r - 1], x[r]);
      out.add_term(x, c);
    });
  }
  // X^a -> q^{a_1 - a_m - 1} X_1^{a_m + 1} X_2^{a_2} ... X_m^{a_1 - 1}
  return map_terms(f, [m](const Monomial& mono, const QTCoeff& c, XPoly& out) {
    Monomial x = mono;
    x[0] = mono[m - 1] + 1;
    x[m - 1] = mono[0] - 1;
    out.add_term(x, c * QTCoeff::q(mono[0] - mono[m - 1] - 1));
  });
}

XPoly apply_T(int i, const XPoly& f) {
  require_two_vars(f);
  const int m = f.nvars();
  const int r = mod(i, m);
  if (r == 0) return apply_pi(apply_T(m - 1, apply_pi_inv(f)));
  return map_terms(f, [r](const Monomial& mono, const QTCoeff& c, XPoly& out) {
    T_monomial(r - 1, mono, c, out);
  });
}

XPoly apply_T_inv(int i, const XPoly& f) {
  require_two_vars(f);
  const int m = f.nvars();
  const int r = mod(i, m);
  if (r == 0) return apply_pi(apply_T_inv(m - 1, apply_pi_inv(f)));
  return map_terms(f, [r](const Monomial& mono, const QTCoeff& c, XPoly& out) {
    T_inv_monomial(r - 1, mono, c, out);
  });
}

XPoly apply_pi(const XPoly& f) {
  const int m = f.nvars();
  return map_terms(f, [m](const Monomial& mono, const QTCoeff& c, XPoly& out) {
    Monomial x(m);
    x[0] = mono[m - 1] + 1;
    for (int k = 1; k < m; ++k) x[k] = mono[k - 1];
    out.add_term(x, mono[m - 1] == 0 ? c : c * QTCoeff::q(-mono[m - 1]));
  });
}

XPoly apply_pi_inv(const XPoly& f) {
  const int m = f.nvars();
  return map_terms(f, [m](const Monomial& mono, const QTCoeff& c, XPoly& out) {
    Monomial x(m);
    for (int k = 0; k + 1 < m; ++k) x[k] = mono[k + 1];
    x[m - 1] = mono[0] - 1;
    out.add_term(x, mono[0] == 1 ? c : c * QTCoeff::q(mono[0] - 1));
  });
}

XPoly apply_Y(int i, const XPoly& f) {
  const int m = f.nvars();
  if (i < 1 || i > m) {
    throw DomainError("Y index " + std::to_string(i) + " outside 1.." + std::to_string(m));
  }
  XPoly g = f;
  for (int j = i; j <= m - 1; ++j) g = apply_T_inv(j, g);
  g = apply_pi(g);
  for (int j = 1; j <= i - 1; ++j) g = apply_T(j, g);
  if (m - i != 0) g *= QTCoeff::t(m - i);
  return g;
}

// -------------------------------------------------------------------- words

HeckeWord parse_hecke_word(std::string_view text, int m) {
  HeckeWord w;
  std::istringstream in{std::string(text)};
  std::string tok;
  auto parse_index = [&](std::string_view digits) {
    if (digits.empty()) throw DomainError("missing index in Hecke atom '" + tok + "'");
    for (char ch : digits) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) {
        throw DomainError("bad index in Hecke atom '" + tok + "'");
      }
    }
    return std::stoi(std::string(digits));
  };
  while (in >> tok) {
    std::string_view s = tok;
    if (s == "P") {
      w.factors.push_back(HeckeAtom::Pi());
    } else if (s == "Pi") {
      w.factors.push_back(HeckeAtom::PiInv());
    } else if (s.starts_with("Ti")) {
      const int i = parse_index(s.substr(2));
      if (i >= m) throw DomainError("T index " + std::to_string(i) + " outside 0.." + std::to_string(m - 1));
      w.factors.push_back(HeckeAtom::Tinv(i));
    } else if (s.starts_with("T")) {
      const int i = parse_index(s.substr(1));
      if (i >= m) throw DomainError("T index " + std::to_string(i) + " outside 0.." + std::to_string(m - 1));
      w.factors.push_back(HeckeAtom::T(i));
    } else if (s.starts_with("Y")) {
      const int i = parse_index(s.substr(1));
      if (i < 1 || i > m) throw DomainError("Y index " + std::to_string(i) + " outside 1.." + std::to_string(m));
      w.factors.push_back(HeckeAtom::Y(i));
    } else {
      throw DomainError("unknown Hecke atom '" + tok + "'");
    }
  }
  return w;
}

std::string to_string(const HeckeWord& w) {
  std::string out;
  for (const auto& a : w.factors) {
    if (!out.empty()) out += ' ';
    switch (a.kind) {
      case HeckeAtom::Kind::T: out += "T" + std::to_string(a.index); break;
      case HeckeAtom::Kind::Tinv: out += "Ti" + std::to_string(a.index); break;
      case HeckeAtom::Kind::Pi: out += "P"; break;
      case HeckeAtom::Kind::PiInv: out += "Pi"; break;
      case HeckeAtom::Kind::Y: out += "Y" + std::to_string(a.index); break;
      case HeckeAtom::Kind::Scalar: out += a.scalar.to_string(); break;
    }
  }
  return out;
}

XPoly apply_atom(const HeckeAtom& a, const XPoly& f) {
  switch (a.kind) {
    case HeckeAtom::Kind::T: return apply_T(a.index, f);
    case HeckeAtom::Kind::Tinv: return apply_T_inv(a.index, f);
    case HeckeAtom::Kind::Pi: return apply_pi(f);
    case HeckeAtom::Kind::PiInv: return apply_pi_inv(f);
    case HeckeAtom::Kind::Y: return apply_Y(a.index, f);
    case HeckeAtom::Kind::Scalar: return f * a.scalar;
  }
  return f;
}

XPoly apply_word(const HeckeWord& w, const XPoly& f) {
  XPoly g = f;
  for (auto it = w.factors.rbegin(); it != w.factors.rend(); ++it) g = apply_atom(*it, g);
  return g;
}

}  // namespace qtcsf
