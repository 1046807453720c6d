#include "qtcsf/json_io.hpp"

#include <limits>

#include "qtcsf/error.hpp"

namespace qtcsf {

namespace {

json integer_json(const Integer& z) {
  if (mpz_fits_slong_p(z.get_mpz_t()) && sizeof(long) >= 8) return json(static_cast<std::int64_t>(z.get_si()));
  return json(z.get_str());
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>());
    } catch (const std::invalid_argument&) {
    }
  }
  throw DomainError("expected an integer, got " + j.dump());
}

int int_from_json(const json& j) {
  if (!j.is_number_integer()) throw DomainError("expected an integer, got " + j.dump());
  const auto v = j.get<std::int64_t>();
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
    throw DomainError("integer out of range: " + j.dump());
  }
  return static_cast<int>(v);
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw DomainError(std::string("missing field '") + key + "'");
  return j.at(key);
}

const json& array_field(const json& j, const char* key) {
  const json& a = field(j, key);
  if (!a.is_array()) throw DomainError(std::string("field '") + key + "' must be an array");
  return a;
}

}  // namespace

json to_json(const QTLaurent& p) {
  json out = json::array();
  for (const auto& term : p.terms()) out.push_back(json::array({integer_json(term.coeff), term.qexp, term.texp}));
  return out;
}

json to_json(const QTCoeff& c) { return json{{"num", to_json(c.num())}, {"den", to_json(c.den())}}; }

json to_json(const XPoly& f) {
  json terms = json::array();
  for (const auto& [mono, c] : f.terms()) {
    json exp = json::array();
    for (int k = 0; k < mono.size(); ++k) exp.push_back(mono[k]);
    terms.push_back(json{{"exp", exp}, {"coeff", to_json(c)}});
  }
  return json{{"m", f.nvars()}, {"terms", terms}};
}

json to_json(const EExpansion& e) {
  json coeffs = json::array();
  for (const auto& [lam, c] : e.coeffs()) coeffs.push_back(json{{"partition", lam.parts()}, {"coeff", to_json(c)}});
  return json{{"n", e.degree()}, {"coeffs", coeffs}};
}

json to_json(const OrientedGraph& g) {
  json edges = json::array();
  for (const auto& [v, w] : g.edges) edges.push_back(json::array({v, w}));
  return json{{"n", g.n}, {"edges", edges}};
}

QTLaurent laurent_from_json(const json& j) {
  if (!j.is_array()) throw DomainError("expected an array of [c,qe,te] triples");
  std::vector<LaurentTerm> terms;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 3) throw DomainError("expected a [c,qe,te] triple, got " + t.dump());
    terms.push_back({int_from_json(t[1]), int_from_json(t[2]), integer_from_json(t[0])});
  }
  return QTLaurent::from_terms(std::move(terms));
}

QTCoeff qtcoeff_from_json(const json& j) {
  return QTCoeff(laurent_from_json(field(j, "num")), laurent_from_json(field(j, "den")));
}

XPoly xpoly_from_json(const json& j) {
  const int m = int_from_json(field(j, "m"));
  XPoly f(m);
  for (const auto& t : array_field(j, "terms")) {
    const json& exp = array_field(t, "exp");
    if (static_cast<int>(exp.size()) != m) throw DomainError("exponent vector length differs from m");
    Monomial mono(m);
    for (int k = 0; k < m; ++k) mono[k] = int_from_json(exp[k]);
    f.add_term(mono, qtcoeff_from_json(field(t, "coeff")));
  }
  return f;
}

EExpansion eexpansion_from_json(const json& j) {
  EExpansion e(int_from_json(field(j, "n")));
  for (const auto& t : array_field(j, "coeffs")) {
    std::vector<int> parts;
    for (const auto& p : array_field(t, "partition")) parts.push_back(int_from_json(p));
    e.add(Partition(std::move(parts)), qtcoeff_from_json(field(t, "coeff")));
  }
  return e;
}

OrientedGraph graph_from_json(const json& j) {
  OrientedGraph g;
  g.n = int_from_json(field(j, "n"));
  for (const auto& edge : array_field(j, "edges")) {
    if (!edge.is_array() || edge.size() != 2) throw DomainError("edge must be a pair");
    g.edges.emplace(int_from_json(edge[0]), int_from_json(edge[1]));
  }
  g.validate();
  return g;
}

}  // namespace qtcsf
