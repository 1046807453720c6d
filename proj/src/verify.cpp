#include "qtcsf/verify.hpp"

#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

#include "qtcsf/error.hpp"
#include "qtcsf/hecke.hpp"
#include "qtcsf/qmap.hpp"

namespace qtcsf {

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"relations", "modular", "stability", "symmetry",
                                                 "integrality", "q1", "qinf", "dist",
                                                 "pieri", "mult", "qmap"};
  return names;
}

XPoly random_xpoly(std::mt19937_64& rng, int m, int degree, int max_terms) {
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_int_distribution<int> slot(0, m - 1);
  std::uniform_int_distribution<int> small(-1, 1);
  std::uniform_int_distribution<int> value(1, 5);
  XPoly f(m);
  while (f.is_zero()) {
    const int count = nterms(rng);
    for (int k = 0; k < count; ++k) {
      Monomial mono(m);
      for (int d = 0; d < degree; ++d) ++mono[slot(rng)];
      const int sign = small(rng) < 0 ? -1 : 1;
      f.add_term(mono, QTLaurent::monomial(sign * value(rng), small(rng), small(rng)));
    }
  }
  return f;
}

namespace {

Verdict compare(const XPoly& lhs, const XPoly& rhs) { return {lhs == rhs, to_string(rhs), to_string(lhs)}; }
Verdict compare(const EExpansion& lhs, const EExpansion& rhs) {
  return {lhs == rhs, to_string(rhs), to_string(lhs)};
}

std::string with_m(const ESeq& e, int m) { return "e=" + e.to_string() + " m=" + std::to_string(m); }

int require_m(const VerifyParams& p, int fallback, int minimum, const std::string& why) {
  const int m = p.m.value_or(fallback);
  if (m < minimum) {
    throw DomainError("suite needs m >= " + std::to_string(minimum) + " (" + why + "), got m = " + std::to_string(m));
  }
  return m;
}

void relation_cases(const VerifyParams& p, std::vector<VerifyCase>& out) {
  const int top_m = p.m.value_or(5);
  if (top_m < 2 || top_m > kMaxVars) throw DomainError("relations: m must lie in 2.." + std::to_string(kMaxVars));
  std::mt19937_64 rng(p.seed);
  const QTCoeff t = QTCoeff::t(1);
  for (int m = 2; m <= top_m; ++m) {
    for (int d = 0; d <= p.n; ++d) {
      for (int s = 0; s < p.samples; ++s) {
        const XPoly f = random_xpoly(rng, m, d);
        const std::string tag = " m=" + std::to_string(m) + " deg=" + std::to_string(d) + " sample=" + std::to_string(s);
        out.push_back({"quadratic" + tag, [f, m, t] {
                         for (int i = 0; i < m; ++i) {
                           const XPoly Tf = apply_T(i, f);
                           const XPoly lhs = apply_T(i, Tf);
                           const XPoly rhs = Tf * (t - 1) + f * t;
                           if (lhs != rhs) return Verdict{false, to_string(rhs), "i=" + std::to_string(i) + ": " + to_string(lhs)};
                         }
                         return Verdict{true, {}, {}};
                       }});
        if (m > 2) {
          out.push_back({"braid" + tag, [f, m] {
                           for (int i = 0; i < m; ++i) {
                             const int j = (i + 1) % m;
                             const XPoly lhs = apply_T(i, apply_T(j, apply_T(i, f)));
                             const XPoly rhs = apply_T(j, apply_T(i, apply_T(j, f)));
                             if (lhs != rhs) return Verdict{false, to_string(rhs), "i=" + std::to_string(i) + ": " + to_string(lhs)};
                           }
                           return Verdict{true, {}, {}};
                         }});
        }
        if (m > 3) {
          out.push_back({"commutation" + tag, [f, m] {
                           for (int i = 0; i < m; ++i) {
                             for (int j = i + 2; j < m; ++j) {
                               if ((j + 1) % m == i) continue;
                               const XPoly lhs = apply_T(i, apply_T(j, f));
                               const XPoly rhs = apply_T(j, apply_T(i, f));
                               if (lhs != rhs) {
                                 return Verdict{false, to_string(rhs),
                                                "i=" + std::to_string(i) + " j=" + std::to_string(j) + ": " + to_string(lhs)};
                               }
                             }
                           }
                           return Verdict{true, {}, {}};
                         }});
        }
        out.push_back({"rotation" + tag, [f, m] {
                         for (int i = 0; i < m; ++i) {
                           const XPoly lhs = apply_pi(apply_T(i, f));
                           const XPoly rhs = apply_T(i + 1, apply_pi(f));
                           if (lhs != rhs) return Verdict{false, to_string(rhs), "i=" + std::to_string(i) + ": " + to_string(lhs)};
                         }
                         return Verdict{true, {}, {}};
                       }});
        out.push_back({"y-commute" + tag, [f, m] {
                         for (int i = 1; i <= m; ++i) {
                           for (int j = i + 1; j <= m; ++j) {
                             const XPoly lhs = apply_Y(i, apply_Y(j, f));
                             const XPoly rhs = apply_Y(j, apply_Y(i, f));
                             if (lhs != rhs) {
                               return Verdict{false, to_string(rhs),
                                              "i=" + std::to_string(i) + " j=" + std::to_string(j) + ": " + to_string(lhs)};
                             }
                           }
                         }
                         return Verdict{true, {}, {}};
                       }});
        out.push_back({"centrality" + tag, [f, m] {
                         const XPoly ef = apply_e_Y(2, f);
                         for (int i = 0; i < m; ++i) {
                           const XPoly lhs = apply_e_Y(2, apply_T(i, f));
                           const XPoly rhs = apply_T(i, ef);
                           if (lhs != rhs) return Verdict{false, to_string(rhs), "i=" + std::to_string(i) + ": " + to_string(lhs)};
                         }
                         return Verdict{true, {}, {}};
                       }});
      }
    }
  }
}

}  // namespace

std::vector<VerifyCase> suite_cases(const std::string& suite, const VerifyParams& p) {
  std::vector<VerifyCase> out;
  if (p.n < 0) throw DomainError("--n must be nonnegative");
  if (suite == "relations") {
    relation_cases(p, out);
  } else if (suite == "modular") {
    const int m = require_m(p, p.n + 1, 2, "Hecke action");
    for (const auto& tr : modular_triples(p.n)) {
      const std::string id = "e=" + tr.e.to_string() + " e'=" + tr.e1.to_string() + " e''=" + tr.e2.to_string() +
                             " case=" + std::to_string(tr.case_tag) + " i=" + std::to_string(tr.index) +
                             " m=" + std::to_string(m);
      out.push_back({id, [tr, m] {
                       const QTCoeff t = QTCoeff::t(1);
                       const XPoly lhs = qt_csf(tr.e, m) * (t + 1);
                       const XPoly rhs = qt_csf(tr.e1, m) * t + qt_csf(tr.e2, m);
                       if (lhs != rhs) return Verdict{false, to_string(rhs), "hecke: " + to_string(lhs)};
                       const XPoly olhs = chromatic_qsf(graph_of(tr.e), m) * (t + 1);
                       const XPoly orhs = chromatic_qsf(graph_of(tr.e1), m) * t + chromatic_qsf(graph_of(tr.e2), m);
                       if (olhs != orhs) return Verdict{false, to_string(orhs), "oracle: " + to_string(olhs)};
                       return Verdict{true, {}, {}};
                     }});
    }
  } else if (suite == "stability") {
    const int m = require_m(p, p.n + 2, 3, "needs some m' with 2 <= m' < m");
    for (const auto& e : enumerate_eseqs(p.n)) {
      for (int mp = 2; mp < m; ++mp) {
        out.push_back({with_m(e, m) + " m'=" + std::to_string(mp), [e, m, mp] { return check_stability(e, m, mp); }});
      }
    }
  } else if (suite == "symmetry" || suite == "integrality") {
    const int m = require_m(p, p.n + 1, 2, "Hecke action");
    const bool sym = suite == "symmetry";
    for (const auto& e : enumerate_eseqs(p.n)) {
      out.push_back({with_m(e, m), [e, m, sym] {
                       const XPoly f = qt_csf(e, m);
                       const bool ok = sym ? is_symmetric(f) : assert_integral(f);
                       return Verdict{ok, sym ? "symmetric" : "coefficients in Z[q^-1,t^±1]", to_string(f)};
                     }});
    }
  } else if (suite == "q1" || suite == "qinf") {
    const int m = require_m(p, std::max(p.n, 2), std::max(p.n, 2), "m >= n");
    const bool q1 = suite == "q1";
    for (const auto& e : enumerate_eseqs(p.n)) {
      out.push_back({with_m(e, m), [e, m, q1] { return q1 ? check_q1_collapse(e, m) : check_qinf_limit(e, m); }});
    }
  } else if (suite == "dist") {
    for (const auto& e : enumerate_eseqs(p.n)) {
      out.push_back({"e=" + e.to_string(), [e] { return check_dist_identity(e); }});
    }
  } else if (suite == "pieri") {
    if (p.r < 0) throw DomainError("--r must be nonnegative");
    for (int r = 0; r <= p.r; ++r) {
      const int m = require_m(p, 2 * r + 2, 2 * r + 2, "m >= 2(r+1)");
      out.push_back({"r=" + std::to_string(r) + " m=" + std::to_string(m), [r, m] { return check_pieri(r, m); }});
    }
  } else if (suite == "mult") {
    for (int n1 = 1; n1 < p.n; ++n1) {
      for (int n2 = 1; n1 + n2 <= p.n; ++n2) {
        const int m = require_m(p, 2 * (n1 + n2), 2 * (n1 + n2), "m >= 2(n+n')");
        for (const auto& e1 : enumerate_eseqs(n1)) {
          for (const auto& e2 : enumerate_eseqs(n2)) {
            out.push_back({"e=" + e1.to_string() + " e'=" + e2.to_string() + " m=" + std::to_string(m), [e1, e2, m] {
                             return compare(star(qt_csf(e1, m), qt_csf(e2, m)), qt_csf(concat(e1, e2), m));
                           }});
          }
        }
      }
    }
  } else if (suite == "qmap") {
    const int m = require_m(p, std::max(2 * p.n, 2), std::max(2 * p.n, 2), "m >= 2n");
    for (int r = 1; r <= std::min(p.n, m); ++r) {
      out.push_back({"e_" + std::to_string(r) + "(Y) m=" + std::to_string(m), [r, m] {
                       const XPoly rhs = elementary(r, 1, m, m) * QTCoeff::t(r * (r - 1) / 2);
                       return compare(q_map_elementary(Partition({r}), m), rhs);
                     }});
    }
    for (const auto& e : enumerate_eseqs(p.n)) {
      out.push_back({with_m(e, m), [e, m] { return compare(q_map_inv_sym(qt_csf(e, m), e.n()), c_lambda(e)); }});
    }
  } else {
    throw DomainError("unknown suite '" + suite + "'");
  }
  return out;
}

VerifyReport run_cases(const std::string& suite, const std::vector<VerifyCase>& cases, int jobs) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<std::optional<VerifyFailure>> results(cases.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    while (true) {
      const std::size_t k = next.fetch_add(1);
      if (k >= cases.size()) return;
      try {
        Verdict v = cases[k].check();
        if (!v.pass) results[k] = VerifyFailure{cases[k].id, std::move(v.expected), std::move(v.actual)};
      } catch (const std::exception& err) {
        results[k] = VerifyFailure{cases[k].id, "no error", std::string("error: ") + err.what()};
      }
    }
  };
  const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(cases.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  VerifyReport report;
  report.suite = suite;
  report.cases = static_cast<int>(cases.size());
  for (auto& r : results) {
    if (r) report.failures.push_back(std::move(*r));
  }
  report.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

VerifyReport run_suite(const std::string& suite, const VerifyParams& params) {
  return run_cases(suite, suite_cases(suite, params), params.jobs);
}

std::string render_report(const VerifyReport& report) {
  std::ostringstream out;
  out << "suite: " << report.suite << "\n";
  out << "cases: " << report.cases << "\n";
  out << "failures: " << report.failures.size() << "\n";
  if (!report.failures.empty()) {
    const auto& f = report.failures.front();
    out << "first counterexample: " << f.case_id << "\n";
    out << "  expected: " << f.expected << "\n";
    out << "  actual:   " << f.actual << "\n";
  }
  out << (report.passed() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

json to_json(const VerifyReport& report) {
  json failures = json::array();
  for (const auto& f : report.failures) {
    failures.push_back(json{{"case", f.case_id}, {"expected", f.expected}, {"actual", f.actual}});
  }
  return json{{"suite", report.suite}, {"cases", report.cases}, {"passed", report.passed()}, {"failures", failures}};
}

}  // namespace qtcsf
