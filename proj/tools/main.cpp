// qtcsf command-line front end.
//
// Exit codes: 0 success / all identities hold, 1 an identity failed,
// 2 usage or precondition error.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "qtcsf/chromatic.hpp"
#include "qtcsf/error.hpp"
#include "qtcsf/graphs.hpp"
#include "qtcsf/hecke.hpp"
#include "qtcsf/json_io.hpp"
#include "qtcsf/literal.hpp"
#include "qtcsf/qmap.hpp"
#include "qtcsf/verify.hpp"

using namespace qtcsf;

namespace {

struct GraphFlags {
  std::string eseq, aseq, hess;

  void add(CLI::App* cmd) {
    auto* e = cmd->add_option("--eseq", eseq, "graph as an e-sequence, e.g. 0,0,1");
    auto* a = cmd->add_option("--aseq", aseq, "graph as an area sequence");
    auto* h = cmd->add_option("--hess", hess, "graph as a Hessenberg function");
    e->excludes(a)->excludes(h);
    a->excludes(h);
  }

  ESeq get() const {
    if (!eseq.empty()) return ESeq(parse_int_list(eseq));
    if (!aseq.empty()) return to_eseq(ASeq(parse_int_list(aseq)));
    if (!hess.empty()) return to_eseq(HSeq(parse_int_list(hess)));
    throw DomainError("one of --eseq, --aseq, --hess is required");
  }
};

struct Output {
  std::string format = "text";
  std::string basis = "monomial";

  void print(const XPoly& f) const {
    if (basis == "e") {
      print(expand_in_e(f));
    } else if (format == "json") {
      std::cout << to_json(f).dump() << "\n";
    } else {
      std::cout << to_string(f) << "\n";
    }
  }

  void print(const EExpansion& e) const {
    if (format == "json") {
      std::cout << to_json(e).dump() << "\n";
    } else {
      std::cout << to_string(e) << "\n";
    }
  }
};

int report_exit(const VerifyReport& report, const std::string& format) {
  if (format == "json") {
    std::cout << to_json(report).dump() << "\n";
  } else {
    std::cout << render_report(report);
  }
  std::cerr << "elapsed: " << report.elapsed << " s\n";
  return report.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact (q,t)-chromatic symmetric functions via the affine Hecke action"};
  app.require_subcommand(1);
  app.fallthrough();

  Output out;
  std::uint64_t seed = VerifyParams{}.seed;
  int jobs = 1;
  app.add_option("--format", out.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", seed, "seed for randomized suites");
  app.add_option("--jobs", jobs, "worker threads for verify")->check(CLI::PositiveNumber);

  std::function<int()> action;

  // compute
  auto* compute = app.add_subcommand("compute", "the (q,t)-chromatic symmetric function of a graph");
  GraphFlags compute_graph;
  int compute_m = 0;
  bool q1 = false, qinf = false;
  compute_graph.add(compute);
  compute->add_option("--m", compute_m, "number of variables")->required();
  compute->add_option("--basis", out.basis, "monomial or e")->check(CLI::IsMember({"monomial", "e"}));
  auto* q1_flag = compute->add_flag("--q1", q1, "specialize q = 1");
  compute->add_flag("--qinf", qinf, "take the limit q -> infinity")->excludes(q1_flag);
  compute->callback([&] {
    action = [&] {
      XPoly f = qt_csf(compute_graph.get(), compute_m);
      if (q1) f = specialize_q1(f);
      if (qinf) f = limit_q_infinity(f);
      out.print(f);
      return 0;
    };
  });

  // expand
  auto* expand = app.add_subcommand("expand", "e-expansion coefficients c_lambda of a graph");
  GraphFlags expand_graph;
  std::string via = "oracle";
  std::optional<int> expand_m;
  expand_graph.add(expand);
  expand->add_option("--via", via, "oracle (coloring sum) or qmap (inverse q-map of the Hecke side)")
      ->check(CLI::IsMember({"oracle", "qmap"}));
  expand->add_option("--m", expand_m, "variables for --via qmap (default 2n)");
  expand->callback([&] {
    action = [&] {
      const ESeq e = expand_graph.get();
      if (via == "oracle") {
        out.print(c_lambda(e));
      } else {
        const int m = expand_m.value_or(std::max(2 * e.n(), 2));
        out.print(q_map_inv_sym(qt_csf(e, m), e.n()));
      }
      return 0;
    };
  });

  // star
  auto* star_cmd = app.add_subcommand("star", "quantum product of two symmetric functions");
  std::string f_text, g_text;
  int star_m = 0;
  star_cmd->add_option("--f", f_text, "literal such as \"e[2,1] + 2*e[3]\"")->required();
  star_cmd->add_option("--g", g_text, "literal")->required();
  star_cmd->add_option("--m", star_m, "number of variables")->required();
  star_cmd->add_option("--basis", out.basis, "monomial or e")->check(CLI::IsMember({"monomial", "e"}));
  star_cmd->callback([&] {
    action = [&] {
      out.print(star(parse_sym_literal(f_text).to_xpoly(star_m), parse_sym_literal(g_text).to_xpoly(star_m)));
      return 0;
    };
  });

  // qt-elem
  auto* qt_elem = app.add_subcommand("qt-elem", "(q,t)-elementary symmetric function");
  std::string partition_text;
  int qt_elem_m = 0;
  qt_elem->add_option("--partition", partition_text, "e.g. 2,1")->required();
  qt_elem->add_option("--m", qt_elem_m, "number of variables")->required();
  qt_elem->add_option("--basis", out.basis, "monomial or e")->check(CLI::IsMember({"monomial", "e"}));
  qt_elem->callback([&] {
    action = [&] {
      auto parts = parse_int_list(partition_text);
      std::sort(parts.begin(), parts.end(), std::greater<>());
      const Partition lambda(parts);
      const XPoly a = qt_elementary(lambda, qt_elem_m);
      const XPoly b = qt_elementary_via_qmap(lambda, qt_elem_m);
      if (a != b) {
        std::cerr << "star route and q-map route disagree\n  star: " << to_string(a) << "\n  qmap: " << to_string(b) << "\n";
        return 1;
      }
      out.print(a);
      return 0;
    };
  });

  // verify
  auto* verify = app.add_subcommand("verify", "run an identity suite");
  std::string suite;
  VerifyParams params;
  std::optional<int> verify_m;
  verify->add_option("suite", suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--n", params.n, "graph size (top degree for relations)");
  verify->add_option("--m", verify_m, "number of variables");
  verify->add_option("--r", params.r, "top degree for pieri");
  verify->add_option("--samples", params.samples, "random inputs per (m, degree) for relations");
  verify->callback([&] {
    action = [&] {
      params.m = verify_m;
      params.seed = seed;
      params.jobs = jobs;
      return report_exit(run_suite(suite, params), out.format);
    };
  });

  // list-graphs
  auto* list = app.add_subcommand("list-graphs", "enumerate unit interval graphs on n vertices");
  int list_n = 3;
  list->add_option("--n", list_n, "number of vertices")->required();
  list->callback([&] {
    action = [&] {
      json all = json::array();
      for (const auto& e : enumerate_eseqs(list_n)) {
        if (out.format == "json") {
          json g = to_json(graph_of(e));
          all.push_back(json{{"eseq", e.values()},
                             {"aseq", to_aseq(e).values()},
                             {"hess", to_hseq(e).values()},
                             {"edges", g["edges"]}});
        } else {
          std::cout << "eseq " << e.to_string() << "  aseq " << to_aseq(e).to_string() << "  hess "
                    << to_hseq(e).to_string() << "\n";
        }
      }
      if (out.format == "json") std::cout << all.dump() << "\n";
      return 0;
    };
  });

  // hecke
  auto* hecke = app.add_subcommand("hecke", "apply a Hecke word such as \"T1 Ti2 P Y3\" (rightmost acts first)");
  std::string word_text, hecke_f = "1";
  int hecke_m = 0;
  hecke->add_option("--word", word_text, "whitespace-separated atoms T<i>, Ti<i>, P, Pi, Y<i>")->required();
  hecke->add_option("--m", hecke_m, "number of variables")->required();
  hecke->add_option("--f", hecke_f, "symmetric-function literal to act on (default 1)");
  hecke->callback([&] {
    action = [&] {
      if (hecke_m < 2) throw DomainError("hecke needs m >= 2");
      const HeckeWord w = parse_hecke_word(word_text, hecke_m);
      out.print(apply_word(w, parse_sym_literal(hecke_f).to_xpoly(hecke_m)));
      return 0;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  }
  try {
    return action ? action() : 2;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  }
}
