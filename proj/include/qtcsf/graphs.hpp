#pragma once

#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qtcsf/xpoly.hpp"

namespace qtcsf {

/// e with 0 <= e(i) < i and e(i) <= e(i+1). Stored 0-based: e()[i-1] = e(i).
class ESeq {
 public:
  ESeq() = default;
  /// Validates; the error names the violated inequality and index.
  explicit ESeq(std::vector<int> e);

  int n() const { return static_cast<int>(e_.size()); }
  /// 1-based accessor e(i).
  int operator()(int i) const { return e_[i - 1]; }
  const std::vector<int>& values() const { return e_; }
  /// |e| = sum of entries.
  int weight() const;
  std::string to_string() const;  // "0,0,1"

  auto operator<=>(const ESeq&) const = default;

 private:
  std::vector<int> e_;
};

/// a with 0 <= a(i) < i and a(i+1) <= a(i) + 1.
class ASeq {
 public:
  ASeq() = default;
  explicit ASeq(std::vector<int> a);
  int n() const { return static_cast<int>(a_.size()); }
  int operator()(int i) const { return a_[i - 1]; }
  const std::vector<int>& values() const { return a_; }
  std::string to_string() const;
  auto operator<=>(const ASeq&) const = default;

 private:
  std::vector<int> a_;
};

/// h with i <= h(i) <= n and h(i) <= h(i+1).
class HSeq {
 public:
  HSeq() = default;
  explicit HSeq(std::vector<int> h);
  int n() const { return static_cast<int>(h_.size()); }
  int operator()(int i) const { return h_[i - 1]; }
  const std::vector<int>& values() const { return h_; }
  std::string to_string() const;
  auto operator<=>(const HSeq&) const = default;

 private:
  std::vector<int> h_;
};

ASeq to_aseq(const ESeq& e);
HSeq to_hseq(const ESeq& e);
ESeq to_eseq(const ASeq& a);
ESeq to_eseq(const HSeq& h);

/// Comma-separated integers, e.g. "0,0,1".
std::vector<int> parse_int_list(std::string_view text);

/// Oriented graph on vertices 1..n.
struct OrientedGraph {
  int n = 0;
  std::set<std::pair<int, int>> edges;

  /// Throws on self-loops or out-of-range vertices.
  void validate() const;
  bool operator==(const OrientedGraph&) const = default;
};

OrientedGraph edges_from_aseq(const ASeq& a);
OrientedGraph graph_of(const ESeq& e);

/// Ordered disjoint union.
ESeq concat(const ESeq& e, const ESeq& f);
/// e_n = (0, ..., 0): the complete graph.
ESeq complete_eseq(int n);

/// All of E_n, in lexicographic order.
std::vector<ESeq> enumerate_eseqs(int n);

struct ModularTriple {
  ESeq e, e1, e2;  // (1+t) chi(e) = t chi(e1) + chi(e2)
  int case_tag = 0;  // 1 or 2
  int index = 0;     // the i of the condition
};

std::vector<ModularTriple> modular_triples(int n);

/// Coloring sum over proper colorings into {1..m} weighted by t^asc.
XPoly chromatic_qsf(const OrientedGraph& g, int m);

}  // namespace qtcsf
