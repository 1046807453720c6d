#include "qtcsf/graphs.hpp"

#include <charconv>
#include <map>
#include <numeric>

#include "qtcsf/error.hpp"

namespace qtcsf {

namespace {

std::string join_ints(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

[[noreturn]] void invalid(const std::string& what, const std::string& cond, int i) {
  throw DomainError("invalid " + what + ": " + cond + " fails at i=" + std::to_string(i));
}

}  // namespace

ESeq::ESeq(std::vector<int> e) : e_(std::move(e)) {
  for (int i = 1; i <= n(); ++i) {
    if ((*this)(i) < 0) invalid("e-sequence", "0 <= e(i)", i);
    if ((*this)(i) >= i) invalid("e-sequence", "e(i) < i", i);
    if (i < n() && (*this)(i) > (*this)(i + 1)) invalid("e-sequence", "e(i) <= e(i+1)", i);
  }
}

int ESeq::weight() const { return std::accumulate(e_.begin(), e_.end(), 0); }
std::string ESeq::to_string() const { return join_ints(e_); }

ASeq::ASeq(std::vector<int> a) : a_(std::move(a)) {
  for (int i = 1; i <= n(); ++i) {
    if ((*this)(i) < 0) invalid("area sequence", "0 <= a(i)", i);
    if ((*this)(i) >= i) invalid("area sequence", "a(i) < i", i);
    if (i < n() && (*this)(i + 1) > (*this)(i) + 1) invalid("area sequence", "a(i+1) <= a(i)+1", i);
  }
}

std::string ASeq::to_string() const { return join_ints(a_); }

HSeq::HSeq(std::vector<int> h) : h_(std::move(h)) {
  for (int i = 1; i <= n(); ++i) {
    if ((*this)(i) < i) invalid("Hessenberg function", "h(i) >= i", i);
    if ((*this)(i) > n()) invalid("Hessenberg function", "h(i) <= n", i);
    if (i < n() && (*this)(i) > (*this)(i + 1)) invalid("Hessenberg function", "h(i) <= h(i+1)", i);
  }
}

std::string HSeq::to_string() const { return join_ints(h_); }

ASeq to_aseq(const ESeq& e) {
  std::vector<int> a(e.n());
  for (int i = 1; i <= e.n(); ++i) a[i - 1] = i - 1 - e(i);
  return ASeq(std::move(a));
}

HSeq to_hseq(const ESeq& e) {
  const int n = e.n();
  std::vector<int> h(n);
  for (int i = 1; i <= n; ++i) h[i - 1] = n - e(n + 1 - i);
  return HSeq(std::move(h));
}

ESeq to_eseq(const ASeq& a) {
  std::vector<int> e(a.n());
  for (int i = 1; i <= a.n(); ++i) e[i - 1] = i - 1 - a(i);
  return ESeq(std::move(e));
}

ESeq to_eseq(const HSeq& h) {
  const int n = h.n();
  std::vector<int> e(n);
  for (int i = 1; i <= n; ++i) e[i - 1] = n - h(n + 1 - i);
  return ESeq(std::move(e));
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    std::string_view item = text.substr(pos, comma == std::string_view::npos ? text.size() - pos : comma - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (ec != std::errc() || ptr != item.data() + item.size() || item.empty()) {
      throw DomainError("not an integer list: '" + std::string(text) + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

void OrientedGraph::validate() const {
  for (const auto& [v, w] : edges) {
    if (v == w) throw DomainError("self-loop at vertex " + std::to_string(v));
    if (v < 1 || v > n || w < 1 || w > n) throw DomainError("edge endpoint outside 1..n");
  }
}

OrientedGraph edges_from_aseq(const ASeq& a) {
  OrientedGraph g;
  g.n = a.n();
  for (int i = 1; i <= a.n(); ++i) {
    for (int v = i - a(i); v < i; ++v) g.edges.emplace(v, i);
  }
  return g;
}

OrientedGraph graph_of(const ESeq& e) { return edges_from_aseq(to_aseq(e)); }

ESeq concat(const ESeq& e, const ESeq& f) {
  std::vector<int> out = e.values();
  for (int x : f.values()) out.push_back(e.n() + x);
  return ESeq(std::move(out));
}

ESeq complete_eseq(int n) { return ESeq(std::vector<int>(n, 0)); }

namespace {

void eseqs_rec(int n, std::vector<int>& cur, std::vector<ESeq>& out) {
  const int i = static_cast<int>(cur.size()) + 1;
  if (i > n) {
    out.emplace_back(cur);
    return;
  }
  const int lo = cur.empty() ? 0 : cur.back();
  for (int v = lo; v < i; ++v) {
    cur.push_back(v);
    eseqs_rec(n, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<ESeq> enumerate_eseqs(int n) {
  if (n < 0) throw DomainError("enumerate_eseqs: negative n");
  std::vector<ESeq> out;
  std::vector<int> cur;
  eseqs_rec(n, cur, out);
  return out;
}

std::vector<ModularTriple> modular_triples(int n) {
  std::vector<ModularTriple> out;
  for (const ESeq& seq : enumerate_eseqs(n)) {
    auto e = [&](int i) { return i == n + 1 ? n - 1 : seq(i); };
    // case (i)
    for (int i = 2; i <= n; ++i) {
      if (!(e(i - 1) < e(i) && e(i) < e(i + 1))) continue;
      if (e(e(i)) != e(e(i) + 1)) continue;
      std::vector<int> up = seq.values(), down = seq.values();
      up[i - 1] += 1;
      down[i - 1] -= 1;
      out.push_back({seq, ESeq(std::move(up)), ESeq(std::move(down)), 1, i});
    }
    // case (ii)
    for (int i = 1; i <= n - 1; ++i) {
      if (seq(i + 1) != seq(i) + 1) continue;
      bool hit = false;
      for (int j = 1; j <= n; ++j) hit = hit || seq(j) == i;
      if (hit) continue;
      std::vector<int> up = seq.values(), down = seq.values();
      up[i - 1] = up[i] = seq(i + 1);
      down[i - 1] = down[i] = seq(i);
      out.push_back({seq, ESeq(std::move(up)), ESeq(std::move(down)), 2, i});
    }
  }
  return out;
}

// ------------------------------------------------------------ coloring sum

namespace {

struct ColoringWalk {
  int n, m;
  // neighbours[v]: (u, v_is_head) for edges between v and earlier u < v
  std::vector<std::vector<std::pair<int, bool>>> back;
  std::vector<int> color;
  std::vector<int> counts;
  std::map<std::vector<int>, std::map<int, long long>> acc;

  void run(int v, int asc) {
    if (v > n) {
      ++acc[counts][asc];
      return;
    }
    for (int c = 1; c <= m; ++c) {
      int add = 0;
      bool ok = true;
      for (const auto& [u, v_is_head] : back[v]) {
        const int cu = color[u];
        if (cu == c) {
          ok = false;
          break;
        }
        // edge tail -> head ascends when colour(tail) < colour(head)
        if (v_is_head ? cu < c : c < cu) ++add;
      }
      if (!ok) continue;
      color[v] = c;
      ++counts[c - 1];
      run(v + 1, asc + add);
      --counts[c - 1];
    }
    color[v] = 0;
  }
};

}  // namespace

XPoly chromatic_qsf(const OrientedGraph& g, int m) {
  g.validate();
  XPoly out(m);
  ColoringWalk walk{g.n, m, {}, std::vector<int>(g.n + 1, 0), std::vector<int>(m, 0), {}};
  walk.back.resize(g.n + 1);
  for (const auto& [a, b] : g.edges) {
    if (a < b) {
      walk.back[b].emplace_back(a, true);
    } else {
      walk.back[a].emplace_back(b, false);
    }
  }
  walk.run(1, 0);
  for (const auto& [exps, by_asc] : walk.acc) {
    std::vector<LaurentTerm> terms;
    for (const auto& [asc, count] : by_asc) terms.push_back({0, asc, Integer(static_cast<long>(count))});
    out.add_term(Monomial::from_span(exps), QTLaurent::from_terms(std::move(terms)));
  }
  return out;
}

}  // namespace qtcsf
