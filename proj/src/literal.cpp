#include "qtcsf/literal.hpp"

#include <algorithm>
#include <cctype>

#include "qtcsf/error.hpp"

namespace qtcsf {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  SymLiteral parse() {
    SymLiteral out;
    skip();
    if (at_end()) fail("empty expression");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      out.terms.push_back(term(sign));
      first = false;
      skip();
    }
    return out;
  }

 private:
  std::pair<Integer, Partition> term(int sign) {
    Integer coeff = sign;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff *= integer();
      skip();
      if (peek() != '*') return {coeff, Partition()};
      get();
      skip();
    }
    if (peek() != 'e') fail("expected e[...]");
    get();
    skip();
    if (get() != '[') fail("expected '['");
    std::vector<int> parts;
    skip();
    if (peek() != ']') {
      while (true) {
        skip();
        const Integer v = integer();
        if (v <= 0 || v > 1000) fail("partition parts must be positive");
        parts.push_back(static_cast<int>(v.get_si()));
        skip();
        if (peek() == ',') {
          get();
          continue;
        }
        break;
      }
    }
    if (get() != ']') fail("expected ']'");
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return {coeff, Partition(std::move(parts))};
  }

  Integer integer() {
    std::string digits;
    while (std::isdigit(static_cast<unsigned char>(peek()))) digits += get();
    if (digits.empty()) fail("expected an integer");
    return Integer(digits);
  }

  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  char get() { return at_end() ? '\0' : s_[pos_++]; }
  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw DomainError("cannot parse '" + std::string(s_) + "' at position " + std::to_string(pos_) + ": " + what);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

SymLiteral parse_sym_literal(std::string_view text) { return Parser(text).parse(); }

XPoly SymLiteral::to_xpoly(int m) const {
  XPoly out(m);
  for (const auto& [c, lam] : terms) out += e_poly(lam, m) * QTCoeff(QTLaurent(c));
  return out;
}

}  // namespace qtcsf
