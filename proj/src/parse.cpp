#include "qell/parse.hpp"

#include <cctype>
#include <stdexcept>

namespace qell {
namespace {

struct Parser {
  const RingPtr& ring;
  const std::string& s;
  size_t i = 0;

  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("parse error at position " +
                                std::to_string(i) + ": " + why);
  }

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }

  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }

  mpz_class integer() {
    skip_ws();
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) fail("expected integer");
    return mpz_class(s.substr(start, i - start));
  }

  long exponent() {
    bool paren = eat('(');
    bool neg = eat('-');
    long e = static_cast<long>(integer().get_si());
    if (paren && !eat(')')) fail("expected ')'");
    return neg ? -e : e;
  }

  std::string ident() {
    skip_ws();
    size_t start = i;
    while (i < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_' ||
            s[i] == '\''))
      ++i;
    if (i == start) fail("expected name");
    return s.substr(start, i - start);
  }

  Poly primary() {
    char c = peek();
    if (c == '(') {
      eat('(');
      Poly p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpq_class q(integer());
      if (eat('/')) q /= integer();
      q.canonicalize();
      return Poly::constant(ring, q);
    }
    std::string name = ident();
    int g = ring->gen_index(name);
    if (g < 0) fail("unknown generator " + name);
    return Poly::gen(ring, name);
  }

  Poly factor() {
    Poly p = primary();
    if (eat('^')) return p.pow(exponent());
    return p;
  }

  Poly term() {
    Poly p = factor();
    while (eat('*')) p *= factor();
    return p;
  }

  Poly expr() {
    Poly p = eat('-') ? Poly(-term()) : term();
    for (;;) {
      if (eat('+'))
        p += term();
      else if (eat('-'))
        p -= term();
      else
        return p;
    }
  }

  Poly run() {
    Poly p = expr();
    skip_ws();
    if (i != s.size()) fail("trailing input");
    return p;
  }
};

}  // namespace

Poly parse_poly(const RingPtr& ring, const std::string& text) {
  Parser p{ring, text};
  return p.run();
}

}  // namespace qell
