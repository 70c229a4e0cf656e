#include "homaloidal/parse.hpp"

#include <cctype>
#include <map>

namespace homaloidal {

namespace {

struct Parser {
  const RingPtr& ring;
  std::string_view s;
  std::size_t pos = 0;
  std::map<std::string, FieldElem, std::less<>> gens;

  explicit Parser(const RingPtr& r, std::string_view text) : ring(r), s(text) {
    const Field* f = ring->field().get();
    while (f->kind() == FieldKind::extension) {
      gens.emplace(f->gen_letter(),
                   ring->field()->lift(*f, f->gen()));
      f = f->base().get();
    }
  }

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }

  bool peek(char c) {
    skip_ws();
    return pos < s.size() && s[pos] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos;
    return true;
  }

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos); }

  mpz_class integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos == start) fail("expected a number");
    return mpz_class(std::string(s.substr(start, pos - start)), 10);
  }

  unsigned exponent() {
    mpz_class e = integer();
    if (e > 40000) fail("exponent too large");
    return unsigned(e.get_ui());
  }

  Poly expr() {
    bool negate = accept('-');
    Poly r = term();
    if (negate) r = r.neg();
    for (;;) {
      if (accept('+'))
        r = r.add(term());
      else if (accept('-'))
        r = r.sub(term());
      else
        return r;
    }
  }

  Poly term() {
    Poly r = factor();
    while (accept('*')) r = r.mul(factor());
    return r;
  }

  Poly factor() {
    if (accept('-')) return factor().neg();
    Poly b = atom();
    if (accept('^')) return b.pow(exponent());
    return b;
  }

  Poly atom() {
    skip_ws();
    if (pos >= s.size()) fail("unexpected end of input");
    char c = s[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num = integer();
      if (accept('/')) {
        mpz_class den = integer();
        if (den == 0) fail("zero denominator");
        mpq_class q(num, den);
        q.canonicalize();
        return Poly::constant(ring, ring->field()->from_mpq(q));
      }
      return Poly::constant(ring, ring->field()->from_mpz(num));
    }
    if (c == '(') {
      ++pos;
      Poly r = expr();
      if (!accept(')')) fail("expected ')'");
      return r;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos;
      while (pos < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
        ++pos;
      std::string name(s.substr(start, pos - start));
      int v = ring->var_index(name);
      if (v >= 0) return Poly::variable(ring, v);
      auto it = gens.find(name);
      if (it != gens.end()) return Poly::constant(ring, it->second);
      pos = start;
      fail("unknown variable '" + name + "'");
    }
    if (c == '/') fail("division is only allowed inside a rational literal");
    fail(std::string("unexpected character '") + c + "'");
  }
};

}  // namespace

Poly parse_poly(const RingPtr& ring, std::string_view text) {
  Parser p(ring, text);
  p.skip_ws();
  if (p.pos >= text.size()) throw ParseError("empty polynomial", 0);
  Poly r = p.expr();
  p.skip_ws();
  if (p.pos < text.size()) p.fail("trailing input");
  return r;
}

}  // namespace homaloidal
