#include "altq/parse.hpp"

#include <cctype>

namespace altq {

namespace {

struct Scanner {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }

  long integer() {
    skip_ws();
    bool neg = eat('-');
    if (!neg) eat('+');
    skip_ws();
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      throw ParseError("expected integer at position " + std::to_string(pos) + " in '" + s + "'");
    long v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      v = v * 10 + (s[pos++] - '0');
    return neg ? -v : v;
  }

  RatFuncQ expr();
  RatFuncQ term();
  RatFuncQ factor();
  RatFuncQ atom();
};

RatFuncQ Scanner::atom() {
  skip_ws();
  if (eat('(')) {
    RatFuncQ v = expr();
    if (!eat(')')) throw ParseError("missing ')' in '" + s + "'");
    return v;
  }
  char c = peek();
  if (c == 'q') {
    ++pos;
    return rf_q();
  }
  if (c == 's') {
    ++pos;
    return RatFuncQ::s_power(1);
  }
  if (std::isdigit(static_cast<unsigned char>(c))) {
    long num = integer();
    if (eat('/')) {
      long den = integer();
      if (den == 0) throw ParseError("division by zero in '" + s + "'");
      return RatFuncQ(mpq_class(num, den));
    }
    return RatFuncQ(num);
  }
  throw ParseError("unexpected character '" + std::string(1, c) + "' in '" + s + "'");
}

RatFuncQ Scanner::factor() {
  if (eat('-')) return -factor();
  RatFuncQ base = atom();
  if (eat('^')) {
    long e = integer();
    RatFuncQ r(1);
    RatFuncQ b = e < 0 ? base.inverse() : base;
    for (long i = 0; i < (e < 0 ? -e : e); ++i) r *= b;
    return r;
  }
  return base;
}

RatFuncQ Scanner::term() {
  RatFuncQ v = factor();
  for (;;) {
    if (eat('*')) {
      v *= factor();
    } else if (peek() == '/') {
      // Division only when not part of a rational literal (handled in atom).
      ++pos;
      v /= factor();
    } else {
      break;
    }
  }
  return v;
}

RatFuncQ Scanner::expr() {
  RatFuncQ v = term();
  for (;;) {
    if (eat('+')) {
      v += term();
    } else if (eat('-')) {
      v -= term();
    } else {
      break;
    }
  }
  return v;
}

}  // namespace

RatFuncQ parse_scalar(const std::string& text) {
  Scanner sc{text};
  RatFuncQ v = sc.expr();
  if (!sc.done()) throw ParseError("trailing characters in '" + text + "'");
  return v;
}

long parse_two_j(const std::string& text) {
  Scanner sc{text};
  long num = sc.integer();
  long den = 1;
  if (sc.eat('/')) den = sc.integer();
  if (!sc.done() || (den != 1 && den != 2) || num < 0)
    throw ParseError("spin must be a nonnegative integer or half-integer: '" + text + "'");
  return den == 1 ? 2 * num : num;
}

}  // namespace altq
