#include "hweyl/expr.hpp"

#include <cctype>
#include <optional>
#include <string>

#include "hweyl/errors.hpp"
#include "hweyl/homstar.hpp"

namespace hweyl {
namespace {

enum class Tok { number, x, y, plus, minus, assoc, star, caret, lparen, rparen, end };

struct Token {
  Tok type;
  std::size_t pos;
  std::string text;  // number
  std::size_t index = 0;
};

class Lexer {
 public:
  explicit Lexer(std::string_view s) : s_(s) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      if (i_ >= s_.size()) {
        out.push_back({Tok::end, i_, {}});
        return out;
      }
      out.push_back(next());
    }
  }

 private:
  void skip_space() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  bool starts_with(std::string_view lit) const { return s_.substr(i_, lit.size()) == lit; }

  std::string digits() {
    std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    return std::string(s_.substr(start, i_ - start));
  }

  Token next() {
    const std::size_t pos = i_;
    char c = s_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string text = digits();
      if (i_ < s_.size() && s_[i_] == '/') {
        ++i_;
        std::string den = digits();
        if (den.empty()) throw ParseError("expected denominator after '/'", i_);
        text += "/" + den;
      }
      if (i_ < s_.size() && s_[i_] == '.') throw ParseError("decimal literals are not accepted; write p/q", i_);
      return {Tok::number, pos, text};
    }
    if (c == 'x' || c == 'y') {
      ++i_;
      std::string idx = digits();
      if (idx.empty()) throw ParseError(std::string("expected index after '") + c + "'", i_);
      Token t{c == 'x' ? Tok::x : Tok::y, pos, {}};
      t.index = std::stoul(idx);
      return t;
    }
    if (starts_with("\xC2\xB7")) {  // U+00B7 middle dot
      i_ += 2;
      return {Tok::assoc, pos, {}};
    }
    if (starts_with("\xE2\x8A\x9B")) {  // U+229B circled asterisk
      i_ += 3;
      return {Tok::star, pos, {}};
    }
    ++i_;
    switch (c) {
      case '+': return {Tok::plus, pos, {}};
      case '-': return {Tok::minus, pos, {}};
      case '*': return {Tok::assoc, pos, {}};
      case '@': return {Tok::star, pos, {}};
      case '^': return {Tok::caret, pos, {}};
      case '(': return {Tok::lparen, pos, {}};
      case ')': return {Tok::rparen, pos, {}};
      default: break;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos);
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

class Parser {
 public:
  Parser(std::vector<Token> toks, std::size_t n) : toks_(std::move(toks)), n_(n) {}

  Expr parse_all() {
    Expr e = sum();
    if (peek().type != Tok::end) throw ParseError("unexpected trailing input", peek().pos);
    return e;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& take() { return toks_[pos_++]; }

  static bool starts_operand(Tok t) {
    return t == Tok::number || t == Tok::x || t == Tok::y || t == Tok::lparen;
  }

  Expr sum() {
    Expr acc;
    if (peek().type == Tok::minus) {
      take();
      Expr operand = product();
      acc = Expr{Expr::Kind::neg, {}, 0, 0, {std::move(operand)}};
    } else {
      if (peek().type == Tok::plus) take();
      acc = product();
    }
    while (peek().type == Tok::plus || peek().type == Tok::minus) {
      Expr::Kind kind = take().type == Tok::plus ? Expr::Kind::add : Expr::Kind::sub;
      Expr rhs = product();
      acc = Expr{kind, {}, 0, 0, {std::move(acc), std::move(rhs)}};
    }
    return acc;
  }

  Expr product() {
    Expr acc = unary();
    std::optional<Expr::Kind> chain;
    while (true) {
      Tok t = peek().type;
      Expr::Kind kind;
      std::size_t at = peek().pos;
      if (t == Tok::assoc || t == Tok::star) {
        take();
        kind = t == Tok::assoc ? Expr::Kind::mul : Expr::Kind::star;
      } else if (starts_operand(t)) {
        kind = Expr::Kind::mul;
      } else {
        break;
      }
      if (chain && *chain != kind)
        throw ParseError("associative and star products mixed without parentheses", at);
      chain = kind;
      Expr rhs = unary();
      acc = Expr{kind, {}, 0, 0, {std::move(acc), std::move(rhs)}};
    }
    return acc;
  }

  Expr unary() {
    if (peek().type == Tok::minus) {
      take();
      Expr operand = unary();
      return Expr{Expr::Kind::neg, {}, 0, 0, {std::move(operand)}};
    }
    return power();
  }

  Expr power() {
    Expr base = primary();
    if (peek().type == Tok::caret) {
      take();
      const Token& e = take();
      if (e.type != Tok::number || e.text.find('/') != std::string::npos)
        throw ParseError("exponent must be a nonnegative integer", e.pos);
      if (e.text.size() > 6) throw ParseError("exponent too large", e.pos);
      return Expr{Expr::Kind::pow, {}, 0, static_cast<unsigned>(std::stoul(e.text)), {std::move(base)}};
    }
    return base;
  }

  Expr primary() {
    const Token& t = take();
    switch (t.type) {
      case Tok::number: {
        Expr e;
        e.kind = Expr::Kind::literal;
        e.value = parse_rational(t.text);
        return e;
      }
      case Tok::x:
      case Tok::y: {
        if (t.index < 1 || t.index > n_)
          throw IndexError("generator index " + std::to_string(t.index) + " at offset " + std::to_string(t.pos) +
                           " outside 1.." + std::to_string(n_));
        Expr e;
        e.kind = t.type == Tok::x ? Expr::Kind::x : Expr::Kind::y;
        e.index = t.index;
        return e;
      }
      case Tok::lparen: {
        Expr e = sum();
        if (peek().type != Tok::rparen) throw ParseError("expected ')'", peek().pos);
        take();
        return e;
      }
      case Tok::end:
        throw ParseError("unexpected end of input", t.pos);
      default:
        throw ParseError("expected a number, generator or '('", t.pos);
    }
  }

  std::vector<Token> toks_;
  std::size_t n_;
  std::size_t pos_ = 0;
};

std::string power_str(const char* name, std::size_t index, Exponent e) {
  std::string s = name + std::to_string(index);
  if (e > 1) s += "^" + std::to_string(e);
  return s;
}

// Appends "c*rest" for one signed term, where rest may be empty.
void append_term(std::string& out, bool first, const Rational& c, const std::string& rest) {
  Rational mag = abs(c);
  if (first) {
    if (c < 0) out += "-";
  } else {
    out += c < 0 ? " - " : " + ";
  }
  if (rest.empty()) {
    out += to_string(mag);
  } else if (mag == 1) {
    out += rest;
  } else {
    out += to_string(mag) + "*" + rest;
  }
}

}  // namespace

Expr parse(std::string_view text, std::size_t n) {
  if (n == 0) throw DimensionError("dimension must be positive");
  return Parser(Lexer(text).run(), n).parse_all();
}

WeylPoly eval(const Expr& e, const TwistVector& k) {
  const std::size_t n = k.dim();
  switch (e.kind) {
    case Expr::Kind::literal: return WeylPoly::constant(n, e.value);
    case Expr::Kind::x: return WeylPoly::x(n, e.index);
    case Expr::Kind::y: return WeylPoly::y(n, e.index);
    case Expr::Kind::add: return eval(e.args[0], k) + eval(e.args[1], k);
    case Expr::Kind::sub: return eval(e.args[0], k) - eval(e.args[1], k);
    case Expr::Kind::neg: return -eval(e.args[0], k);
    case Expr::Kind::mul: return mul_assoc(eval(e.args[0], k), eval(e.args[1], k));
    case Expr::Kind::star: return star(k, eval(e.args[0], k), eval(e.args[1], k));
    case Expr::Kind::pow: return power(eval(e.args[0], k), e.exponent);
  }
  return WeylPoly(n);
}

WeylPoly parse_poly(std::string_view text, const TwistVector& k) { return eval(parse(text, k.dim()), k); }

std::string format(const Monomial& m) {
  std::string s;
  auto sep = [&] {
    if (!s.empty()) s += "*";
  };
  for (std::size_t i = 0; i < m.dim(); ++i)
    if (m.y[i]) {
      sep();
      s += power_str("y", i + 1, m.y[i]);
    }
  for (std::size_t i = 0; i < m.dim(); ++i)
    if (m.x[i]) {
      sep();
      s += power_str("x", i + 1, m.x[i]);
    }
  return s;
}

std::string format(const WeylPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    append_term(out, first, c, format(m));
    first = false;
  }
  return out;
}

std::string format(const ParamPoly& p) {
  if (p.is_zero()) return "0";
  // Lowest parameter order first.
  std::vector<const ParamPoly::TermMap::value_type*> order;
  for (const auto& kv : p.terms()) order.push_back(&kv);
  std::stable_sort(order.begin(), order.end(), [](auto* a, auto* b) {
    Exponent da = 0, db = 0;
    for (auto e : a->first) da += e;
    for (auto e : b->first) db += e;
    if (da != db) return da < db;
    return a->first > b->first;
  });

  std::string out;
  bool first = true;
  for (const auto* kv : order) {
    const MultiIndex& idx = kv->first;
    const WeylPoly& coeff = kv->second;
    std::string tpart;
    for (std::size_t s = 0; s < idx.size(); ++s) {
      if (!idx[s]) continue;
      if (!tpart.empty()) tpart += "*";
      tpart += power_str("t", s + 1, idx[s]);
    }
    if (tpart.empty()) {
      std::string body = format(coeff);
      if (!first) out += body[0] == '-' ? " - " + body.substr(1) : " + " + body;
      else out += body;
    } else if (coeff.size() == 1) {
      const auto& [m, c] = *coeff.terms().begin();
      std::string mon = format(m);
      append_term(out, first, c, mon.empty() ? tpart : tpart + "*" + mon);
    } else {
      append_term(out, first, 1, tpart + "*(" + format(coeff) + ")");
    }
    first = false;
  }
  return out;
}

}  // namespace hweyl
