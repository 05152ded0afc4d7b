#include "levikohn/parser.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <vector>

namespace levikohn {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : InputError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      message_(message) {}

namespace {

constexpr unsigned kMaxExponent = 256;

enum class Tok { Number, Ident, Op, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::size_t line = 1;
  std::size_t col = 1;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0;
  auto advance = [&] {
    if (s[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++i;
  };
  while (i < s.size()) {
    const unsigned char ch = s[i];
    if (std::isspace(ch)) {
      advance();
      continue;
    }
    Token t;
    t.line = line;
    t.col = col;
    if (std::isdigit(ch)) {
      t.kind = Tok::Number;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        t.text += s[i];
        advance();
      }
      if (i < s.size() && (s[i] == '.' || s[i] == 'e' || s[i] == 'E'))
        throw ParseError(line, col, "decimal literals are not allowed; write p/q");
    } else if (std::isalpha(ch) || ch == '_') {
      t.kind = Tok::Ident;
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) {
        t.text += s[i];
        advance();
      }
    } else if (std::string_view("+-*/^()=").find(static_cast<char>(ch)) != std::string_view::npos) {
      t.kind = Tok::Op;
      t.text = std::string(1, static_cast<char>(ch));
      advance();
    } else if (ch == '.') {
      throw ParseError(line, col, "decimal literals are not allowed; write p/q");
    } else {
      throw ParseError(line, col, std::string("unexpected character '") + static_cast<char>(ch) + "'");
    }
    out.push_back(std::move(t));
  }
  Token end;
  end.line = line;
  end.col = col;
  out.push_back(end);
  return out;
}

struct VarRef {
  char stem = 'z';
  std::size_t index = 0;  // 1-based
};

// z12 -> {'z', 12}; anything else -> nullopt
std::optional<VarRef> as_variable(const std::string& id) {
  if (id.size() < 2) return std::nullopt;
  const char stem = id[0];
  if (std::string_view("zxyw").find(stem) == std::string_view::npos) return std::nullopt;
  if (!std::all_of(id.begin() + 1, id.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    return std::nullopt;
  if (id[1] == '0' || id.size() > 4) return std::nullopt;
  return VarRef{stem, static_cast<std::size_t>(std::stoul(id.substr(1)))};
}

class Parser {
 public:
  Parser(std::vector<Token> toks, std::size_t dim, std::string var)
      : toks_(std::move(toks)), dim_(dim), var_(std::move(var)) {}

  Polynomial parse_all() {
    Polynomial p = sum();
    if (peek().kind != Tok::End) fail(peek(), "unexpected '" + peek().text + "'");
    return p;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }
  bool at_op(char c) const { return peek().kind == Tok::Op && peek().text[0] == c; }

  [[noreturn]] void fail(const Token& t, const std::string& msg) const { throw ParseError(t.line, t.col, msg); }

  void expect(char c) {
    if (!at_op(c)) {
      const Token& t = peek();
      fail(t, std::string("expected '") + c + "'" + (t.kind == Tok::End ? " before end of input" : ""));
    }
    ++pos_;
  }

  Polynomial sum() {
    Polynomial acc = term();
    while (at_op('+') || at_op('-')) {
      const bool minus = next().text[0] == '-';
      Polynomial t = term();
      if (minus)
        acc -= t;
      else
        acc += t;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = unary();
    while (at_op('*') || at_op('/')) {
      const Token& op = next();
      const Token& at = peek();
      Polynomial rhs = unary();
      if (op.text[0] == '*') {
        acc = acc * rhs;
      } else {
        if (!rhs.is_constant()) fail(at, "division by a non-constant expression");
        const GaussianRational c = rhs.constant_term();
        if (c.is_zero()) fail(at, "division by zero");
        acc *= c.inverse();
      }
    }
    return acc;
  }

  Polynomial unary() {
    if (at_op('-')) {
      ++pos_;
      return -unary();
    }
    if (at_op('+')) {
      ++pos_;
      return unary();
    }
    return power();
  }

  Polynomial power() {
    Polynomial base = atom();
    if (!at_op('^')) return base;
    ++pos_;
    const Token& e = peek();
    if (e.kind != Tok::Number) fail(e, "exponent must be a non-negative integer literal");
    ++pos_;
    if (e.text.size() > 4 || std::stoul(e.text) > kMaxExponent)
      fail(e, "exponent exceeds " + std::to_string(kMaxExponent));
    return base.pow(static_cast<unsigned>(std::stoul(e.text)));
  }

  Polynomial atom() {
    const Token& t = next();
    switch (t.kind) {
      case Tok::Number:
        return Polynomial::constant(dim_, GaussianRational(mpq_class(mpz_class(t.text))));
      case Tok::Op:
        if (t.text[0] == '(') {
          Polynomial p = sum();
          expect(')');
          return p;
        }
        fail(t, "unexpected '" + t.text + "'");
      case Tok::End:
        fail(t, "unexpected end of input");
      case Tok::Ident:
        break;
    }
    if (t.text == "i") return Polynomial::constant(dim_, GaussianRational::i());
    if (t.text == "conj") {
      expect('(');
      Polynomial p = sum();
      expect(')');
      return conjugate(p);
    }
    const auto v = as_variable(t.text);
    if (!v) fail(t, "unknown identifier '" + t.text + "'");
    const bool ambient = var_ == "z";
    const bool allowed = ambient ? v->stem != 'w' : v->stem == var_[0];
    if (!allowed || v->index > dim_) fail(t, "unknown variable '" + t.text + "'");
    const std::size_t j = v->index - 1;
    switch (v->stem) {
      case 'x':
        return Polynomial::x(dim_, j);
      case 'y':
        return Polynomial::y(dim_, j);
      default:
        return Polynomial::z(dim_, j);
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::size_t dim_;
  std::string var_;
};

std::size_t infer_dim(const std::vector<Token>& toks, const std::string& var) {
  std::size_t d = 1;
  for (const auto& t : toks) {
    if (t.kind != Tok::Ident) continue;
    const auto v = as_variable(t.text);
    if (!v) continue;
    const bool match = var == "z" ? v->stem != 'w' : v->stem == var[0];
    if (match) d = std::max(d, v->index);
  }
  return d;
}

}  // namespace

Polynomial parse_expression(std::string_view text, const ParseOptions& opts) {
  if (opts.var != "z" && opts.var != "w") throw std::invalid_argument("variable stem must be z or w");
  auto toks = tokenize(text);
  if (toks.size() == 1) throw ParseError(toks[0].line, toks[0].col, "empty expression");
  const std::size_t dim = opts.dim == 0 ? infer_dim(toks, opts.var) : opts.dim;
  return Parser(std::move(toks), dim, opts.var).parse_all();
}

Polynomial parse_expression(std::string_view text, std::size_t dim) {
  ParseOptions o;
  o.dim = dim;
  return parse_expression(text, o);
}

Polynomial parse_defining_function(std::string_view text, std::size_t dim) {
  // Skip an optional "r =" prefix, keeping line/column positions of the rest intact.
  std::string body(text);
  const auto first = body.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && body[first] == 'r') {
    const auto eq = body.find_first_not_of(" \t\r\n", first + 1);
    if (eq != std::string::npos && body[eq] == '=') {
      body[first] = ' ';
      body[eq] = ' ';
    }
  }
  ParseOptions o;
  o.dim = dim;
  Polynomial r = parse_expression(body, o);
  if (!is_real(r)) throw InputError("defining function is not real: " + to_string(r));
  return r;
}

GaussianRational parse_constant(std::string_view text) {
  const Polynomial p = parse_expression(text, 1);
  if (!p.is_constant()) throw InputError("expected a constant, got '" + std::string(text) + "'");
  return p.constant_term();
}

}  // namespace levikohn
