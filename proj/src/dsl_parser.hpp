// Internal lexer and recursive-descent parser for the metric DSL.
// Shared by expr.cpp (single expressions) and metric.cpp (metric files).
#pragma once

#include "twistorlab/expr.hpp"

#include <cctype>
#include <charconv>
#include <string>
#include <vector>

namespace twistorlab::detail {

enum class Tok {
  Ident,
  Number,
  Plus,
  Minus,
  Star,
  Slash,
  Caret,
  LParen,
  RParen,
  Equals,
  End
};

struct Token {
  Tok kind = Tok::End;
  std::string text;
  double number = 0.0;
  int line = 1, col = 1;
};

inline std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  size_t i = 0;
  auto advance = [&](size_t n) {
    for (size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < text.size()) {
    const char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    Token t;
    t.line = line;
    t.col = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) ||
              text[j] == '_'))
        ++j;
      t.kind = Tok::Ident;
      t.text = text.substr(i, j - i);
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      size_t j = i;
      while (j < text.size() &&
             (std::isdigit(static_cast<unsigned char>(text[j])) ||
              text[j] == '.'))
        ++j;
      if (j < text.size() && (text[j] == 'e' || text[j] == 'E')) {
        size_t k = j + 1;
        if (k < text.size() && (text[k] == '+' || text[k] == '-')) ++k;
        if (k < text.size() &&
            std::isdigit(static_cast<unsigned char>(text[k]))) {
          while (k < text.size() &&
                 std::isdigit(static_cast<unsigned char>(text[k])))
            ++k;
          j = k;
        }
      }
      t.kind = Tok::Number;
      t.text = text.substr(i, j - i);
      const char* begin = t.text.data();
      const char* end = begin + t.text.size();
      double value = 0.0;
      auto res = std::from_chars(begin, end, value);
      if (res.ec != std::errc() || res.ptr != end)
        throw DslError("malformed number '" + t.text + "'", line, col);
      t.number = value;
      advance(j - i);
    } else {
      switch (c) {
        case '+':
          t.kind = Tok::Plus;
          break;
        case '-':
          t.kind = Tok::Minus;
          break;
        case '*':
          t.kind = Tok::Star;
          break;
        case '/':
          t.kind = Tok::Slash;
          break;
        case '^':
          t.kind = Tok::Caret;
          break;
        case '(':
          t.kind = Tok::LParen;
          break;
        case ')':
          t.kind = Tok::RParen;
          break;
        case '=':
          t.kind = Tok::Equals;
          break;
        default:
          throw DslError(std::string("unexpected character '") + c + "'", line,
                         col);
      }
      t.text = c;
      advance(1);
    }
    out.push_back(std::move(t));
  }
  Token end;
  end.kind = Tok::End;
  end.line = line;
  end.col = col;
  out.push_back(end);
  return out;
}

inline bool lookup_fn(const std::string& name, UnaryFn& fn) {
  if (name == "sin") fn = UnaryFn::Sin;
  else if (name == "cos") fn = UnaryFn::Cos;
  else if (name == "tan") fn = UnaryFn::Tan;
  else if (name == "exp") fn = UnaryFn::Exp;
  else if (name == "log") fn = UnaryFn::Log;
  else if (name == "sqrt") fn = UnaryFn::Sqrt;
  else if (name == "sinh") fn = UnaryFn::Sinh;
  else if (name == "cosh") fn = UnaryFn::Cosh;
  else return false;
  return true;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  const Token& peek() const { return toks_[pos_]; }
  Token take() { return toks_[pos_++]; }
  bool at_end() const { return peek().kind == Tok::End; }

  [[noreturn]] void fail(const std::string& msg, const Token& t) const {
    throw DslError(msg, t.line, t.col);
  }

  void expect(Tok kind, const char* what) {
    if (peek().kind != kind) fail(std::string("expected ") + what, peek());
    take();
  }

  ExprPtr parse_expr() {
    ExprPtr lhs;
    if (peek().kind == Tok::Minus) {
      const Token minus = take();
      auto n = node(ExprNode::Kind::Negate, minus);
      n->lhs = parse_term();
      lhs = n;
    } else {
      if (peek().kind == Tok::Plus) take();
      lhs = parse_term();
    }
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const Token op = take();
      auto n = node(ExprNode::Kind::Binary, op);
      n->op = op.kind == Tok::Plus ? BinaryOp::Add : BinaryOp::Sub;
      n->lhs = lhs;
      n->rhs = parse_term();
      lhs = n;
    }
    return lhs;
  }

 private:
  static std::shared_ptr<ExprNode> node(ExprNode::Kind kind, const Token& t) {
    auto n = std::make_shared<ExprNode>();
    n->kind = kind;
    n->line = t.line;
    n->col = t.col;
    return n;
  }

  ExprPtr parse_term() {
    ExprPtr lhs = parse_factor();
    while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
      const Token op = take();
      auto n = node(ExprNode::Kind::Binary, op);
      n->op = op.kind == Tok::Star ? BinaryOp::Mul : BinaryOp::Div;
      n->lhs = lhs;
      n->rhs = parse_factor();
      lhs = n;
    }
    return lhs;
  }

  ExprPtr parse_factor() {
    ExprPtr base = parse_atom();
    if (peek().kind == Tok::Caret) {
      const Token caret = take();
      if (peek().kind != Tok::Number) fail("expected integer exponent", peek());
      const Token expt = take();
      const int n = static_cast<int>(expt.number);
      if (expt.number != static_cast<double>(n) || n < 0 ||
          expt.text.find('.') != std::string::npos)
        fail("exponent must be a nonnegative integer", expt);
      auto p = node(ExprNode::Kind::IntPow, caret);
      p->exponent = n;
      p->lhs = base;
      return p;
    }
    return base;
  }

  ExprPtr parse_atom() {
    const Token t = peek();
    switch (t.kind) {
      case Tok::Number: {
        take();
        auto n = node(ExprNode::Kind::Constant, t);
        n->constant = t.number;
        return n;
      }
      case Tok::LParen: {
        take();
        ExprPtr e = parse_expr();
        expect(Tok::RParen, "')'");
        return e;
      }
      case Tok::Ident: {
        take();
        if (t.text.size() == 2 && t.text[0] == 'x' && t.text[1] >= '1' &&
            t.text[1] <= '4') {
          auto n = node(ExprNode::Kind::Coord, t);
          n->coord = t.text[1] - '0';
          return n;
        }
        UnaryFn fn;
        if (lookup_fn(t.text, fn)) {
          auto n = node(ExprNode::Kind::Unary, t);
          n->fn = fn;
          expect(Tok::LParen, "'(' after function name");
          n->lhs = parse_expr();
          expect(Tok::RParen, "')'");
          return n;
        }
        auto n = node(ExprNode::Kind::Param, t);
        n->param = t.text;
        return n;
      }
      default:
        fail("expected a number, coordinate, identifier or '('", t);
    }
  }

  std::vector<Token> toks_;
  size_t pos_ = 0;
};

}  // namespace twistorlab::detail
