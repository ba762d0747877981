#include "twistorlab/expr.hpp"

#include "dsl_parser.hpp"

#include <sstream>

namespace twistorlab {

ExprPtr make_constant(double value) {
  auto n = std::make_shared<ExprNode>();
  n->kind = ExprNode::Kind::Constant;
  n->constant = value;
  return n;
}

ExprPtr make_coord(int index) {
  auto n = std::make_shared<ExprNode>();
  n->kind = ExprNode::Kind::Coord;
  n->coord = index;
  return n;
}

ExprPtr make_param(const std::string& name) {
  auto n = std::make_shared<ExprNode>();
  n->kind = ExprNode::Kind::Param;
  n->param = name;
  return n;
}

ExprPtr make_unary(UnaryFn fn, ExprPtr arg) {
  auto n = std::make_shared<ExprNode>();
  n->kind = ExprNode::Kind::Unary;
  n->fn = fn;
  n->lhs = std::move(arg);
  return n;
}

ExprPtr make_binary(BinaryOp op, ExprPtr lhs, ExprPtr rhs) {
  auto n = std::make_shared<ExprNode>();
  n->kind = ExprNode::Kind::Binary;
  n->op = op;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return n;
}

ExprPtr make_pow(ExprPtr base, int exponent) {
  auto n = std::make_shared<ExprNode>();
  n->kind = ExprNode::Kind::IntPow;
  n->exponent = exponent;
  n->lhs = std::move(base);
  return n;
}

ExprPtr make_negate(ExprPtr arg) {
  auto n = std::make_shared<ExprNode>();
  n->kind = ExprNode::Kind::Negate;
  n->lhs = std::move(arg);
  return n;
}

bool expr_equal(const ExprPtr& a, const ExprPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case ExprNode::Kind::Constant:
      return a->constant == b->constant;
    case ExprNode::Kind::Coord:
      return a->coord == b->coord;
    case ExprNode::Kind::Param:
      return a->param == b->param;
    case ExprNode::Kind::Unary:
      return a->fn == b->fn && expr_equal(a->lhs, b->lhs);
    case ExprNode::Kind::Binary:
      return a->op == b->op && expr_equal(a->lhs, b->lhs) &&
             expr_equal(a->rhs, b->rhs);
    case ExprNode::Kind::IntPow:
      return a->exponent == b->exponent && expr_equal(a->lhs, b->lhs);
    case ExprNode::Kind::Negate:
      return expr_equal(a->lhs, b->lhs);
  }
  return false;
}

namespace {

const char* fn_name(UnaryFn fn) {
  switch (fn) {
    case UnaryFn::Sin:
      return "sin";
    case UnaryFn::Cos:
      return "cos";
    case UnaryFn::Tan:
      return "tan";
    case UnaryFn::Exp:
      return "exp";
    case UnaryFn::Log:
      return "log";
    case UnaryFn::Sqrt:
      return "sqrt";
    case UnaryFn::Sinh:
      return "sinh";
    case UnaryFn::Cosh:
      return "cosh";
  }
  return "?";
}

// Precedence levels: 0 additive, 1 multiplicative, 2 power, 3 atom.
int precedence(const ExprNode& n) {
  switch (n.kind) {
    case ExprNode::Kind::Binary:
      return (n.op == BinaryOp::Add || n.op == BinaryOp::Sub) ? 0 : 1;
    case ExprNode::Kind::Negate:
      return 0;
    case ExprNode::Kind::IntPow:
      return 2;
    default:
      return 3;
  }
}

void print(const ExprPtr& e, std::ostream& os, int parent_prec) {
  const int prec = precedence(*e);
  const bool parens = prec < parent_prec;
  if (parens) os << "(";
  switch (e->kind) {
    case ExprNode::Kind::Constant: {
      std::ostringstream tmp;
      tmp.precision(17);
      tmp << e->constant;
      os << tmp.str();
      break;
    }
    case ExprNode::Kind::Coord:
      os << "x" << e->coord;
      break;
    case ExprNode::Kind::Param:
      os << e->param;
      break;
    case ExprNode::Kind::Unary:
      os << fn_name(e->fn) << "(";
      print(e->lhs, os, 0);
      os << ")";
      break;
    case ExprNode::Kind::Binary: {
      const char* op = e->op == BinaryOp::Add   ? " + "
                       : e->op == BinaryOp::Sub ? " - "
                       : e->op == BinaryOp::Mul ? "*"
                                                : "/";
      print(e->lhs, os, prec);
      os << op;
      // The right operand gets the next level up so that a - (b - c) and
      // a/(b*c) re-parse with the same grouping.
      print(e->rhs, os, prec + 1);
      break;
    }
    case ExprNode::Kind::IntPow:
      print(e->lhs, os, prec + 1);
      os << "^" << e->exponent;
      break;
    case ExprNode::Kind::Negate:
      os << "-";
      print(e->lhs, os, 1);
      break;
  }
  if (parens) os << ")";
}

}  // namespace

std::string expr_to_string(const ExprPtr& e) {
  std::ostringstream os;
  print(e, os, 0);
  return os.str();
}

ExprPtr parse_expression(const std::string& text) {
  detail::Parser p(detail::lex(text));
  ExprPtr e = p.parse_expr();
  if (!p.at_end()) p.fail("trailing input after expression", p.peek());
  return e;
}

}  // namespace twistorlab
