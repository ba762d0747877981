#pragma once

#include "twistorlab/jets.hpp"

#include <map>
#include <memory>
#include <stdexcept>
#include <string>

namespace twistorlab {

enum class UnaryFn { Sin, Cos, Tan, Exp, Log, Sqrt, Sinh, Cosh };
enum class BinaryOp { Add, Sub, Mul, Div };

struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

/// One node of a parsed metric-component expression. Trees are immutable
/// and shared freely between metric entries.
struct ExprNode {
  enum class Kind { Constant, Coord, Param, Unary, Binary, IntPow, Negate };

  Kind kind;
  double constant = 0.0;
  int coord = 0;  // 1..4
  std::string param;
  UnaryFn fn = UnaryFn::Sin;
  BinaryOp op = BinaryOp::Add;
  int exponent = 0;
  ExprPtr lhs, rhs;
  int line = 0, col = 0;
};

/// Parse or evaluation failure with source position of the offending token
/// or node.
class DslError : public std::runtime_error {
 public:
  DslError(const std::string& message, int line, int col)
      : std::runtime_error(message + " (line " + std::to_string(line) +
                           ", column " + std::to_string(col) + ")"),
        line_(line),
        col_(col) {}
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_, col_;
};

ExprPtr make_constant(double value);
ExprPtr make_coord(int index);
ExprPtr make_param(const std::string& name);
ExprPtr make_unary(UnaryFn fn, ExprPtr arg);
ExprPtr make_binary(BinaryOp op, ExprPtr lhs, ExprPtr rhs);
ExprPtr make_pow(ExprPtr base, int exponent);
ExprPtr make_negate(ExprPtr arg);

/// Structural equality (same tree shape and values).
bool expr_equal(const ExprPtr& a, const ExprPtr& b);

/// Render in the DSL grammar; parsing the result reproduces the semantics.
std::string expr_to_string(const ExprPtr& e);

/// Parse a single expression (used by tests; metric files go through
/// parse_metric).
ExprPtr parse_expression(const std::string& text);

namespace detail {

template <typename S>
S apply_unary(UnaryFn fn, const S& a, const ExprNode& n) {
  using std::cos;
  using std::exp;
  using std::log;
  using std::sin;
  using std::sinh;
  using std::sqrt;
  using std::tan;
  using std::cosh;
  switch (fn) {
    case UnaryFn::Sin:
      return sin(a);
    case UnaryFn::Cos:
      return cos(a);
    case UnaryFn::Tan:
      if (std::abs(std::cos(scalar_value(a))) < 1e-300)
        throw DslError("tan evaluated at a pole", n.line, n.col);
      return tan(a);
    case UnaryFn::Exp:
      return exp(a);
    case UnaryFn::Log:
      if (scalar_value(a) <= 0.0)
        throw DslError("log of a non-positive value", n.line, n.col);
      return log(a);
    case UnaryFn::Sqrt:
      if (scalar_value(a) <= 0.0)
        throw DslError("sqrt of a non-positive value", n.line, n.col);
      return sqrt(a);
    case UnaryFn::Sinh:
      return sinh(a);
    case UnaryFn::Cosh:
      return cosh(a);
  }
  throw DslError("unknown function", n.line, n.col);
}

}  // namespace detail

/// Evaluate over any scalar supporting the jet arithmetic interface.
/// coords[i] is the scalar for coordinate x_{i+1}; parameters evaluate as
/// constants.
template <typename S>
S eval_expr(const ExprNode& n, const S coords[4],
            const std::map<std::string, double>& params) {
  switch (n.kind) {
    case ExprNode::Kind::Constant:
      return S(n.constant);
    case ExprNode::Kind::Coord:
      return coords[n.coord - 1];
    case ExprNode::Kind::Param: {
      auto it = params.find(n.param);
      if (it == params.end())
        throw DslError("undeclared parameter '" + n.param + "'", n.line,
                       n.col);
      return S(it->second);
    }
    case ExprNode::Kind::Unary:
      return detail::apply_unary(n.fn, eval_expr(*n.lhs, coords, params), n);
    case ExprNode::Kind::Binary: {
      const S a = eval_expr(*n.lhs, coords, params);
      const S b = eval_expr(*n.rhs, coords, params);
      switch (n.op) {
        case BinaryOp::Add:
          return a + b;
        case BinaryOp::Sub:
          return a - b;
        case BinaryOp::Mul:
          return a * b;
        case BinaryOp::Div:
          if (scalar_value(b) == 0.0)
            throw DslError("division by zero", n.line, n.col);
          return a / b;
      }
      throw DslError("unknown operator", n.line, n.col);
    }
    case ExprNode::Kind::IntPow:
      return pow_int(eval_expr(*n.lhs, coords, params), n.exponent);
    case ExprNode::Kind::Negate:
      return -eval_expr(*n.lhs, coords, params);
  }
  throw DslError("malformed expression node", n.line, n.col);
}

}  // namespace twistorlab
