#include "collatz/expr.hpp"

#include <cctype>
#include <utility>

namespace collatz {

ExprError::ExprError(Kind kind, size_t position, const std::string& what)
    : std::invalid_argument(what + " at position " + std::to_string(position)),
      kind_(kind),
      position_(position) {}

struct IntExpression::Node {
  enum class Op { Literal, Add, Sub, Mul, Pow };

  Op op = Op::Literal;
  BigInt literal;
  size_t position = 0;  // where this operator/literal starts in the input
  std::unique_ptr<Node> lhs;
  std::unique_ptr<Node> rhs;
};

IntExpression::IntExpression(std::unique_ptr<Node> root) : root_(std::move(root)) {}
IntExpression::IntExpression(IntExpression&&) noexcept = default;
IntExpression& IntExpression::operator=(IntExpression&&) noexcept = default;
IntExpression::~IntExpression() = default;

namespace {

using Node = IntExpression::Node;
using Op = Node::Op;

// Recursive-descent parser. Grammar:
//   expr    := term (('+' | '-') term)*
//   term    := factor ('*' factor)*
//   factor  := primary ('^' factor)?        right-associative
//   primary := digits | '(' expr ')'
// Whitespace is allowed between tokens.
class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  std::unique_ptr<Node> run() {
    auto node = parse_expr();
    skip_ws();
    if (pos_ != text_.size())
      throw ExprError(ExprError::Kind::Syntax, pos_, "unexpected character");
    return node;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::unique_ptr<Node> parse_expr() {
    auto lhs = parse_term();
    for (;;) {
      skip_ws();
      const size_t at = pos_;
      if (eat('+')) {
        lhs = make_binary(Op::Add, at, std::move(lhs), parse_term());
      } else if (eat('-')) {
        lhs = make_binary(Op::Sub, at, std::move(lhs), parse_term());
      } else {
        return lhs;
      }
    }
  }

  std::unique_ptr<Node> parse_term() {
    auto lhs = parse_factor();
    for (;;) {
      skip_ws();
      const size_t at = pos_;
      if (eat('*')) {
        lhs = make_binary(Op::Mul, at, std::move(lhs), parse_factor());
      } else {
        return lhs;
      }
    }
  }

  std::unique_ptr<Node> parse_factor() {
    auto base = parse_primary();
    skip_ws();
    const size_t at = pos_;
    if (eat('^')) return make_binary(Op::Pow, at, std::move(base), parse_factor());
    return base;
  }

  std::unique_ptr<Node> parse_primary() {
    skip_ws();
    if (pos_ >= text_.size())
      throw ExprError(ExprError::Kind::Syntax, pos_, "unexpected end of expression");
    const size_t at = pos_;
    if (eat('(')) {
      auto inner = parse_expr();
      if (!eat(')'))
        throw ExprError(ExprError::Kind::Syntax, pos_, "expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const size_t start = pos_;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      auto node = std::make_unique<Node>();
      node->op = Op::Literal;
      node->position = start;
      node->literal = BigInt::from_decimal(text_.substr(start, pos_ - start));
      return node;
    }
    throw ExprError(ExprError::Kind::Syntax, at,
                    "expected a number or '('");
  }

  static std::unique_ptr<Node> make_binary(Op op, size_t at,
                                           std::unique_ptr<Node> lhs,
                                           std::unique_ptr<Node> rhs) {
    auto node = std::make_unique<Node>();
    node->op = op;
    node->position = at;
    node->lhs = std::move(lhs);
    node->rhs = std::move(rhs);
    return node;
  }

  std::string_view text_;
  size_t pos_ = 0;
};

BigInt eval_node(const Node& node, uint64_t exponent_limit) {
  switch (node.op) {
    case Op::Literal:
      return node.literal;
    case Op::Add:
      return eval_node(*node.lhs, exponent_limit) +
             eval_node(*node.rhs, exponent_limit);
    case Op::Sub: {
      BigInt lhs = eval_node(*node.lhs, exponent_limit);
      const BigInt rhs = eval_node(*node.rhs, exponent_limit);
      if (lhs < rhs)
        throw ExprError(ExprError::Kind::NegativeResult, node.position,
                        "negative intermediate result");
      lhs -= rhs;
      return lhs;
    }
    case Op::Mul:
      return eval_node(*node.lhs, exponent_limit) *
             eval_node(*node.rhs, exponent_limit);
    case Op::Pow: {
      const BigInt base = eval_node(*node.lhs, exponent_limit);
      const BigInt exponent = eval_node(*node.rhs, exponent_limit);
      if (!exponent.fits_u64() || exponent.to_u64() > exponent_limit)
        throw ExprError(ExprError::Kind::ExponentLimit, node.position,
                        "exponent exceeds limit " + std::to_string(exponent_limit));
      return BigInt::pow(base, exponent.to_u64());
    }
  }
  throw std::logic_error("unreachable expression op");
}

}  // namespace

IntExpression IntExpression::parse(std::string_view text) {
  return IntExpression(Parser(text).run());
}

BigInt IntExpression::evaluate(uint64_t exponent_limit) const {
  return eval_node(*root_, exponent_limit);
}

BigInt eval_int_expr(std::string_view text, uint64_t exponent_limit) {
  return IntExpression::parse(text).evaluate(exponent_limit);
}

}  // namespace collatz
