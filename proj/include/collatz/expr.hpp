#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

#include "collatz/bigint.hpp"

namespace collatz {

inline constexpr uint64_t kDefaultExponentLimit = uint64_t{1} << 20;

/// Parse or evaluation failure of an integer expression, carrying the
/// 0-based byte offset it was detected at.
class ExprError : public std::invalid_argument {
 public:
  enum class Kind { Syntax, ExponentLimit, NegativeResult };

  ExprError(Kind kind, size_t position, const std::string& what);
  Kind kind() const { return kind_; }
  size_t position() const { return position_; }

 private:
  Kind kind_;
  size_t position_;
};

/// Arithmetic over non-negative integers: decimal literals, binary + - *,
/// right-associative ^, and parentheses. Precedence: ^ over * over + and -,
/// with + and - left-associative. Evaluation is exact; a negative
/// intermediate result or an exponent above the limit is an error.
class IntExpression {
 public:
  struct Node;  // opaque AST node

  static IntExpression parse(std::string_view text);

  BigInt evaluate(uint64_t exponent_limit = kDefaultExponentLimit) const;

  IntExpression(IntExpression&&) noexcept;
  IntExpression& operator=(IntExpression&&) noexcept;
  ~IntExpression();

 private:
  explicit IntExpression(std::unique_ptr<Node> root);
  std::unique_ptr<Node> root_;
};

/// Parse-and-evaluate convenience.
BigInt eval_int_expr(std::string_view text,
                     uint64_t exponent_limit = kDefaultExponentLimit);

}  // namespace collatz
