#pragma once

/*
 * Series expressions.
 *
 *   expr   := term (("+" | "-") term)*
 *   term   := unary (("*" | "/") unary)*
 *   unary  := "-" unary | factor
 *   factor := base ("^" "-"? uint)?
 *   base   := "x" | uint | name | name "(" expr ")" | "sqrt" "(" expr ")" | "(" expr ")"
 *
 * Names are C (Catalan), M (Motzkin) and W (central binomial); name(e)
 * composes with e, which must have zero constant term. "^" binds tighter
 * than unary minus, so -x^2 = -(x^2).
 */

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>

#include "riordan/errors.hpp"
#include "riordan/riordan.hpp"
#include "riordan/series.hpp"

namespace riordan {

class SyntaxError : public Error {
public:
    SyntaxError(std::size_t offset, const std::string& what)
        : Error(Errc::SyntaxError, "at byte " + std::to_string(offset) + ": " + what), offset_(offset) {}
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

struct Expr {
    enum class Kind { X, Number, Named, Call, Sqrt, Neg, Add, Sub, Mul, Div, Pow };
    Kind kind = Kind::Number;
    Rational value;       // Number
    std::string name;     // Named, Call
    int exponent = 0;     // Pow
    std::shared_ptr<const Expr> lhs;
    std::shared_ptr<const Expr> rhs;
    std::size_t offset = 0;
};
using ExprPtr = std::shared_ptr<const Expr>;

/// Throws SyntaxError or Error(UnknownName).
ExprPtr parse_expr(std::string_view text);

/// Evaluates with `order` as the working precision; the result may be exact on fewer degrees.
Series eval(const Expr& e, int order);

/// Raises the working precision until degrees [0, order) are exact, then truncates.
Series eval_exact(const Expr& e, int order);

/// "(g, f)" with both components exact on [0, order).
RiordanPair parse_pair(std::string_view text, int order);

} // namespace riordan
