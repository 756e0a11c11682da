#pragma once

#include "szeged/rational.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace szeged {

/// Arithmetic expression over x1..x6 with exact rational evaluation.
///
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := integer | var | '(' expr ')' | '-' factor
///           | 'abs' '(' expr ')' | ('min'|'max') '(' expr ',' expr ')'
///   var    := 'x1' .. 'x6'
///
/// A rational literal "p/q" is simply the division of two integer literals.
class Expression {
public:
    /// Throws SyntaxError (with byte position) or Error(UnknownIdentifier).
    static Expression parse(std::string_view source);

    /// Throws Error(DivisionByZero).
    Rational evaluate(const std::array<Rational, 6>& x) const;

    const std::string& source() const { return source_; }

private:
    enum class Op : std::uint8_t { Constant, Variable, Negate, Add, Sub, Mul, Div, Abs, Min, Max };

    struct Node {
        Op op;
        std::uint8_t variable = 0;
        std::int32_t lhs = -1;
        std::int32_t rhs = -1;
        Rational constant;
    };

    friend class ExpressionParser;

    Rational eval(std::int32_t node, const std::array<Rational, 6>& x) const;

    std::string source_;
    std::vector<Node> nodes_;
    std::int32_t root_ = -1;
};

}  // namespace szeged
