#include "szeged/expression.hpp"

#include "szeged/error.hpp"

#include <cctype>
#include <string>

namespace szeged {

class ExpressionParser {
public:
    explicit ExpressionParser(std::string_view src) : src_(src) {}

    Expression run() {
        out_.source_ = std::string(src_);
        skip_space();
        if (pos_ == src_.size()) throw SyntaxError(pos_, "empty expression");
        out_.root_ = expr();
        skip_space();
        if (pos_ != src_.size()) throw SyntaxError(pos_, "unexpected '" + std::string(1, src_[pos_]) + "'");
        return std::move(out_);
    }

private:
    using Op = Expression::Op;

    void skip_space() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) {
            if (pos_ == src_.size())
                throw SyntaxError(pos_, std::string("expected '") + c + "' but input ended");
            throw SyntaxError(pos_, std::string("expected '") + c + "' but found '" + src_[pos_] + "'");
        }
    }

    std::int32_t add(Expression::Node node) {
        out_.nodes_.push_back(std::move(node));
        return static_cast<std::int32_t>(out_.nodes_.size() - 1);
    }

    std::int32_t binary(Op op, std::int32_t lhs, std::int32_t rhs) {
        return add({op, 0, lhs, rhs, Rational(0)});
    }

    std::int32_t expr() {
        std::int32_t lhs = term();
        for (;;) {
            if (accept('+')) lhs = binary(Op::Add, lhs, term());
            else if (accept('-')) lhs = binary(Op::Sub, lhs, term());
            else return lhs;
        }
    }

    std::int32_t term() {
        std::int32_t lhs = factor();
        for (;;) {
            if (accept('*')) lhs = binary(Op::Mul, lhs, factor());
            else if (accept('/')) lhs = binary(Op::Div, lhs, factor());
            else return lhs;
        }
    }

    std::int32_t factor() {
        skip_space();
        if (pos_ == src_.size()) throw SyntaxError(pos_, "unexpected end of input");
        const char c = src_[pos_];
        if (c == '-') {
            ++pos_;
            return add({Op::Negate, 0, factor(), -1, Rational(0)});
        }
        if (c == '(') {
            ++pos_;
            const std::int32_t inner = expr();
            expect(')');
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            return add({Op::Constant, 0, -1, -1, Rational(mpz_class(std::string(src_.substr(start, pos_ - start))))});
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                ++pos_;
            const std::string_view word = src_.substr(start, pos_ - start);
            if (word.size() == 2 && word[0] == 'x' && word[1] >= '1' && word[1] <= '6')
                return add({Op::Variable, static_cast<std::uint8_t>(word[1] - '1'), -1, -1, Rational(0)});
            if (word == "abs") {
                expect('(');
                const std::int32_t arg = expr();
                expect(')');
                return add({Op::Abs, 0, arg, -1, Rational(0)});
            }
            if (word == "min" || word == "max") {
                expect('(');
                const std::int32_t a = expr();
                expect(',');
                const std::int32_t b = expr();
                expect(')');
                return binary(word == "min" ? Op::Min : Op::Max, a, b);
            }
            throw Error(ErrorCode::UnknownIdentifier,
                        "'" + std::string(word) + "' at position " + std::to_string(start) +
                            " (variables are x1..x6; functions are abs, min, max)");
        }
        throw SyntaxError(pos_, "unexpected '" + std::string(1, c) + "'");
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    Expression out_;
};

Expression Expression::parse(std::string_view source) {
    return ExpressionParser(source).run();
}

Rational Expression::evaluate(const std::array<Rational, 6>& x) const {
    return eval(root_, x);
}

Rational Expression::eval(std::int32_t index, const std::array<Rational, 6>& x) const {
    const Node& n = nodes_[static_cast<std::size_t>(index)];
    switch (n.op) {
        case Op::Constant: return n.constant;
        case Op::Variable: return x[n.variable];
        case Op::Negate: return -eval(n.lhs, x);
        case Op::Add: return eval(n.lhs, x) + eval(n.rhs, x);
        case Op::Sub: return eval(n.lhs, x) - eval(n.rhs, x);
        case Op::Mul: return eval(n.lhs, x) * eval(n.rhs, x);
        case Op::Div: {
            Rational den = eval(n.rhs, x);
            if (sgn(den) == 0) throw Error(ErrorCode::DivisionByZero, "in '" + source_ + "'");
            return eval(n.lhs, x) / den;
        }
        case Op::Abs: return abs(eval(n.lhs, x));
        case Op::Min: {
            Rational a = eval(n.lhs, x), b = eval(n.rhs, x);
            return a < b ? a : b;
        }
        case Op::Max: {
            Rational a = eval(n.lhs, x), b = eval(n.rhs, x);
            return a < b ? b : a;
        }
    }
    return Rational(0);
}

}  // namespace szeged
