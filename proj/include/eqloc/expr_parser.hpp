#ifndef EQLOC_EXPR_PARSER_HPP
#define EQLOC_EXPR_PARSER_HPP

#include <cctype>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>

#include "rational.hpp"

namespace eqloc
{

// Recursive-descent parser for the small polynomial grammar shared by class
// expressions and invariant polynomials:
//
//   expr    := term (('+' | '-') term)*
//   term    := unary ('*' unary)*
//   unary   := ('+' | '-') unary | power
//   power   := primary ('^' integer)?
//   primary := integer ('/' integer)? | identifier | '(' expr ')'
//
// Unary minus binds looser than '^', so "-x^2" is -(x^2). Value must be a
// commutative ring type; identifiers and literals are resolved by callbacks.
template <typename Value>
class ExprParser
{
public:
    using Literal = std::function<Value(const Rational &)>;
    using Identifier = std::function<Value(const std::string &, std::size_t pos)>;

    ExprParser(Literal literal, Identifier identifier)
        : literal_(std::move(literal)), identifier_(std::move(identifier))
    {
    }

    Value parse(std::string_view src)
    {
        src_ = src;
        pos_ = 0;
        skip_space();
        if (pos_ == src_.size()) {
            throw ParseError("empty expression", 0);
        }
        Value v = expr();
        skip_space();
        if (pos_ != src_.size()) {
            throw ParseError(std::string("unexpected character '") + src_[pos_] + "'", pos_);
        }
        return v;
    }

private:
    void skip_space()
    {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) {
            ++pos_;
        }
    }

    bool accept(char c)
    {
        skip_space();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Value expr()
    {
        Value v = term();
        for (;;) {
            if (accept('+')) {
                v = v + term();
            } else if (accept('-')) {
                v = v - term();
            } else {
                return v;
            }
        }
    }

    Value term()
    {
        Value v = unary();
        while (accept('*')) {
            v = v * unary();
        }
        return v;
    }

    Value unary()
    {
        if (accept('-')) {
            return -unary();
        }
        if (accept('+')) {
            return unary();
        }
        return power();
    }

    Value power()
    {
        Value base = primary();
        if (!accept('^')) {
            return base;
        }
        skip_space();
        const std::size_t at = pos_;
        if (pos_ < src_.size() && src_[pos_] == '-') {
            throw ParseError("negative exponent", at);
        }
        if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            throw ParseError("exponent must be a nonnegative integer literal", at);
        }
        const std::string digits = read_digits();
        if (digits.size() > 6) {
            throw ParseError("exponent too large", at);
        }
        return ring_power(base, static_cast<unsigned>(std::stoul(digits)));
    }

    Value ring_power(Value base, unsigned e)
    {
        Value result = literal_(Rational(1));
        while (e > 0) {
            if (e & 1u) {
                result = result * base;
            }
            e >>= 1;
            if (e > 0) {
                base = base * base;
            }
        }
        return result;
    }

    std::string read_digits()
    {
        std::string digits;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            digits.push_back(src_[pos_++]);
        }
        return digits;
    }

    Value primary()
    {
        skip_space();
        if (pos_ >= src_.size()) {
            throw ParseError("unexpected end of expression", pos_);
        }
        const char c = src_[pos_];
        if (c == '(') {
            ++pos_;
            Value v = expr();
            if (!accept(')')) {
                throw ParseError("expected ')'", pos_);
            }
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const BigInt num(read_digits(), 10);
            const std::size_t save = pos_;
            if (accept('/')) {
                skip_space();
                if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                    throw ParseError("expected integer denominator after '/'", pos_);
                }
                const std::size_t at = pos_;
                const BigInt den(read_digits(), 10);
                if (den == 0) {
                    throw ParseError("division by zero", at);
                }
                return literal_(Rational(num, den));
            }
            pos_ = save;
            return literal_(Rational(num));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t at = pos_;
            std::string name;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
                name.push_back(src_[pos_++]);
            }
            return identifier_(name, at);
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    Literal literal_;
    Identifier identifier_;
    std::string_view src_;
    std::size_t pos_ = 0;
};

} // namespace eqloc

#endif
