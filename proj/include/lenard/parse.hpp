#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lenard/errors.hpp"
#include "lenard/rational_expr.hpp"

namespace lenard {

// Expression grammar:
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := base ('^' nonneg-integer)?
//   base   := rational-literal | identifier | '(' expr ')' | '-' base
// Identifiers must be coordinate names; whitespace is insignificant.

namespace detail {

struct Token {
    enum Kind { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
    Kind kind;
    std::string text;
    std::size_t pos;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next() {
        while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) ++i_;
        const std::size_t start = i_;
        if (i_ >= src_.size()) return {Token::End, "", start};
        const char c = src_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < src_.size() && std::isdigit(static_cast<unsigned char>(src_[j]))) ++j;
            Token t{Token::Number, std::string(src_.substr(i_, j - i_)), start};
            i_ = j;
            return t;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i_;
            while (j < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[j])) || src_[j] == '_'))
                ++j;
            Token t{Token::Ident, std::string(src_.substr(i_, j - i_)), start};
            i_ = j;
            return t;
        }
        ++i_;
        switch (c) {
            case '+': return {Token::Plus, "+", start};
            case '-': return {Token::Minus, "-", start};
            case '*': return {Token::Star, "*", start};
            case '/': return {Token::Slash, "/", start};
            case '^': return {Token::Caret, "^", start};
            case '(': return {Token::LParen, "(", start};
            case ')': return {Token::RParen, ")", start};
            default:
                throw parse_error(std::string("unexpected character '") + c + "'", start);
        }
    }

private:
    std::string_view src_;
    std::size_t i_ = 0;
};

class ExprParser {
public:
    ExprParser(std::string_view src, VarNamesPtr vars)
        : lex_(src), vars_(std::move(vars)), cur_(lex_.next()) {}

    RationalExpr parse() {
        RationalExpr e = expr();
        if (cur_.kind != Token::End)
            throw parse_error("unexpected trailing input '" + cur_.text + "'", cur_.pos);
        return e;
    }

private:
    void advance() { cur_ = lex_.next(); }

    RationalExpr expr() {
        RationalExpr e = term();
        while (cur_.kind == Token::Plus || cur_.kind == Token::Minus) {
            const bool add = cur_.kind == Token::Plus;
            advance();
            const RationalExpr rhs = term();
            e = add ? e + rhs : e - rhs;
        }
        return e;
    }

    RationalExpr term() {
        RationalExpr e = factor();
        while (cur_.kind == Token::Star || cur_.kind == Token::Slash) {
            const bool mul = cur_.kind == Token::Star;
            const std::size_t opPos = cur_.pos;
            advance();
            const RationalExpr rhs = factor();
            if (mul) {
                e = e * rhs;
            } else {
                if (rhs.is_zero()) throw parse_error("division by zero", opPos);
                e = e / rhs;
            }
        }
        return e;
    }

    RationalExpr factor() {
        RationalExpr b = base();
        if (cur_.kind == Token::Caret) {
            advance();
            if (cur_.kind != Token::Number)
                throw parse_error("exponent must be a non-negative integer", cur_.pos);
            unsigned long e = 0;
            try {
                e = std::stoul(cur_.text);
            } catch (const std::exception&) {
                throw parse_error("exponent out of range", cur_.pos);
            }
            if (e > kMaxExponent) throw parse_error("exponent out of range", cur_.pos);
            advance();
            b = b.pow(static_cast<std::uint32_t>(e));
        }
        return b;
    }

    RationalExpr base() {
        switch (cur_.kind) {
            case Token::Minus: {
                advance();
                return -base();
            }
            case Token::Number: {
                const Rational n = Rational::from_string(cur_.text);
                advance();
                return RationalExpr::constant(vars_, n);
            }
            case Token::Ident: {
                const auto it = std::find(vars_->begin(), vars_->end(), cur_.text);
                if (it == vars_->end())
                    throw parse_error("unknown identifier '" + cur_.text + "'", cur_.pos);
                const std::size_t idx = static_cast<std::size_t>(it - vars_->begin());
                advance();
                return RationalExpr::variable(vars_, idx);
            }
            case Token::LParen: {
                advance();
                RationalExpr e = expr();
                if (cur_.kind != Token::RParen) throw parse_error("expected ')'", cur_.pos);
                advance();
                return e;
            }
            default:
                throw parse_error("expected a number, identifier, '(' or '-'", cur_.pos);
        }
    }

    Lexer lex_;
    VarNamesPtr vars_;
    Token cur_;
};

}  // namespace detail

/// Parses source against the expression grammar over the given coordinate
/// names and returns the canonical rational expression.  Throws parse_error
/// carrying the byte offset of the offending token.
inline RationalExpr parse_expr(std::string_view source, VarNamesPtr vars) {
    return detail::ExprParser(source, std::move(vars)).parse();
}

inline RationalExpr parse_expr(std::string_view source, const VarNames& coords) {
    return parse_expr(source, make_vars(coords));
}

}  // namespace lenard
