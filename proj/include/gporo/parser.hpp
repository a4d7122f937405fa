#pragma once

/**
 * @file parser.hpp
 * @brief Tokenizer and recursive-descent parser for the gross-number
 *        expression language (the CLI wire format and the round-trip
 *        serialization of GrossValue).
 *
 * Grammar (whitespace-insensitive):
 *
 *   expr     := ['-'] term (('+' | '-') term)*
 *   term     := factor (('*' | '/') factor)*
 *   factor   := atom ['^' exponent]
 *   atom     := rational | 'g' | '(' expr ')'
 *   exponent := ['-'] (rational | 'g' | '(' expr ')')
 *   rational := integer ['/' integer]
 *
 * 'g' is the infinite unit; the circled-one glyph is accepted as an alias.
 * Rationals are exact ("20/27"); decimal literals are rejected. '^' binds
 * tighter than '*' and '/', which bind tighter than '+' and '-'. A
 * parenthesized exponent must evaluate to a linear form a*g + b, and '/'
 * only divides by invertible monomials. Expressions that parse but leave
 * the exact fragment (e.g. "g^g" or "2^(1/2)") raise unsupported_error.
 */

#include <string>
#include <string_view>
#include <vector>

#include <gporo/gross.hpp>

namespace gporo {

enum class TokenKind { Integer, Slash, Plus, Minus, Star, Caret, LParen, RParen, GrossSymbol };

struct Token {
    TokenKind kind;
    std::string lexeme;
    std::size_t position;  // byte offset into the input
};

inline std::vector<Token> tokenize(std::string_view input) {
    static constexpr std::string_view kCircledOne = "\xe2\x91\xa0";
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < input.size()) {
        char c = input[i];
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
            ++i;
            continue;
        }
        auto single = [&](TokenKind k) {
            out.push_back({k, std::string(1, c), i});
            ++i;
        };
        switch (c) {
            case '/': single(TokenKind::Slash); continue;
            case '+': single(TokenKind::Plus); continue;
            case '-': single(TokenKind::Minus); continue;
            case '*': single(TokenKind::Star); continue;
            case '^': single(TokenKind::Caret); continue;
            case '(': single(TokenKind::LParen); continue;
            case ')': single(TokenKind::RParen); continue;
            default: break;
        }
        if (c >= '0' && c <= '9') {
            std::size_t start = i;
            while (i < input.size() && input[i] >= '0' && input[i] <= '9') ++i;
            out.push_back({TokenKind::Integer, std::string(input.substr(start, i - start)), start});
            continue;
        }
        if (c == 'g') {
            out.push_back({TokenKind::GrossSymbol, "g", i});
            ++i;
            continue;
        }
        if (input.substr(i, kCircledOne.size()) == kCircledOne) {
            out.push_back({TokenKind::GrossSymbol, std::string(kCircledOne), i});
            i += kCircledOne.size();
            continue;
        }
        throw parse_error(i, "a digit, operator, parenthesis, or 'g'", std::string(1, c));
    }
    return out;
}

namespace detail {

class ExprParser {
public:
    ExprParser(std::vector<Token> tokens, std::size_t input_size)
        : tokens_(std::move(tokens)), input_size_(input_size) {}

    GrossValue run() {
        GrossValue v = expr();
        if (!at_end()) fail("an operator or end of input");
        return v;
    }

private:
    std::vector<Token> tokens_;
    std::size_t input_size_;
    std::size_t pos_ = 0;

    bool at_end() const { return pos_ >= tokens_.size(); }
    const Token& peek() const { return tokens_[pos_]; }

    bool accept(TokenKind k) {
        if (!at_end() && peek().kind == k) {
            ++pos_;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& expected) const {
        if (at_end()) throw parse_error(input_size_, expected, "end of input");
        throw parse_error(peek().position, expected, "'" + peek().lexeme + "'");
    }

    GrossValue expr() {
        bool negate = accept(TokenKind::Minus);
        GrossValue v = term();
        if (negate) v = -v;
        for (;;) {
            if (accept(TokenKind::Plus))
                v = v + term();
            else if (accept(TokenKind::Minus))
                v = v - term();
            else
                return v;
        }
    }

    GrossValue term() {
        GrossValue v = factor();
        for (;;) {
            if (accept(TokenKind::Star))
                v = v * factor();
            else if (accept(TokenKind::Slash))
                v = v * factor().reciprocal();
            else
                return v;
        }
    }

    GrossValue factor() {
        GrossValue base = atom();
        if (accept(TokenKind::Caret)) return base.pow(exponent());
        return base;
    }

    GrossValue atom() {
        if (at_end()) fail("a number, 'g', or '('");
        switch (peek().kind) {
            case TokenKind::Integer: return GrossValue{rational_literal()};
            case TokenKind::GrossSymbol:
                ++pos_;
                return GrossValue::grossone();
            case TokenKind::LParen: {
                ++pos_;
                GrossValue v = expr();
                if (!accept(TokenKind::RParen)) fail("')'");
                return v;
            }
            default: fail("a number, 'g', or '('");
        }
    }

    // "p" or "p/q" consumed greedily
    BigRational rational_literal() {
        BigInt num{peek().lexeme};
        ++pos_;
        if (!at_end() && peek().kind == TokenKind::Slash && pos_ + 1 < tokens_.size() &&
            tokens_[pos_ + 1].kind == TokenKind::Integer) {
            ++pos_;
            BigInt den{peek().lexeme};
            if (den == 0) throw parse_error(peek().position, "a nonzero denominator", "'0'");
            ++pos_;
            return BigRational(num, den);
        }
        return BigRational(num);
    }

    GrossLinear exponent() {
        bool negate = accept(TokenKind::Minus);
        GrossLinear e;
        if (at_end()) fail("an exponent");
        switch (peek().kind) {
            case TokenKind::Integer: e = GrossLinear::finite(rational_literal()); break;
            case TokenKind::GrossSymbol:
                ++pos_;
                e = GrossLinear::gross();
                break;
            case TokenKind::LParen: {
                ++pos_;
                GrossValue v = expr();
                if (!accept(TokenKind::RParen)) fail("')'");
                e = as_linear(v);
                break;
            }
            default: fail("an exponent");
        }
        return negate ? -e : e;
    }

    static GrossLinear as_linear(const GrossValue& v) {
        if (!v.exp_terms().empty())
            throw unsupported_error("exponent must be linear in g, got " + v.str());
        GrossLinear e;
        for (const auto& t : v.poly_terms()) {
            if (t.power.is_zero())
                e.b = t.coeff;
            else if (t.power.is_one())
                e.a = t.coeff;
            else
                throw unsupported_error("exponent must be linear in g, got " + v.str());
        }
        return e;
    }
};

}  // namespace detail

/// Parses an expression into canonical form. Throws parse_error on malformed
/// input and unsupported_error/domain_error when the expression leaves the
/// exact fragment.
inline GrossValue parse(std::string_view input) {
    return detail::ExprParser(tokenize(input), input.size()).run();
}

}  // namespace gporo
