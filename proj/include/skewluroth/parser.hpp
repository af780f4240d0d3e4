/*
   Copyright 2026 The skewluroth authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <utility>

#include "error.hpp"
#include "rational.hpp"

namespace skewluroth {

/**
 * Expression AST for the noncommutative surface syntax over
 * {T, X, i, j, k, rationals}. Operand order of * and / is significant;
 * a/b denotes the right fraction a * b^-1. Exponents are nonnegative
 * integer literals. Juxtaposition is not multiplication: `*` is required.
 *
 * Precedence: ^  >  unary -  >  * / (left)  >  + - (left).
 */
struct Expr {
    enum class Kind { Number, Symbol, Neg, Add, Sub, Mul, Div, Pow };

    Kind kind;
    Integer number;           // Number
    char symbol = 0;          // Symbol: one of T X i j k
    std::shared_ptr<const Expr> lhs, rhs;
    unsigned exponent = 0;    // Pow

    static std::shared_ptr<const Expr> make_number(Integer v) {
        auto e = std::make_shared<Expr>();
        e->kind = Kind::Number;
        e->number = std::move(v);
        return e;
    }
    static std::shared_ptr<const Expr> make_symbol(char s) {
        auto e = std::make_shared<Expr>();
        e->kind = Kind::Symbol;
        e->symbol = s;
        return e;
    }
    static std::shared_ptr<const Expr> make_unary(Kind k, std::shared_ptr<const Expr> x) {
        auto e = std::make_shared<Expr>();
        e->kind = k;
        e->lhs = std::move(x);
        return e;
    }
    static std::shared_ptr<const Expr> make_binary(Kind k, std::shared_ptr<const Expr> l,
                                                   std::shared_ptr<const Expr> r) {
        auto e = std::make_shared<Expr>();
        e->kind = k;
        e->lhs = std::move(l);
        e->rhs = std::move(r);
        return e;
    }
    static std::shared_ptr<const Expr> make_pow(std::shared_ptr<const Expr> base, unsigned exp) {
        auto e = std::make_shared<Expr>();
        e->kind = Kind::Pow;
        e->lhs = std::move(base);
        e->exponent = exp;
        return e;
    }
};

using ExprPtr = std::shared_ptr<const Expr>;

namespace detail {

class Parser {
   public:
    explicit Parser(std::string_view src) : src_(src) {}

    ExprPtr parse() {
        ExprPtr e = additive();
        skip_ws();
        if (pos_ != src_.size()) throw parse_error(pos_, "unexpected trailing input");
        return e;
    }

   private:
    void skip_ws() {
        while (pos_ < src_.size() && (src_[pos_] == ' ' || src_[pos_] == '\t')) ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < src_.size() && src_[pos_] == c;
    }

    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }

    ExprPtr additive() {
        ExprPtr e = multiplicative();
        for (;;) {
            if (accept('+'))
                e = Expr::make_binary(Expr::Kind::Add, e, multiplicative());
            else if (accept('-'))
                e = Expr::make_binary(Expr::Kind::Sub, e, multiplicative());
            else
                return e;
        }
    }

    ExprPtr multiplicative() {
        ExprPtr e = unary();
        for (;;) {
            if (accept('*'))
                e = Expr::make_binary(Expr::Kind::Mul, e, unary());
            else if (accept('/'))
                e = Expr::make_binary(Expr::Kind::Div, e, unary());
            else
                return e;
        }
    }

    ExprPtr unary() {
        if (accept('-')) return Expr::make_unary(Expr::Kind::Neg, unary());
        return power();
    }

    ExprPtr power() {
        ExprPtr base = primary();
        if (accept('^')) {
            skip_ws();
            std::size_t at = pos_;
            if (pos_ < src_.size() && src_[pos_] == '-')
                throw parse_error(at, "negative exponents are not allowed");
            if (pos_ >= src_.size() || !is_digit(src_[pos_]))
                throw parse_error(at, "expected a nonnegative integer exponent");
            unsigned long exp = 0;
            while (pos_ < src_.size() && is_digit(src_[pos_])) {
                exp = exp * 10 + static_cast<unsigned long>(src_[pos_] - '0');
                if (exp > 1000000) throw parse_error(at, "exponent too large");
                ++pos_;
            }
            return Expr::make_pow(base, static_cast<unsigned>(exp));
        }
        return base;
    }

    ExprPtr primary() {
        skip_ws();
        if (pos_ >= src_.size()) throw parse_error(pos_, "unexpected end of input");
        char c = src_[pos_];
        if (c == '(') {
            ++pos_;
            ExprPtr e = additive();
            if (!accept(')')) throw parse_error(pos_, "expected ')'");
            return e;
        }
        if (is_digit(c)) {
            std::size_t at = pos_;
            std::string digits;
            while (pos_ < src_.size() && is_digit(src_[pos_])) digits += src_[pos_++];
            try {
                return Expr::make_number(Integer(digits));
            } catch (...) {
                throw parse_error(at, "bad integer literal");
            }
        }
        if (c == 'T' || c == 'X' || c == 'i' || c == 'j' || c == 'k') {
            // Reject identifiers like "Ti" or "ij": symbols are single letters.
            if (pos_ + 1 < src_.size() && is_symbol_char(src_[pos_ + 1]))
                throw parse_error(pos_, "unknown symbol (use explicit '*' between factors)");
            ++pos_;
            return Expr::make_symbol(c);
        }
        if (is_alpha(c)) throw parse_error(pos_, std::string("unknown symbol '") + c + "'");
        throw parse_error(pos_, std::string("unexpected character '") + c + "'");
    }

    static bool is_digit(char c) { return c >= '0' && c <= '9'; }
    static bool is_alpha(char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
    }
    static bool is_symbol_char(char c) { return is_alpha(c) || is_digit(c); }

    std::string_view src_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses the surface syntax into an AST; throws parse_error with a position.
inline ExprPtr parse(std::string_view src) { return detail::Parser(src).parse(); }

}  // namespace skewluroth
