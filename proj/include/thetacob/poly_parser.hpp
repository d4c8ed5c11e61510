#pragma once

// Recursive-descent parser for theta-ring expressions.
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*        '/' needs a constant divisor
//   unary   := ('-' | '+') unary | power
//   power   := primary ('^' integer)?
//   primary := integer | 't' integer | '(' expr ')'
//
// Whitespace is ignored. "3/2*t1^2" parses as (3/2)*t1^2; t0 is the unit.

#include "thetacob/graded_poly.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace thetacob {

class parse_error : public std::invalid_argument {
  public:
    parse_error(const std::string& msg, std::size_t pos)
        : std::invalid_argument(msg + " at position " + std::to_string(pos)), pos_(pos) {}
    std::size_t position() const { return pos_; }

  private:
    std::size_t pos_;
};

namespace detail {

class PolyParser {
  public:
    PolyParser(const std::string& text, char var) : s_(text), var_(var) {}

    GradedPoly parse() {
        GradedPoly r = expr();
        skip();
        if (i_ != s_.size()) throw parse_error("unexpected character '" + std::string(1, s_[i_]) + "'", i_);
        return r;
    }

  private:
    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool accept(char c) {
        skip();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }
    BigInt integer() {
        skip();
        std::size_t start = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (start == i_) throw parse_error("expected integer", i_);
        return BigInt(s_.substr(start, i_ - start));
    }
    GradedPoly expr() {
        GradedPoly r = term();
        for (;;) {
            if (accept('+')) r += term();
            else if (accept('-')) r -= term();
            else return r;
        }
    }
    GradedPoly term() {
        GradedPoly r = unary();
        for (;;) {
            if (accept('*')) {
                r = r * unary();
            } else if (accept('/')) {
                std::size_t at = i_;
                GradedPoly d = unary();
                if (d.max_weight() > 0 || d.is_zero())
                    throw parse_error("divisor must be a nonzero constant", at);
                r = r / aug(d);
            } else {
                return r;
            }
        }
    }
    GradedPoly unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }
    GradedPoly power() {
        GradedPoly base = primary();
        if (accept('^')) {
            BigInt e = integer();
            if (e > 64) throw parse_error("exponent too large", i_);
            return pow(base, static_cast<int>(e));
        }
        return base;
    }
    GradedPoly primary() {
        skip();
        if (i_ >= s_.size()) throw parse_error("unexpected end of expression", i_);
        char c = s_[i_];
        if (c == '(') {
            ++i_;
            GradedPoly r = expr();
            if (!accept(')')) throw parse_error("expected ')'", i_);
            return r;
        }
        if (c == var_) {
            ++i_;
            BigInt idx = integer();
            if (idx > 1000) throw parse_error("generator index too large", i_);
            return GradedPoly::gen(static_cast<int>(idx));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return GradedPoly(Rat(integer()));
        throw parse_error("unexpected character '" + std::string(1, c) + "'", i_);
    }

    const std::string& s_;
    char var_;
    std::size_t i_ = 0;
};

}  // namespace detail

inline GradedPoly parse_poly(const std::string& text, char var = 't') {
    return detail::PolyParser(text, var).parse();
}

}  // namespace thetacob
