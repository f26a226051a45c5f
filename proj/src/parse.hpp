#pragma once

#include "motzhank/errors.hpp"
#include "motzhank/zpoly.hpp"

#include <cctype>
#include <optional>
#include <string>
#include <string_view>

namespace motzhank::detail {

// Recursive-descent parser for "+ - * ^ ( )" expressions over integers and
// single-letter variables. P must be constructible from Integer and support
// ring operators; lookup(char) maps a variable letter to its value.
template <class P, class Lookup>
class ExprParser {
public:
    ExprParser(std::string_view text, Lookup lookup) : s_(text), lookup_(lookup) {}

    P parse() {
        skip();
        if (pos_ == s_.size()) fail("empty input");
        P v = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected character");
        return v;
    }

private:
    [[noreturn]] void fail(const char* what) const {
        throw ParseError(std::string(what) + " at position " + std::to_string(pos_) + " in \"" +
                         std::string(s_) + "\"");
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    P expr() {
        P v;
        bool first = true;
        for (;;) {
            skip();
            bool neg = false;
            if (eat('+')) {
            } else if (eat('-')) {
                neg = true;
            } else if (!first) {
                break;
            }
            P t = term();
            v = neg ? v - t : v + t;
            first = false;
        }
        return v;
    }

    P term() {
        P v = power();
        while (eat('*')) v = v * power();
        return v;
    }

    P power() {
        P base = atom();
        if (!eat('^')) return base;
        skip();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected exponent");
        unsigned long e = std::stoul(std::string(s_.substr(start, pos_ - start)));
        P r(Integer(1));
        P b = base;
        while (e) {
            if (e & 1) r = r * b;
            e >>= 1;
            if (e) b = b * b;
        }
        return r;
    }

    P atom() {
        skip();
        if (pos_ == s_.size()) fail("unexpected end of input");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            P v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (c == '-') {
            ++pos_;
            return P() - power();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return P(Integer(std::string(s_.substr(start, pos_ - start))));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            ++pos_;
            if (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_])))
                fail("unknown identifier");
            std::optional<P> v = lookup_(c);
            if (!v) fail("unknown variable");
            return *v;
        }
        fail("unexpected character");
    }

    std::string_view s_;
    Lookup lookup_;
    std::size_t pos_ = 0;
};

} // namespace motzhank::detail
