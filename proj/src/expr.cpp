#include "riordan/expr.hpp"

#include <cctype>

#include "riordan/sequences.hpp"

namespace riordan {

namespace {

bool is_series_name(const std::string& s) { return s == "C" || s == "M" || s == "W"; }

class Parser {
public:
    explicit Parser(std::string_view text) : s_(text) {}

    ExprPtr parse_all() {
        ExprPtr e = expr();
        skip_space();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return e;
    }

    ExprPtr expr() {
        ExprPtr left = term();
        while (true) {
            skip_space();
            if (peek('+') || peek('-')) {
                const std::size_t at = pos_;
                const auto kind = s_[pos_++] == '+' ? Expr::Kind::Add : Expr::Kind::Sub;
                left = binary(kind, left, term(), at);
            } else {
                return left;
            }
        }
    }

private:
    ExprPtr term() {
        ExprPtr left = unary();
        while (true) {
            skip_space();
            if (peek('*') || peek('/')) {
                const std::size_t at = pos_;
                const auto kind = s_[pos_++] == '*' ? Expr::Kind::Mul : Expr::Kind::Div;
                left = binary(kind, left, unary(), at);
            } else {
                return left;
            }
        }
    }

    ExprPtr unary() {
        skip_space();
        if (peek('-')) {
            auto e = node(Expr::Kind::Neg, pos_++);
            e->lhs = unary();
            return e;
        }
        return factor();
    }

    ExprPtr factor() {
        ExprPtr b = base();
        skip_space();
        if (!peek('^')) return b;
        auto e = node(Expr::Kind::Pow, pos_++);
        skip_space();
        bool negative = false;
        if (peek('-')) {
            negative = true;
            ++pos_;
            skip_space();
        }
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected integer exponent");
        const std::size_t start = pos_;
        long value = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            value = value * 10 + (s_[pos_++] - '0');
            if (value > 100000) {
                pos_ = start;
                fail("exponent too large");
            }
        }
        e->exponent = static_cast<int>(negative ? -value : value);
        e->lhs = b;
        return e;
    }

    ExprPtr base() {
        skip_space();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            ExprPtr e = expr();
            expect(')');
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            auto e = node(Expr::Kind::Number, pos_);
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            e->value = Rational(mpz_class(std::string(s_.substr(start, pos_ - start))));
            return e;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            const std::string name(s_.substr(start, pos_ - start));
            if (name == "x") return node(Expr::Kind::X, start);
            skip_space();
            const bool call = peek('(');
            if (name == "sqrt") {
                if (!call) fail("expected '(' after sqrt");
                auto e = node(Expr::Kind::Sqrt, start);
                ++pos_;
                e->lhs = expr();
                expect(')');
                return e;
            }
            if (!is_series_name(name)) {
                throw Error(Errc::UnknownName, "'" + name + "' at byte " + std::to_string(start));
            }
            auto e = node(call ? Expr::Kind::Call : Expr::Kind::Named, start);
            e->name = name;
            if (call) {
                ++pos_;
                e->lhs = expr();
                expect(')');
            }
            return e;
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::shared_ptr<Expr> node(Expr::Kind k, std::size_t at) {
        auto e = std::make_shared<Expr>();
        e->kind = k;
        e->offset = at;
        return e;
    }

    ExprPtr binary(Expr::Kind k, ExprPtr l, ExprPtr r, std::size_t at) {
        auto e = node(k, at);
        e->lhs = std::move(l);
        e->rhs = std::move(r);
        return e;
    }

    void skip_space() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) const { return pos_ < s_.size() && s_[pos_] == c; }
    void expect(char c) {
        skip_space();
        if (!peek(c)) fail(std::string("expected '") + c + "'");
        ++pos_;
    }
    [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(pos_, what); }

    std::string_view s_;
    std::size_t pos_ = 0;
};

Series named_series(const std::string& name, int order) {
    if (name == "C") return catalan_series(order);
    if (name == "M") return motzkin_series(order);
    return central_binomial_series(order);
}

} // namespace

ExprPtr parse_expr(std::string_view text) { return Parser(text).parse_all(); }

Series eval(const Expr& e, int order) {
    using K = Expr::Kind;
    switch (e.kind) {
    case K::X: return Series::x(order);
    case K::Number: return Series::constant(e.value, order);
    case K::Named: return named_series(e.name, order);
    case K::Call: {
        const Series inner = eval(*e.lhs, order);
        if (inner.valuation() < 1) {
            throw Error(Errc::NonformalComposition,
                        e.name + "(...) at byte " + std::to_string(e.offset) + " needs an argument with zero constant term");
        }
        return compose(named_series(e.name, order), inner);
    }
    case K::Sqrt: return sqrt(eval(*e.lhs, order));
    case K::Neg: return -eval(*e.lhs, order);
    case K::Add: return eval(*e.lhs, order) + eval(*e.rhs, order);
    case K::Sub: return eval(*e.lhs, order) - eval(*e.rhs, order);
    case K::Mul: return eval(*e.lhs, order) * eval(*e.rhs, order);
    case K::Div: return eval(*e.lhs, order) / eval(*e.rhs, order);
    case K::Pow: return pow(eval(*e.lhs, order), e.exponent);
    }
    throw Error(Errc::InvalidArgument, "bad expression node");
}

Series eval_exact(const Expr& e, int order) {
    for (int slack = 0; slack <= 64; slack = slack == 0 ? 4 : slack * 2) {
        const Series s = eval(e, order + slack);
        if (s.order() >= order) return s.truncate(order);
    }
    throw Error(Errc::WindowTooSmall, "expression loses more than 64 degrees of precision");
}

RiordanPair parse_pair(std::string_view text, int order) {
    std::size_t open = text.find_first_not_of(" \t");
    if (open == std::string_view::npos || text[open] != '(') throw SyntaxError(open == std::string_view::npos ? 0 : open, "expected '('");
    // split at the top-level comma
    int depth = 0;
    std::size_t comma = std::string_view::npos, close = std::string_view::npos;
    for (std::size_t i = open; i < text.size(); ++i) {
        const char c = text[i];
        if (c == '(') ++depth;
        else if (c == ')') {
            if (--depth == 0) {
                close = i;
                break;
            }
        } else if (c == ',' && depth == 1 && comma == std::string_view::npos) {
            comma = i;
        }
    }
    if (close == std::string_view::npos) throw SyntaxError(text.size(), "expected ')'");
    if (comma == std::string_view::npos) throw SyntaxError(close, "expected ',' between g and f");
    if (text.find_first_not_of(" \t", close + 1) != std::string_view::npos) {
        throw SyntaxError(text.find_first_not_of(" \t", close + 1), "trailing input");
    }
    auto component = [&](std::size_t from, std::size_t to) {
        try {
            return eval_exact(*parse_expr(text.substr(from, to - from)), order);
        } catch (const SyntaxError& e) {
            throw SyntaxError(from + e.offset(), std::string(e.what()).substr(std::string(e.what()).find(": ", 13) + 2));
        }
    };
    const Series g = component(open + 1, comma);
    const Series f = component(comma + 1, close);
    return RiordanPair::classify(g, f);
}

} // namespace riordan
