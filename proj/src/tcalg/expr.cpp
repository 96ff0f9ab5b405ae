// SPDX-License-Identifier: Apache-2.0
#include "tcalg/expr.hpp"

#include <cctype>

namespace tcalg {

namespace {

class Parser {
public:
    Parser(std::string_view text, const Params& params) : text_(text), params_(params) {}

    Expression run() {
        Expression e = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return e;
    }

private:
    std::string_view text_;
    const Params& params_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) { throw ParseError(pos_, what); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c, const char* what) {
        if (!eat(c)) fail(std::string("expected '") + c + "' " + what);
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    long long parse_int() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == start) fail("expected an integer");
        if (pos_ - start > 18) fail("integer literal too long");
        long long v = 0;
        for (std::size_t k = start; k < pos_; ++k) v = v * 10 + (text_[k] - '0');
        return v;
    }

    std::unique_ptr<Expression> make(Expression e) {
        return std::make_unique<Expression>(std::move(e));
    }

    Expression parse_expr() {
        Expression acc = parse_term();
        while (true) {
            if (eat('+')) {
                Expression next;
                next.node = Expression::Node::Add;
                next.lhs = make(std::move(acc));
                next.rhs = make(parse_term());
                acc = std::move(next);
            } else if (eat('-')) {
                Expression next;
                next.node = Expression::Node::Sub;
                next.lhs = make(std::move(acc));
                next.rhs = make(parse_term());
                acc = std::move(next);
            } else {
                return acc;
            }
        }
    }

    Expression parse_term() {
        Expression acc = parse_factor();
        while (eat('*')) {
            Expression next;
            next.node = Expression::Node::Mul;
            next.lhs = make(std::move(acc));
            next.rhs = make(parse_factor());
            acc = std::move(next);
        }
        return acc;
    }

    Expression parse_factor() {
        if (eat('-')) {
            Expression neg;
            neg.node = Expression::Node::Neg;
            neg.lhs = make(parse_factor());
            return neg;
        }
        Expression base = parse_primary();
        if (eat('^')) {
            long long e = parse_int();
            if (e > 1000) fail("exponent too large");
            Expression pow;
            pow.node = Expression::Node::Pow;
            pow.exponent = static_cast<int>(e);
            pow.lhs = make(std::move(base));
            return pow;
        }
        return base;
    }

    Expression parse_primary() {
        char c = peek();
        if (c == '(') {
            expect('(', "to open a subexpression");
            Expression inner = parse_expr();
            expect(')', "to close the subexpression");
            return inner;
        }
        if (c == 'w') {
            ++pos_;
            int layer = kBaseLayer;
            if (eat('[')) {
                layer = static_cast<int>(parse_int());
                expect(']', "after the layer index");
            }
            expect('(', "before the generator indices");
            long long i = parse_int();
            expect(',', "between the generator indices");
            long long j = parse_int();
            expect(')', "after the generator indices");
            Expression atom;
            atom.node = Expression::Node::Atom;
            // Validation errors surface as positioned parse errors.
            try {
                atom.atom = make_generator(layer, static_cast<int>(i),
                                           static_cast<int>(j), params_);
            } catch (const Error& err) {
                fail(err.what());
            }
            return atom;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Expression lit;
            lit.node = Expression::Node::Literal;
            lit.literal = BigInt(parse_int());
            return lit;
        }
        fail(c == '\0' ? "unexpected end of input" : "unexpected character");
    }
};

}  // namespace

Expression parse(std::string_view text, const Params& params) {
    params.validate();
    return Parser(text, params).run();
}

Polynomial evaluate(const Expression& expr, const Params& params) {
    switch (expr.node) {
        case Expression::Node::Literal:
            return Polynomial::constant(params, expr.literal);
        case Expression::Node::Atom:
            return Polynomial::generator(expr.atom, params);
        case Expression::Node::Neg:
            return -evaluate(*expr.lhs, params);
        case Expression::Node::Add:
            return evaluate(*expr.lhs, params) + evaluate(*expr.rhs, params);
        case Expression::Node::Sub:
            return evaluate(*expr.lhs, params) - evaluate(*expr.rhs, params);
        case Expression::Node::Mul:
            return multiply(evaluate(*expr.lhs, params), evaluate(*expr.rhs, params));
        case Expression::Node::Pow:
            return power(evaluate(*expr.lhs, params), expr.exponent);
    }
    fail_invalid("evaluate: malformed expression tree");
}

std::string format(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [mono, coeff] : p.terms()) {
        BigInt mag = coeff.abs();
        if (first) {
            if (coeff.sign() < 0) out += "-";
            first = false;
        } else {
            out += coeff.sign() < 0 ? " - " : " + ";
        }
        if (mono.is_unit()) {
            out += mag.to_string();
        } else {
            if (mag != BigInt(1)) out += mag.to_string() + "*";
            out += format_monomial(mono);
        }
    }
    return out;
}

}  // namespace tcalg
