// SPDX-License-Identifier: Apache-2.0
#ifndef TCALG_EXPR_HPP
#define TCALG_EXPR_HPP

#include <memory>
#include <string>
#include <string_view>

#include "tcalg/polynomial.hpp"

namespace tcalg {

/// Abstract syntax for class expressions. Grammar (whitespace ignored):
///   expr   := term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := '-' factor | primary ('^' INT)?
///   primary:= INT | 'w' ('[' INT ']')? '(' INT ',' INT ')' | '(' expr ')'
/// Generator atoms are validated (and layer-normalized) against the
/// session parameters at parse time.
struct Expression {
    enum class Node { Literal, Atom, Neg, Add, Sub, Mul, Pow };

    Node node = Node::Literal;
    BigInt literal;
    Generator atom{};
    int exponent = 0;
    std::unique_ptr<Expression> lhs;
    std::unique_ptr<Expression> rhs;
};

/// Thrown on malformed input; position is a 0-based byte offset.
class ParseError : public Error {
public:
    ParseError(std::size_t position, const std::string& what)
        : Error(Errc::invalid_argument,
                "syntax error at position " + std::to_string(position) + ": " + what),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

Expression parse(std::string_view text, const Params& params);

Polynomial evaluate(const Expression& expr, const Params& params);

inline Polynomial evaluate(std::string_view text, const Params& params) {
    return evaluate(parse(text, params), params);
}

/// Deterministic rendering, terms in the canonical monomial order;
/// parse/evaluate maps the output back to the same polynomial.
std::string format(const Polynomial& p);

}  // namespace tcalg

#endif
