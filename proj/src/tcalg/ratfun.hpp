// SPDX-License-Identifier: Apache-2.0
#ifndef TCALG_RATFUN_HPP
#define TCALG_RATFUN_HPP

#include <optional>
#include <string>
#include <vector>

#include "tcalg/intpoly.hpp"
#include "tcalg/rational.hpp"

namespace tcalg {

/// The decomposition F(t) = A/(1-t)^2 + B/(1-t) + p(t); exists exactly
/// when the reduced denominator is a constant times (1-t)^e with e <= 2.
struct PoleForm {
    Rational A;
    Rational B;
    std::vector<Rational> p;  // polynomial part, coefficients by power of t

    std::string to_string() const;
};

/// Exact ratio of integer polynomials in t, stored gcd-reduced with the
/// lowest nonzero denominator coefficient positive.
class RationalFunction {
public:
    RationalFunction(IntPoly numerator, IntPoly denominator);

    const IntPoly& numerator() const { return num_; }
    const IntPoly& denominator() const { return den_; }

    std::optional<PoleForm> pole_form() const;

    /// (A, B) of the pole form; throws if no pole form exists.
    std::pair<Rational, Rational> principal_residues() const;

    /// First `count` Taylor coefficients at t = 0; the denominator must
    /// not vanish there.
    std::vector<Rational> expand_series(int count) const;

    bool operator==(const RationalFunction&) const = default;

    // "t/(1-t)^2", "(6t - 4t^2)/(1-t)^2", plain polynomial when den = 1.
    std::string to_string() const;

private:
    IntPoly num_;
    IntPoly den_;

    void reduce();
};

}  // namespace tcalg

#endif
