// SPDX-License-Identifier: Apache-2.0
#ifndef TCALG_INTPOLY_HPP
#define TCALG_INTPOLY_HPP

#include <string>
#include <vector>

#include "tcalg/bigint.hpp"

namespace tcalg {

/// Dense integer polynomial in one variable t; coefficients indexed by
/// power, trailing zeros trimmed (the zero polynomial has no coefficients).
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs);
    static IntPoly constant(BigInt c);
    static IntPoly monomial(BigInt c, std::size_t power);

    bool is_zero() const { return coeffs_.empty(); }
    // Degree of the zero polynomial is -1 by convention.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    BigInt at(std::size_t power) const;
    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    BigInt eval_at_one() const;

    IntPoly operator-() const;
    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    bool operator==(const IntPoly&) const = default;

    /// Exact quotient by (1 - t); requires eval_at_one() == 0.
    IntPoly divide_by_one_minus_t() const;

    /// Coefficients of the expansion in powers of (1 - t).
    std::vector<BigInt> taylor_at_one() const;

    // "1 + 5t^2 + 8t^4", "-t", "0", ...
    std::string to_string(const std::string& var = "t") const;

private:
    std::vector<BigInt> coeffs_;
    void trim();
};

// (1 - t)^e expanded in powers of t.
IntPoly one_minus_t_power(unsigned e);

}  // namespace tcalg

#endif
