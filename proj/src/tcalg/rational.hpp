// SPDX-License-Identifier: Apache-2.0
#ifndef TCALG_RATIONAL_HPP
#define TCALG_RATIONAL_HPP

#include <string>

#include "tcalg/bigint.hpp"

namespace tcalg {

/// Exact rational number; always stored reduced with a positive denominator.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(BigInt n, BigInt d);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_ == BigInt(1); }

    Rational operator-() const;
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational& operator+=(const Rational& r) { return *this = *this + r; }
    Rational& operator-=(const Rational& r) { return *this = *this - r; }
    Rational& operator*=(const Rational& r) { return *this = *this * r; }
    Rational& operator/=(const Rational& r) { return *this = *this / r; }

    bool operator==(const Rational& rhs) const = default;

    // "p" when integral, "p/q" otherwise.
    std::string to_string() const;

private:
    BigInt num_;
    BigInt den_;

    void normalize();
};

}  // namespace tcalg

#endif
