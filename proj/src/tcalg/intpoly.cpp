// SPDX-License-Identifier: Apache-2.0
#include "tcalg/intpoly.hpp"

#include <stdexcept>

namespace tcalg {

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::constant(BigInt c) { return IntPoly(std::vector<BigInt>{std::move(c)}); }

IntPoly IntPoly::monomial(BigInt c, std::size_t power) {
    std::vector<BigInt> v(power + 1);
    v[power] = std::move(c);
    return IntPoly(std::move(v));
}

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

BigInt IntPoly::at(std::size_t power) const {
    return power < coeffs_.size() ? coeffs_[power] : BigInt(0);
}

BigInt IntPoly::eval_at_one() const {
    BigInt s;
    for (const BigInt& c : coeffs_) s += c;
    return s;
}

IntPoly IntPoly::operator-() const {
    IntPoly out = *this;
    for (BigInt& c : out.coeffs_) c = -c;
    return out;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<BigInt> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = a.at(k) + b.at(k);
    return IntPoly(std::move(v));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<BigInt> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntPoly(std::move(v));
}

IntPoly IntPoly::divide_by_one_minus_t() const {
    if (!eval_at_one().is_zero())
        throw std::domain_error("IntPoly: not divisible by (1 - t)");
    if (is_zero()) return IntPoly();
    // (1-t) * sum(q_k t^k) matches p iff q_k = p_0 + ... + p_k.
    std::vector<BigInt> q(coeffs_.size() - 1);
    BigInt run;
    for (std::size_t k = 0; k + 1 < coeffs_.size(); ++k) {
        run += coeffs_[k];
        q[k] = run;
    }
    return IntPoly(std::move(q));
}

std::vector<BigInt> IntPoly::taylor_at_one() const {
    std::vector<BigInt> out;
    IntPoly rest = *this;
    while (!rest.is_zero()) {
        BigInt head = rest.eval_at_one();
        out.push_back(head);
        rest = (rest - IntPoly::constant(head)).divide_by_one_minus_t();
    }
    return out;
}

std::string IntPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const BigInt& c = coeffs_[k];
        if (c.is_zero()) continue;
        BigInt mag = c.abs();
        if (first) {
            if (c.sign() < 0) out += "-";
            first = false;
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        bool unit_coeff = mag == BigInt(1);
        if (k == 0 || !unit_coeff) out += mag.to_string();
        if (k > 0) {
            out += var;
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

IntPoly one_minus_t_power(unsigned e) {
    IntPoly out = IntPoly::constant(BigInt(1));
    IntPoly base(std::vector<BigInt>{BigInt(1), BigInt(-1)});
    for (unsigned k = 0; k < e; ++k) out = out * base;
    return out;
}

}  // namespace tcalg
