// SPDX-License-Identifier: Apache-2.0
#include "tcalg/bigint.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace tcalg {

BigInt::BigInt(long long v) {
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    unsigned long long mag = v < 0 ? 0ull - static_cast<unsigned long long>(v)
                                   : static_cast<unsigned long long>(v);
    while (mag != 0) {
        limbs_.push_back(static_cast<std::uint32_t>(mag % kBase));
        mag /= kBase;
    }
}

BigInt BigInt::from_string(std::string_view text) {
    size_t pos = 0;
    int sign = 1;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        if (text[pos] == '-') sign = -1;
        ++pos;
    }
    if (pos == text.size())
        throw std::invalid_argument("BigInt: empty numeral");
    BigInt out;
    for (; pos < text.size(); ++pos) {
        char c = text[pos];
        if (c < '0' || c > '9')
            throw std::invalid_argument("BigInt: bad digit in numeral");
        out *= BigInt(10);
        out += BigInt(c - '0');
    }
    if (sign < 0) out = -out;
    return out;
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) sign_ = 0;
}

int BigInt::cmp_mag(const BigInt& a, const BigInt& b) {
    if (a.limbs_.size() != b.limbs_.size())
        return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
    for (size_t k = a.limbs_.size(); k-- > 0;) {
        if (a.limbs_[k] != b.limbs_[k]) return a.limbs_[k] < b.limbs_[k] ? -1 : 1;
    }
    return 0;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out;
    out.reserve(std::max(a.size(), b.size()) + 1);
    std::uint32_t carry = 0;
    for (size_t k = 0; k < a.size() || k < b.size() || carry; ++k) {
        std::uint64_t s = carry;
        if (k < a.size()) s += a[k];
        if (k < b.size()) s += b[k];
        out.push_back(static_cast<std::uint32_t>(s % kBase));
        carry = static_cast<std::uint32_t>(s / kBase);
    }
    return out;
}

std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out;
    out.reserve(a.size());
    std::int64_t borrow = 0;
    for (size_t k = 0; k < a.size(); ++k) {
        std::int64_t s = static_cast<std::int64_t>(a[k]) - borrow -
                         (k < b.size() ? static_cast<std::int64_t>(b[k]) : 0);
        if (s < 0) {
            s += kBase;
            borrow = 1;
        } else {
            borrow = 0;
        }
        out.push_back(static_cast<std::uint32_t>(s));
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

std::vector<std::uint32_t> BigInt::mul_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint64_t> acc(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        std::uint64_t carry = 0;
        for (size_t j = 0; j < b.size(); ++j) {
            // acc entries stay below 2^64: each step adds < kBase^2 + kBase.
            std::uint64_t cur = acc[i + j] + static_cast<std::uint64_t>(a[i]) * b[j] + carry;
            acc[i + j] = cur % kBase;
            carry = cur / kBase;
        }
        size_t k = i + b.size();
        while (carry) {
            std::uint64_t cur = acc[k] + carry;
            acc[k] = cur % kBase;
            carry = cur / kBase;
            ++k;
        }
    }
    std::vector<std::uint32_t> out(acc.size());
    for (size_t k = 0; k < acc.size(); ++k) out[k] = static_cast<std::uint32_t>(acc[k]);
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

BigInt BigInt::operator-() const {
    BigInt out = *this;
    out.sign_ = -out.sign_;
    return out;
}

BigInt BigInt::abs() const {
    BigInt out = *this;
    if (out.sign_ < 0) out.sign_ = 1;
    return out;
}

BigInt& BigInt::operator+=(const BigInt& rhs) {
    if (rhs.sign_ == 0) return *this;
    if (sign_ == 0) return *this = rhs;
    if (sign_ == rhs.sign_) {
        limbs_ = add_mag(limbs_, rhs.limbs_);
        return *this;
    }
    int c = cmp_mag(*this, rhs);
    if (c == 0) {
        sign_ = 0;
        limbs_.clear();
    } else if (c > 0) {
        limbs_ = sub_mag(limbs_, rhs.limbs_);
    } else {
        limbs_ = sub_mag(rhs.limbs_, limbs_);
        sign_ = rhs.sign_;
    }
    return *this;
}

BigInt& BigInt::operator-=(const BigInt& rhs) { return *this += -rhs; }

BigInt& BigInt::operator*=(const BigInt& rhs) {
    sign_ = sign_ * rhs.sign_;
    limbs_ = mul_mag(limbs_, rhs.limbs_);
    if (limbs_.empty()) sign_ = 0;
    return *this;
}

void BigInt::divmod_mag(const std::vector<std::uint32_t>& a,
                        const std::vector<std::uint32_t>& b,
                        std::vector<std::uint32_t>& q,
                        std::vector<std::uint32_t>& r) {
    q.clear();
    r.clear();
    if (b.empty()) throw std::domain_error("BigInt: division by zero");
    if (a.size() < b.size()) {
        r = a;
        return;
    }
    if (b.size() == 1) {
        std::uint64_t d = b[0], rem = 0;
        q.assign(a.size(), 0);
        for (size_t k = a.size(); k-- > 0;) {
            std::uint64_t cur = rem * kBase + a[k];
            q[k] = static_cast<std::uint32_t>(cur / d);
            rem = cur % d;
        }
        while (!q.empty() && q.back() == 0) q.pop_back();
        if (rem) r.push_back(static_cast<std::uint32_t>(rem));
        return;
    }

    // Schoolbook long division with a normalized divisor (Knuth-style trial
    // digits estimated from the top two limbs, corrected by at most two steps).
    std::uint32_t scale = kBase / (b.back() + 1);
    std::vector<std::uint32_t> u = scale == 1 ? a : mul_mag(a, {scale});
    std::vector<std::uint32_t> v = scale == 1 ? b : mul_mag(b, {scale});
    const size_t n = v.size();
    u.push_back(0);
    const size_t m = u.size() - n;
    q.assign(m, 0);

    for (size_t j = m; j-- > 0;) {
        std::uint64_t top = static_cast<std::uint64_t>(u[j + n]) * kBase + u[j + n - 1];
        std::uint64_t qhat = top / v[n - 1];
        std::uint64_t rhat = top % v[n - 1];
        // qhat <= kBase + 2 here, so the correction loop runs O(1) times.
        while (qhat >= kBase || qhat * v[n - 2] > rhat * kBase + u[j + n - 2]) {
            --qhat;
            rhat += v[n - 1];
            if (rhat >= kBase) break;
        }
        // Multiply-subtract u[j..j+n] -= qhat * v.
        std::int64_t borrow = 0;
        std::uint64_t carry = 0;
        for (size_t k = 0; k < n; ++k) {
            std::uint64_t p = qhat * v[k] + carry;
            carry = p / kBase;
            std::int64_t s = static_cast<std::int64_t>(u[j + k]) -
                             static_cast<std::int64_t>(p % kBase) - borrow;
            if (s < 0) {
                s += kBase;
                borrow = 1;
            } else {
                borrow = 0;
            }
            u[j + k] = static_cast<std::uint32_t>(s);
        }
        std::int64_t s = static_cast<std::int64_t>(u[j + n]) -
                         static_cast<std::int64_t>(carry) - borrow;
        if (s < 0) {
            // Trial digit one too large: add the divisor back once.
            // The underflow is then exactly cancelled by the add-back carry.
            --qhat;
            std::uint32_t c2 = 0;
            for (size_t k = 0; k < n; ++k) {
                std::uint64_t t = static_cast<std::uint64_t>(u[j + k]) + v[k] + c2;
                u[j + k] = static_cast<std::uint32_t>(t % kBase);
                c2 = static_cast<std::uint32_t>(t / kBase);
            }
            s += c2;
        }
        u[j + n] = static_cast<std::uint32_t>(s);
        q[j] = static_cast<std::uint32_t>(qhat);
    }
    while (!q.empty() && q.back() == 0) q.pop_back();

    u.resize(n);
    while (!u.empty() && u.back() == 0) u.pop_back();
    if (scale != 1 && !u.empty()) {
        std::vector<std::uint32_t> rq, rr;
        divmod_mag(u, {scale}, rq, rr);
        u = rq;  // exact: the remainder of the scaled value is divisible by scale
    }
    r = u;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    const int q_sign = a.sign_ * b.sign_;
    const int r_sign = a.sign_;
    std::vector<std::uint32_t> qm, rm;
    divmod_mag(a.limbs_, b.limbs_, qm, rm);
    q.limbs_ = std::move(qm);
    r.limbs_ = std::move(rm);
    q.sign_ = q.limbs_.empty() ? 0 : q_sign;
    r.sign_ = r.limbs_.empty() ? 0 : r_sign;
}

BigInt BigInt::operator/(const BigInt& b) const {
    BigInt q, r;
    divmod(*this, b, q, r);
    return q;
}

BigInt BigInt::operator%(const BigInt& b) const {
    BigInt q, r;
    divmod(*this, b, q, r);
    return r;
}

BigInt BigInt::gcd(const BigInt& a, const BigInt& b) {
    BigInt x = a.abs(), y = b.abs();
    while (!y.is_zero()) {
        BigInt q, r;
        divmod(x, y, q, r);
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

std::strong_ordering BigInt::operator<=>(const BigInt& rhs) const {
    if (sign_ != rhs.sign_) return sign_ <=> rhs.sign_;
    int c = cmp_mag(*this, rhs);
    if (sign_ < 0) c = -c;
    return c <=> 0;
}

std::string BigInt::to_string() const {
    if (sign_ == 0) return "0";
    std::string out;
    if (sign_ < 0) out.push_back('-');
    char buf[16];
    std::snprintf(buf, sizeof buf, "%u", limbs_.back());
    out += buf;
    for (size_t k = limbs_.size() - 1; k-- > 0;) {
        std::snprintf(buf, sizeof buf, "%09u", limbs_[k]);
        out += buf;
    }
    return out;
}

long long BigInt::to_int64() const {
    constexpr long long kMax = 9223372036854775807LL;
    long long out = 0;
    for (size_t k = limbs_.size(); k-- > 0;) {
        if (out > (kMax - static_cast<long long>(limbs_[k])) / static_cast<long long>(kBase))
            throw std::overflow_error("BigInt: value does not fit in int64");
        out = out * static_cast<long long>(kBase) + static_cast<long long>(limbs_[k]);
    }
    return sign_ < 0 ? -out : out;
}

}  // namespace tcalg
