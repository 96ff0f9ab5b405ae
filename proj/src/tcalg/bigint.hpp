// SPDX-License-Identifier: Apache-2.0
#ifndef TCALG_BIGINT_HPP
#define TCALG_BIGINT_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace tcalg {

/// Signed arbitrary-precision integer.
///
/// Sign-magnitude representation with little-endian base-10^9 limbs;
/// the zero value has an empty limb vector and sign 0. All arithmetic
/// is exact; there is no implicit conversion back to machine integers.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);

    static BigInt from_string(std::string_view text);

    bool is_zero() const { return sign_ == 0; }
    int sign() const { return sign_; }

    BigInt operator-() const;
    BigInt abs() const;

    BigInt& operator+=(const BigInt& rhs);
    BigInt& operator-=(const BigInt& rhs);
    BigInt& operator*=(const BigInt& rhs);

    friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
    friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
    friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }

    // Truncated division: q = trunc(a/b), r = a - q*b (r has the sign of a).
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
    BigInt operator/(const BigInt& b) const;
    BigInt operator%(const BigInt& b) const;

    static BigInt gcd(const BigInt& a, const BigInt& b);

    bool operator==(const BigInt& rhs) const = default;
    std::strong_ordering operator<=>(const BigInt& rhs) const;

    std::string to_string() const;

    // Exact conversion; throws if the value does not fit.
    long long to_int64() const;

private:
    static constexpr std::uint32_t kBase = 1000000000u;

    int sign_ = 0;
    std::vector<std::uint32_t> limbs_;

    void trim();
    static int cmp_mag(const BigInt& a, const BigInt& b);
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    // Requires |a| >= |b|.
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static void divmod_mag(const std::vector<std::uint32_t>& a,
                           const std::vector<std::uint32_t>& b,
                           std::vector<std::uint32_t>& q,
                           std::vector<std::uint32_t>& r);
};

inline BigInt abs(const BigInt& v) { return v.abs(); }

}  // namespace tcalg

#endif
