// SPDX-License-Identifier: Apache-2.0
#ifndef TCALG_POLYNOMIAL_HPP
#define TCALG_POLYNOMIAL_HPP

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "tcalg/bigint.hpp"
#include "tcalg/monomial.hpp"

namespace tcalg {

/// Exact integer combination of canonical basis monomials of one algebra.
/// Invariants: every stored monomial is canonical, no zero coefficients,
/// terms ordered by the canonical monomial order.
class Polynomial {
public:
    using TermMap = std::map<Monomial, BigInt, MonomialLess>;

    // Zero of a not-yet-specified algebra; any operation validates params.
    Polynomial() = default;
    explicit Polynomial(Params params) : params_(std::move(params)) {}

    static Polynomial zero(const Params& params) { return Polynomial(params); }
    static Polynomial unit(const Params& params) { return constant(params, BigInt(1)); }
    static Polynomial constant(const Params& params, BigInt c);
    static Polynomial generator(const Generator& g, const Params& params);

    const Params& params() const { return params_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    BigInt coefficient(const Monomial& mono) const;

    // Degree of the highest-degree monomial, or nullopt for the zero
    // polynomial. is_homogeneous also reports true for zero.
    std::optional<int> top_degree() const;
    bool is_homogeneous() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& rhs);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);

    bool operator==(const Polynomial& rhs) const {
        return params_.same_algebra(rhs.params_) && terms_ == rhs.terms_;
    }

    // Internal: accumulate c into the coefficient of mono, erasing zeros.
    void add_term(Monomial mono, BigInt c);

private:
    Params params_;
    TermMap terms_;
};

/// Straightens an arbitrary word of generators (times an integer
/// coefficient) into the canonical basis. Rewriting rules, applied to
/// fixpoint: transpositions into canonical block order pick up sign_swap
/// each; a repeated generator kills the term; an adjacent same-block pair
/// sharing the second index j with first indices i < i' becomes
/// w(i,i') * (w(i',j) - w(i,j)) with the new factor re-layered through
/// make_generator. Words longer than params.max_word_len are rejected.
Polynomial normal_form(std::span<const Generator> word, const BigInt& coeff,
                       const Params& params);

// Re-normalizes a polynomial term by term; a no-op on canonical input.
Polynomial normal_form(const Polynomial& p);

/// Bilinear product: distributes, concatenates words, straightens.
Polynomial multiply(const Polynomial& a, const Polynomial& b);

Polynomial power(const Polynomial& base, int exponent);

/// Closed-form expansion of w[l](j_1,j)*...*w[l](j_p,j) for an increasing
/// sequence J = (j_1 < ... < j_p) and j > j_p: the signed sum over the
/// 2^(p-1) modifications I of J, with sign (-1)^(repetitions in I), of the
/// basis words pairing I against (j_2, ..., j_p, j).
Polynomial expand_modifications(int layer, std::span<const int> J, int j,
                                const Params& params);

/// Ring homomorphism induced by the diagonal: every fiber-layer class maps
/// to the corresponding class of the single-space algebra (same d, m, n,
/// r = 1). Base classes are fixed. An element lies in the diagonal kernel
/// iff its image is zero.
Polynomial diagonal_restriction(const Polynomial& p);

inline bool in_diagonal_kernel(const Polynomial& p) {
    return diagonal_restriction(p).is_zero();
}

}  // namespace tcalg

#endif
