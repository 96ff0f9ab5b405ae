// SPDX-License-Identifier: Apache-2.0
#ifndef TCALG_MONOMIAL_HPP
#define TCALG_MONOMIAL_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "tcalg/generator.hpp"

namespace tcalg {

/// An ordered word of generators. Canonical monomials (the additive basis)
/// are sorted in the canonical order with strictly increasing second
/// indices inside every block; the empty word is the unit class.
struct Monomial {
    std::vector<Generator> word;

    bool is_unit() const { return word.empty(); }
    std::size_t length() const { return word.size(); }
    int degree(const Params& params) const {
        return static_cast<int>(word.size()) * params.deg_gen();
    }

    bool contains(const Generator& g) const {
        return std::find(word.begin(), word.end(), g) != word.end();
    }

    bool operator==(const Monomial&) const = default;
};

inline bool monomial_less(const Monomial& a, const Monomial& b) {
    return std::lexicographical_compare(a.word.begin(), a.word.end(),
                                        b.word.begin(), b.word.end(), generator_less);
}

struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return monomial_less(a, b);
    }
};

// "1" for the unit, otherwise factors joined with '*'.
inline std::string format_monomial(const Monomial& mono) {
    if (mono.is_unit()) return "1";
    std::string out;
    for (std::size_t k = 0; k < mono.word.size(); ++k) {
        if (k) out += "*";
        out += format_generator(mono.word[k]);
    }
    return out;
}

}  // namespace tcalg

#endif
