// SPDX-License-Identifier: Apache-2.0
#ifndef TCALG_TESTS_HELPERS_HPP
#define TCALG_TESTS_HELPERS_HPP

#include <random>
#include <vector>

#include "tcalg/polynomial.hpp"

namespace tcalg::testing {

inline std::vector<Generator> all_generators(const Params& params) {
    std::vector<Generator> out;
    for (int j = 2; j <= params.m; ++j)
        for (int i = 1; i < j; ++i) out.push_back(make_generator(kBaseLayer, i, j, params));
    for (int l = 1; l <= params.r; ++l)
        for (int j = params.m + 1; j <= params.points(); ++j)
            for (int i = 1; i < j; ++i) out.push_back(make_generator(l, i, j, params));
    return out;
}

inline Polynomial gen_poly(const Params& params, int layer, int i, int j) {
    return Polynomial::generator(make_generator(layer, i, j, params), params);
}

inline std::vector<Generator> random_word(std::mt19937_64& rng,
                                          const std::vector<Generator>& pool,
                                          std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len_dist(0, max_len);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::vector<Generator> out;
    const std::size_t len = len_dist(rng);
    out.reserve(len);
    for (std::size_t k = 0; k < len; ++k) out.push_back(pool[pick(rng)]);
    return out;
}

// Random already-canonical polynomial: a signed combination of basis words.
inline Polynomial random_polynomial(std::mt19937_64& rng, const Params& params,
                                    const std::vector<Generator>& pool,
                                    std::size_t max_terms, std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> terms_dist(0, max_terms);
    std::uniform_int_distribution<long long> coeff_dist(-9, 9);
    Polynomial out(params);
    const std::size_t terms = terms_dist(rng);
    for (std::size_t k = 0; k < terms; ++k) {
        std::vector<Generator> w = random_word(rng, pool, max_len);
        out += normal_form(w, BigInt(coeff_dist(rng)), params);
    }
    return out;
}

}  // namespace tcalg::testing

#endif
