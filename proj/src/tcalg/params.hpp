// SPDX-License-Identifier: Apache-2.0
#ifndef TCALG_PARAMS_HPP
#define TCALG_PARAMS_HPP

#include <cstddef>
#include <string>

#include "tcalg/error.hpp"

namespace tcalg {

/// Ambient-algebra parameters: points move in R^d, there are m obstacles,
/// n robots and r snapshots of the motion. r = 1 selects the single-space
/// algebra of ordered configurations of m+n points, which is the codomain
/// of the diagonal restriction.
struct Params {
    int d = 0;
    int m = 0;
    int n = 0;
    int r = 0;

    // Straightening guard: words longer than this are rejected instead of
    // being reduced (the reduction fan-out is exponential in word length).
    std::size_t max_word_len = 64;

    int deg_gen() const { return d - 1; }

    // Sign picked up when two generators are transposed.
    int sign_swap() const { return d % 2 == 1 ? 1 : -1; }

    int points() const { return m + n; }

    bool same_algebra(const Params& o) const {
        return d == o.d && m == o.m && n == o.n && r == o.r;
    }

    void validate() const {
        if (d < 2) fail_invalid("params: d must be >= 2");
        if (m < 1) fail_invalid("params: m must be >= 1");
        if (n < 1) fail_invalid("params: n must be >= 1");
        if (r < 1) fail_invalid("params: r must be >= 1");
    }

    std::string describe() const {
        return "d=" + std::to_string(d) + " m=" + std::to_string(m) +
               " n=" + std::to_string(n) + " r=" + std::to_string(r);
    }
};

inline Params make_params(int d, int m, int n, int r) {
    Params p{d, m, n, r};
    p.validate();
    return p;
}

}  // namespace tcalg

#endif
