// SPDX-License-Identifier: Apache-2.0
#ifndef TCALG_BASIS_HPP
#define TCALG_BASIS_HPP

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "tcalg/intpoly.hpp"
#include "tcalg/monomial.hpp"

namespace tcalg {

/// Visits every canonical basis monomial exactly once (slot recursion
/// order, not globally sorted). The span passed to the callback is a
/// scratch buffer reused between calls; copy it if you keep it.
void enumerate_basis_visit(const Params& params,
                           const std::function<void(std::span<const Generator>)>& visit);

/// Materialized basis in lexicographic (block, j, i) word order,
/// optionally filtered to one degree. A degree that is not a multiple of
/// d-1 selects nothing.
std::vector<Monomial> enumerate_basis(const Params& params,
                                      std::optional<int> degree = std::nullopt);

/// Closed-form generating count of basis monomials by degree:
/// prod_{j=2}^{m} (1 + (j-1) t^(d-1)) * [prod_{j=m+1}^{m+n} (1 + (j-1) t^(d-1))]^r.
IntPoly poincare_polynomial(const Params& params);

// (rn + m - 1)(d - 1): the highest degree with a nonzero group.
inline int top_degree(const Params& params) {
    return (params.r * params.n + params.m - 1) * params.deg_gen();
}

}  // namespace tcalg

#endif
