// SPDX-License-Identifier: Apache-2.0
#ifndef TCALG_BOUNDS_HPP
#define TCALG_BOUNDS_HPP

#include <string>
#include <vector>

#include "tcalg/polynomial.hpp"

namespace tcalg {

/// A machine-checkable lower-bound witness: k classes in the diagonal
/// kernel whose cup product contains a basis monomial with a nonzero
/// coefficient. Everything needed to re-verify from scratch is stored.
struct Certificate {
    Params params;
    std::vector<Polynomial> factors;
    Polynomial product;
    Monomial witness;
    BigInt witness_coefficient;
    int k = 0;
};

enum class Regime { OddD, D2, EvenDGE4 };

std::string regime_name(Regime regime);
Regime regime_of(const Params& params);

struct BoundsReport {
    Params params;
    int lower = 0;
    int upper = 0;
    bool exact = false;
    Regime regime = Regime::OddD;
    Certificate certificate;
};

/// Largest integer strictly below (hdim_total + 1) / (k_conn + 1):
/// the dimension/connectivity upper bound for a sectional category.
int upper_bound_schwarz(int hdim_total, int k_conn);

/// Formula upper bound for the obstacle-avoidance bundle: rn + m - 1 for
/// d >= 3 (total space of dimension (rn+m-1)(d-1), fiber (d-2)-connected);
/// rn + m - 2 for d = 2 via the planar splitting, where the reduced bundle
/// has fiber dimension n, base dimension m - 2 and connectivity 0.
int fn_upper_bound(const Params& params);

// Parity-specific factor recipes (flat lists of diagonal-kernel classes).
// The odd recipe multiplies to zero when evaluated at even d, which is why
// kernel_certificate_factors dispatches on the parity of d.
std::vector<Polynomial> certificate_factors_odd_recipe(const Params& params);
std::vector<Polynomial> certificate_factors_even_recipe(const Params& params);
std::vector<Polynomial> kernel_certificate_factors(const Params& params);

/// Multiplies the recipe factors, checks the product is nonzero and
/// extracts a witness monomial (the recipe's named witness when it has a
/// nonzero coefficient, otherwise the least monomial of the product).
Certificate certify_lower_bound(const Params& params);

/// Recomputes everything in the certificate from its factor list; throws
/// Errc::verification_failed on any mismatch.
void verify_certificate(const Certificate& cert);

BoundsReport fn_tc_bounds(const Params& params);

/// The finite pool of difference classes w[l](i,j) - w[l'](i,j), l < l',
/// searched by the brute-force oracle. include_base_multiples additionally
/// multiplies each difference by every base generator (still in the
/// diagonal kernel); off by default.
struct DifferencePool {
    std::vector<Polynomial> classes;
    static DifferencePool standard(const Params& params);
    static DifferencePool with_base_multiples(const Params& params);
};

struct OracleResult {
    int k = 0;
    bool truncated = false;  // best found hit the budget; larger k not ruled out
};

/// Exhaustive search for the longest nonzero product of up to `budget`
/// pool classes (repetition allowed, deterministic lexicographic order
/// over pool indices).
OracleResult oracle_cup_length(const Params& params, const DifferencePool& pool,
                               int budget);

}  // namespace tcalg

#endif
