// SPDX-License-Identifier: Apache-2.0
#ifndef TCALG_GENFUN_HPP
#define TCALG_GENFUN_HPP

#include <string>
#include <utility>
#include <vector>

#include "tcalg/ratfun.hpp"

namespace tcalg {

/// A registered complexity sequence r -> TC_{r+1}, r >= 1. Every sequence
/// here is eventually affine: TC_{r+1} = a*r + c apart from finitely many
/// listed exceptions, which is exactly the class admitting a generating
/// function of the form A/(1-t)^2 + B/(1-t) + p(t).
struct TCSequence {
    enum class Kind { FadellNeuwirthOdd, FadellNeuwirthPlanar, Hopf, FNFiber, Custom };

    Kind kind = Kind::Custom;
    int m = 0;
    int n = 0;
    BigInt a;
    BigInt c;
    std::vector<std::pair<int, BigInt>> exceptions;  // (r, value), r >= 1

    /// TC_{r+1} for r >= 1.
    BigInt value(int r) const;

    std::string name() const;

    // d odd >= 3: TC_{r+1} = (r+1)n + m - 1.
    static TCSequence fadell_neuwirth_odd(int m, int n);
    // d = 2: TC_{r+1} = (r+1)n + m - 2.
    static TCSequence fadell_neuwirth_planar(int m, int n);
    // Circle bundle over the sphere: TC_{r+1} = r.
    static TCSequence hopf();
    // Fiber of the obstacle bundle: TC_{r+1} = (r+1)n.
    static TCSequence fn_fiber(int n);
    static TCSequence custom(BigInt a, BigInt c,
                             std::vector<std::pair<int, BigInt>> exceptions);
};

/// F(t) = sum_{r>=1} TC_{r+1} t^r as an exact rational function.
RationalFunction genfun_of(const TCSequence& seq);

/// Detects the eventually constant first difference of the sequence over
/// r = 1..horizon and returns it; throws Errc::verification_failed with the
/// difference trace if the differences do not stabilize.
BigInt recurrence_check(const TCSequence& seq, int horizon);

}  // namespace tcalg

#endif
