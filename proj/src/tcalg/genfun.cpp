// SPDX-License-Identifier: Apache-2.0
#include "tcalg/genfun.hpp"

#include <algorithm>

#include "tcalg/error.hpp"

namespace tcalg {

BigInt TCSequence::value(int r) const {
    if (r < 1) fail_invalid("TCSequence: r must be >= 1");
    for (const auto& [er, ev] : exceptions)
        if (er == r) return ev;
    return a * BigInt(r) + c;
}

std::string TCSequence::name() const {
    switch (kind) {
        case Kind::FadellNeuwirthOdd: return "fn-odd";
        case Kind::FadellNeuwirthPlanar: return "fn-planar";
        case Kind::Hopf: return "hopf";
        case Kind::FNFiber: return "fn-fiber";
        case Kind::Custom: return "custom";
    }
    return "?";
}

namespace {

void require_mn(int m, int n) {
    if (m < 2) fail_invalid("TCSequence: m must be >= 2");
    if (n < 1) fail_invalid("TCSequence: n must be >= 1");
}

}  // namespace

TCSequence TCSequence::fadell_neuwirth_odd(int m, int n) {
    require_mn(m, n);
    TCSequence s;
    s.kind = Kind::FadellNeuwirthOdd;
    s.m = m;
    s.n = n;
    s.a = BigInt(n);
    s.c = BigInt(n + m - 1);
    return s;
}

TCSequence TCSequence::fadell_neuwirth_planar(int m, int n) {
    require_mn(m, n);
    TCSequence s;
    s.kind = Kind::FadellNeuwirthPlanar;
    s.m = m;
    s.n = n;
    s.a = BigInt(n);
    s.c = BigInt(n + m - 2);
    return s;
}

TCSequence TCSequence::hopf() {
    TCSequence s;
    s.kind = Kind::Hopf;
    s.a = BigInt(1);
    s.c = BigInt(0);
    return s;
}

TCSequence TCSequence::fn_fiber(int n) {
    if (n < 1) fail_invalid("TCSequence: n must be >= 1");
    TCSequence s;
    s.kind = Kind::FNFiber;
    s.n = n;
    s.a = BigInt(n);
    s.c = BigInt(n);
    return s;
}

TCSequence TCSequence::custom(BigInt a, BigInt c,
                              std::vector<std::pair<int, BigInt>> exceptions) {
    TCSequence s;
    s.kind = Kind::Custom;
    s.a = std::move(a);
    s.c = std::move(c);
    std::sort(exceptions.begin(), exceptions.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    for (std::size_t k = 0; k < exceptions.size(); ++k) {
        if (exceptions[k].first < 1)
            fail_invalid("TCSequence: exception index must be >= 1");
        if (k > 0 && exceptions[k].first == exceptions[k - 1].first)
            fail_invalid("TCSequence: duplicate exception index");
    }
    s.exceptions = std::move(exceptions);
    return s;
}

RationalFunction genfun_of(const TCSequence& seq) {
    // sum_{r>=1} (a r + c) t^r = a*t/(1-t)^2 + c*t/(1-t); exceptions are
    // pointwise corrections with denominator 1.
    IntPoly t = IntPoly::monomial(BigInt(1), 1);
    IntPoly one_minus_t = one_minus_t_power(1);
    IntPoly num = IntPoly::constant(seq.a) * t +
                  IntPoly::constant(seq.c) * t * one_minus_t;
    IntPoly den = one_minus_t_power(2);
    for (const auto& [r, v] : seq.exceptions) {
        BigInt correction = v - (seq.a * BigInt(r) + seq.c);
        num = num + IntPoly::monomial(correction, static_cast<std::size_t>(r)) * den;
    }
    return RationalFunction(std::move(num), std::move(den));
}

BigInt recurrence_check(const TCSequence& seq, int horizon) {
    if (horizon < 3) fail_invalid("recurrence_check: horizon must be >= 3");
    std::vector<BigInt> values;
    values.reserve(static_cast<std::size_t>(horizon));
    for (int r = 1; r <= horizon; ++r) values.push_back(seq.value(r));
    std::vector<BigInt> diffs;
    for (std::size_t k = 1; k < values.size(); ++k)
        diffs.push_back(values[k] - values[k - 1]);

    const BigInt tail = diffs.back();
    // Stabilized means at least the last two differences agree.
    if (diffs[diffs.size() - 2] != tail) {
        std::string trace;
        for (const BigInt& d : diffs) {
            if (!trace.empty()) trace += ", ";
            trace += d.to_string();
        }
        fail_verification("recurrence_check: first differences did not stabilize within horizon " +
                          std::to_string(horizon) + " (trace: " + trace + ")");
    }
    return tail;
}

}  // namespace tcalg
