// SPDX-License-Identifier: Apache-2.0
#include "tcalg/basis.hpp"

namespace tcalg {

namespace {

// Per-block slots in canonical order: a slot is a second index j together
// with the block's layer; choosing a slot means picking some i < j.
struct Slot {
    int layer;
    int j;
};

void visit_rec(const std::vector<Slot>& slots, std::size_t idx,
               std::vector<Generator>& word,
               const std::function<void(std::span<const Generator>)>& visit) {
    if (idx == slots.size()) {
        visit(std::span<const Generator>(word));
        return;
    }
    const Slot& slot = slots[idx];
    // Lexicographic order: words omitting this slot precede words using it.
    visit_rec(slots, idx + 1, word, visit);
    for (int i = 1; i < slot.j; ++i) {
        word.push_back(Generator{static_cast<std::int16_t>(slot.layer),
                                 static_cast<std::int16_t>(i),
                                 static_cast<std::int16_t>(slot.j)});
        visit_rec(slots, idx + 1, word, visit);
        word.pop_back();
    }
}

}  // namespace

void enumerate_basis_visit(const Params& params,
                           const std::function<void(std::span<const Generator>)>& visit) {
    params.validate();
    std::vector<Slot> slots;
    for (int j = 2; j <= params.m; ++j) slots.push_back({kBaseLayer, j});
    for (int l = 1; l <= params.r; ++l)
        for (int j = params.m + 1; j <= params.points(); ++j) slots.push_back({l, j});
    std::vector<Generator> word;
    word.reserve(slots.size());
    visit_rec(slots, 0, word, visit);
}

std::vector<Monomial> enumerate_basis(const Params& params, std::optional<int> degree) {
    std::optional<std::size_t> want_len;
    if (degree) {
        if (*degree < 0 || *degree % params.deg_gen() != 0) return {};
        want_len = static_cast<std::size_t>(*degree / params.deg_gen());
    }
    std::vector<Monomial> out;
    enumerate_basis_visit(params, [&](std::span<const Generator> word) {
        if (want_len && word.size() != *want_len) return;
        out.push_back(Monomial{{word.begin(), word.end()}});
    });
    // The recursion emits per-slot lexicographic choices; sort to present
    // the documented global (block, j, i) word order.
    std::sort(out.begin(), out.end(),
              [](const Monomial& a, const Monomial& b) { return monomial_less(a, b); });
    return out;
}

IntPoly poincare_polynomial(const Params& params) {
    params.validate();
    const std::size_t step = static_cast<std::size_t>(params.deg_gen());
    IntPoly out = IntPoly::constant(BigInt(1));
    for (int j = 2; j <= params.m; ++j)
        out = out * (IntPoly::constant(BigInt(1)) + IntPoly::monomial(BigInt(j - 1), step));
    IntPoly fiber = IntPoly::constant(BigInt(1));
    for (int j = params.m + 1; j <= params.points(); ++j)
        fiber = fiber * (IntPoly::constant(BigInt(1)) + IntPoly::monomial(BigInt(j - 1), step));
    for (int l = 0; l < params.r; ++l) out = out * fiber;
    return out;
}

}  // namespace tcalg
