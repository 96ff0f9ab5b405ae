// SPDX-License-Identifier: Apache-2.0
#include "tcalg/polynomial.hpp"

#include <utility>

namespace tcalg {

Polynomial Polynomial::constant(const Params& params, BigInt c) {
    Polynomial out(params);
    if (!c.is_zero()) out.terms_.emplace(Monomial{}, std::move(c));
    return out;
}

Polynomial Polynomial::generator(const Generator& g, const Params& params) {
    Polynomial out(params);
    out.terms_.emplace(Monomial{{make_generator(g.layer, g.i, g.j, params)}}, BigInt(1));
    return out;
}

BigInt Polynomial::coefficient(const Monomial& mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? BigInt(0) : it->second;
}

std::optional<int> Polynomial::top_degree() const {
    if (terms_.empty()) return std::nullopt;
    int top = 0;
    for (const auto& [mono, c] : terms_) top = std::max(top, mono.degree(params_));
    return top;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    int deg = terms_.begin()->first.degree(params_);
    for (const auto& [mono, c] : terms_)
        if (mono.degree(params_) != deg) return false;
    return true;
}

void Polynomial::add_term(Monomial mono, BigInt c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(std::move(mono), std::move(c));
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial out(params_);
    for (const auto& [mono, c] : terms_) out.terms_.emplace(mono, -c);
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (!params_.same_algebra(rhs.params_))
        fail_invalid("polynomial: mixing elements of different algebras (" +
                     params_.describe() + " vs " + rhs.params_.describe() + ")");
    for (const auto& [mono, c] : rhs.terms_) add_term(mono, c);
    return *this;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

namespace {

// One pending term of the straightening work list.
struct PendingTerm {
    std::vector<Generator> word;
    BigInt coeff;
};

// Sorts into the canonical order, tracking the transposition parity.
// Insertion sort: the words seen here are nearly sorted already.
void sort_with_sign(std::vector<Generator>& w, int sign_swap, BigInt& coeff) {
    int swaps = 0;
    for (std::size_t k = 1; k < w.size(); ++k) {
        Generator g = w[k];
        std::size_t pos = k;
        while (pos > 0 && generator_less(g, w[pos - 1])) {
            w[pos] = w[pos - 1];
            --pos;
            ++swaps;
        }
        w[pos] = g;
    }
    if (sign_swap < 0 && (swaps & 1)) coeff = -coeff;
}

}  // namespace

Polynomial normal_form(std::span<const Generator> word, const BigInt& coeff,
                       const Params& params) {
    params.validate();
    if (word.size() > params.max_word_len)
        fail_resource("normal_form: word length " + std::to_string(word.size()) +
                      " exceeds the cap of " + std::to_string(params.max_word_len));
    for (const Generator& g : word)
        (void)make_generator(g.layer, g.i, g.j, params);  // validates; layer normal form
    // Maximal length of a canonical word: one factor per second index and
    // block. Longer words straighten to zero; skip the fan-out entirely.
    const std::size_t max_basis_len =
        static_cast<std::size_t>(params.m - 1) +
        static_cast<std::size_t>(params.r) * static_cast<std::size_t>(params.n);

    Polynomial out(params);
    if (coeff.is_zero() || word.size() > max_basis_len) return out;

    std::vector<PendingTerm> pending;
    {
        PendingTerm first;
        first.word.reserve(word.size());
        for (const Generator& g : word)
            first.word.push_back(make_generator(g.layer, g.i, g.j, params));
        first.coeff = coeff;
        pending.push_back(std::move(first));
    }

    const int sign_swap = params.sign_swap();
    while (!pending.empty()) {
        PendingTerm term = std::move(pending.back());
        pending.pop_back();
        sort_with_sign(term.word, sign_swap, term.coeff);

        bool rewrote = false;
        for (std::size_t k = 0; k + 1 < term.word.size(); ++k) {
            const Generator& a = term.word[k];
            const Generator& b = term.word[k + 1];
            if (a == b) {
                // Square of a generator vanishes; drop the whole term.
                rewrote = true;
                term.coeff = BigInt(0);
                break;
            }
            if (a.layer == b.layer && a.j == b.j) {
                // ga = w(i,j), gb = w(i',j) with i < i' after sorting:
                // rewrite as w(i,i')*w(i',j) - w(i,i')*w(i,j).
                const Generator ga = a, gb = b;
                Generator link = make_generator(ga.layer, ga.i, gb.i, params);
                PendingTerm plus = term;
                plus.word[k] = link;
                PendingTerm minus = std::move(term);
                minus.word[k] = link;
                minus.word[k + 1] = ga;
                minus.coeff = -minus.coeff;
                pending.push_back(std::move(plus));
                pending.push_back(std::move(minus));
                rewrote = true;
                break;
            }
        }
        if (!rewrote) out.add_term(Monomial{std::move(term.word)}, std::move(term.coeff));
    }
    return out;
}

Polynomial normal_form(const Polynomial& p) {
    Polynomial out(p.params());
    for (const auto& [mono, c] : p.terms()) out += normal_form(mono.word, c, p.params());
    return out;
}

Polynomial multiply(const Polynomial& a, const Polynomial& b) {
    if (!a.params().same_algebra(b.params()))
        fail_invalid("multiply: mixing elements of different algebras (" +
                     a.params().describe() + " vs " + b.params().describe() + ")");
    Polynomial out(a.params());
    std::vector<Generator> scratch;
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            if (ma.length() + mb.length() > a.params().max_word_len)
                fail_resource("multiply: product word length " +
                              std::to_string(ma.length() + mb.length()) +
                              " exceeds the cap of " +
                              std::to_string(a.params().max_word_len));
            scratch.clear();
            scratch.insert(scratch.end(), ma.word.begin(), ma.word.end());
            scratch.insert(scratch.end(), mb.word.begin(), mb.word.end());
            out += normal_form(scratch, ca * cb, a.params());
        }
    }
    return out;
}

Polynomial power(const Polynomial& base, int exponent) {
    if (exponent < 0) fail_invalid("power: negative exponent");
    Polynomial out = Polynomial::unit(base.params());
    for (int k = 0; k < exponent; ++k) out = multiply(out, base);
    return out;
}

Polynomial expand_modifications(int layer, std::span<const int> J, int j,
                                const Params& params) {
    params.validate();
    const std::size_t p = J.size();
    if (p < 2) fail_invalid("expand_modifications: need at least two indices");
    if (p - 1 >= 64)
        fail_resource("expand_modifications: 2^(p-1) summands is out of reach");
    for (std::size_t s = 0; s + 1 < p; ++s)
        if (J[s] >= J[s + 1]) fail_invalid("expand_modifications: J must be increasing");
    if (j <= J[p - 1]) fail_invalid("expand_modifications: need j > last entry of J");
    for (std::size_t s = 0; s < p; ++s)
        (void)make_generator(layer, J[s], j, params);  // validates the input word

    // Shifted tail: the second indices paired against each modification.
    std::vector<int> tail(J.begin() + 1, J.end());
    tail.push_back(j);

    Polynomial out(params);
    std::vector<Generator> word(p);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (p - 1)); ++mask) {
        int repetitions = 0;
        int prev = J[0];
        word[0] = make_generator(layer, J[0], tail[0], params);
        for (std::size_t s = 1; s < p; ++s) {
            int is;
            if (mask & (std::uint64_t{1} << (s - 1))) {
                is = prev;  // repeat the previous entry
                ++repetitions;
            } else {
                is = J[s];
            }
            word[s] = make_generator(layer, is, tail[s], params);
            prev = is;
        }
        BigInt sign(repetitions % 2 == 0 ? 1 : -1);
        out += normal_form(word, sign, params);
    }
    return out;
}

Polynomial diagonal_restriction(const Polynomial& p) {
    Params target = p.params();
    target.r = 1;
    Polynomial out(target);
    std::vector<Generator> word;
    for (const auto& [mono, c] : p.terms()) {
        word.clear();
        word.reserve(mono.length());
        for (const Generator& g : mono.word) {
            int layer = g.j <= target.m ? kBaseLayer : 1;
            word.push_back(make_generator(layer, g.i, g.j, target));
        }
        out += normal_form(word, c, target);
    }
    return out;
}

}  // namespace tcalg
