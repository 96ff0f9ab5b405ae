// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "helpers.hpp"
#include "tcalg/basis.hpp"
#include "tcalg/expr.hpp"

using namespace tcalg;
using tcalg::testing::all_generators;
using tcalg::testing::gen_poly;

namespace {

Polynomial nf_word(const Params& params, std::initializer_list<Generator> gens,
                   long long coeff = 1) {
    std::vector<Generator> w(gens);
    return normal_form(w, BigInt(coeff), params);
}

}  // namespace

TEST_CASE("make_generator normalizes layers and rejects bad indices") {
    Params p = make_params(3, 3, 1, 2);
    // A fiber request below the obstacle range folds into the base block.
    Generator g = make_generator(2, 1, 2, p);
    CHECK(g.is_base());
    CHECK(g.i == 1);
    CHECK(g.j == 2);
    CHECK(make_generator(kBaseLayer, 1, 2, p) == g);

    CHECK_THROWS_AS(make_generator(1, 2, 2, p), Error);   // i < j violated
    CHECK_THROWS_AS(make_generator(1, 0, 2, p), Error);   // i out of range
    CHECK_THROWS_AS(make_generator(1, 1, 5, p), Error);   // j out of range
    CHECK_THROWS_AS(make_generator(3, 1, 4, p), Error);   // layer out of range
    CHECK_THROWS_AS(make_generator(kBaseLayer, 1, 4, p), Error);  // base with j > m
}

TEST_CASE("three-term relation straightens the base pair") {
    Params p = make_params(3, 3, 1, 2);
    Polynomial got = nf_word(p, {make_generator(kBaseLayer, 1, 3, p),
                                 make_generator(kBaseLayer, 2, 3, p)});
    Polynomial expect = multiply(gen_poly(p, kBaseLayer, 1, 2), gen_poly(p, kBaseLayer, 2, 3)) -
                        multiply(gen_poly(p, kBaseLayer, 1, 2), gen_poly(p, kBaseLayer, 1, 3));
    CHECK(got == expect);
    CHECK(got.term_count() == 2);
    CHECK(format(got) == "-w(1,2)*w(1,3) + w(1,2)*w(2,3)");
}

TEST_CASE("squares of generators vanish in both parities") {
    for (int d : {2, 3, 4, 5}) {
        Params p = make_params(d, 2, 1, 2);
        Generator g = make_generator(1, 1, 3, p);
        CHECK(nf_word(p, {g, g}).is_zero());
    }
}

TEST_CASE("transposition sign depends on the parity of d") {
    Params odd = make_params(3, 2, 1, 2);
    Generator a1 = make_generator(1, 1, 3, odd);
    Generator a2 = make_generator(2, 1, 3, odd);
    // w[2]w[1] reordered to w[1]w[2]: + for odd d, - for even d.
    CHECK(nf_word(odd, {a2, a1}) == nf_word(odd, {a1, a2}));

    Params even = make_params(2, 2, 1, 2);
    Generator b1 = make_generator(1, 1, 3, even);
    Generator b2 = make_generator(2, 1, 3, even);
    CHECK(nf_word(even, {b2, b1}) == -nf_word(even, {b1, b2}));
}

TEST_CASE("squared layer difference: -2 w[1]w[2] for odd d, zero for even d") {
    for (int d : {3, 5}) {
        Params p = make_params(d, 2, 2, 2);
        for (int j = 3; j <= 4; ++j) {
            Polynomial diff = gen_poly(p, 2, 1, j) - gen_poly(p, 1, 1, j);
            Polynomial square = multiply(diff, diff);
            Polynomial expect = nf_word(p, {make_generator(1, 1, j, p),
                                            make_generator(2, 1, j, p)}, -2);
            CHECK(square == expect);
        }
    }
    for (int d : {2, 4}) {
        Params p = make_params(d, 2, 2, 2);
        Polynomial diff = gen_poly(p, 2, 1, 3) - gen_poly(p, 1, 1, 3);
        CHECK(multiply(diff, diff).is_zero());
    }
}

TEST_CASE("multiply: annihilation and canonical product") {
    Params p = make_params(3, 2, 1, 2);
    Polynomial one_plus = Polynomial::unit(p) + gen_poly(p, kBaseLayer, 1, 2);
    CHECK(multiply(one_plus, Polynomial::zero(p)).is_zero());
    Polynomial prod = multiply(gen_poly(p, 1, 1, 3), gen_poly(p, 2, 1, 3));
    CHECK(prod.term_count() == 1);
    CHECK(format(prod) == "w[1](1,3)*w[2](1,3)");
    CHECK_THROWS_AS(multiply(Polynomial::unit(p), Polynomial::unit(make_params(3, 2, 2, 2))),
                    Error);
}

TEST_CASE("planar kernel product expands to the hand-derived six terms") {
    Params p = make_params(2, 2, 1, 2);
    Polynomial a = gen_poly(p, 1, 2, 3) - gen_poly(p, 2, 2, 3);
    Polynomial b = gen_poly(p, 2, 1, 3) - gen_poly(p, 1, 1, 3);
    Polynomial prod = multiply(a, b);
    CHECK(format(prod) ==
          "-w(1,2)*w[1](1,3) + w(1,2)*w[1](2,3) - w(1,2)*w[2](1,3) + w(1,2)*w[2](2,3)"
          " - w[1](1,3)*w[2](2,3) + w[1](2,3)*w[2](1,3)");
    // The decisive basis element and its coefficient.
    Monomial target{{make_generator(1, 2, 3, p), make_generator(2, 1, 3, p)}};
    CHECK(prod.coefficient(target) == BigInt(1));
    // Both factors are diagonal-kernel classes, so the product must be too.
    CHECK(in_diagonal_kernel(prod));
}

TEST_CASE("normal_form word-length guard") {
    Params p = make_params(3, 2, 2, 2);
    p.max_word_len = 3;
    Generator g = make_generator(1, 1, 3, p);
    std::vector<Generator> w(4, g);
    CHECK_THROWS_AS(normal_form(w, BigInt(1), p), Error);
    try {
        normal_form(w, BigInt(1), p);
    } catch (const Error& err) {
        CHECK(err.code() == Errc::resource_limit);
    }
}

TEST_CASE("expand_modifications matches the straightened plain product") {
    Params p = make_params(3, 3, 2, 2);

    SUBCASE("p = 2 is the three-term relation") {
        std::vector<int> J{1, 2};
        Polynomial got = expand_modifications(1, J, 4, p);
        Polynomial expect = nf_word(p, {make_generator(1, 1, 4, p),
                                        make_generator(1, 2, 4, p)});
        CHECK(got == expect);
    }

    SUBCASE("p = 3 has four signed summands") {
        // Modifications of (j1,j2,j3): (j1,j2,j3), (j1,j1,j3), (j1,j2,j2),
        // (j1,j1,j1) with 0,1,1,2 repetitions.
        std::vector<int> J{1, 2, 3};
        Polynomial got = expand_modifications(1, J, 4, p);
        Polynomial expect =
            nf_word(p, {make_generator(1, 1, 2, p), make_generator(1, 2, 3, p),
                        make_generator(1, 3, 4, p)}) -
            nf_word(p, {make_generator(1, 1, 2, p), make_generator(1, 1, 3, p),
                        make_generator(1, 3, 4, p)}) -
            nf_word(p, {make_generator(1, 1, 2, p), make_generator(1, 2, 3, p),
                        make_generator(1, 2, 4, p)}) +
            nf_word(p, {make_generator(1, 1, 2, p), make_generator(1, 1, 3, p),
                        make_generator(1, 1, 4, p)});
        CHECK(got == expect);
        Polynomial plain = nf_word(p, {make_generator(1, 1, 4, p),
                                       make_generator(1, 2, 4, p),
                                       make_generator(1, 3, 4, p)});
        CHECK(got == plain);
    }

    SUBCASE("exhaustive agreement for p <= 4 in both parities") {
        for (int d : {2, 3}) {
            Params q = make_params(d, 3, 2, 2);
            const int N = q.points();
            for (int layer : {kBaseLayer, 1, 2})
                for (int j = 2; j <= N; ++j) {
                    if (layer == kBaseLayer && j > q.m) continue;
                    std::vector<int> pool;
                    for (int v = 1; v < j; ++v) pool.push_back(v);
                    // All increasing subsequences of size 2..4 below j.
                    for (std::uint32_t mask = 1; mask < (1u << pool.size()); ++mask) {
                        std::vector<int> J;
                        for (std::size_t bit = 0; bit < pool.size(); ++bit)
                            if (mask & (1u << bit)) J.push_back(pool[bit]);
                        if (J.size() < 2 || J.size() > 4) continue;
                        Polynomial closed = expand_modifications(layer, J, j, q);
                        std::vector<Generator> word;
                        for (int v : J) word.push_back(make_generator(layer, v, j, q));
                        CHECK(closed == normal_form(word, BigInt(1), q));
                    }
                }
        }
    }

    SUBCASE("p = 5 chains, fiber and base blocks, both parities") {
        for (int d : {2, 3}) {
            std::vector<int> J{1, 2, 3, 4, 5};
            // Deep fiber cascade: all five factors share the endpoint 6.
            Params fib = make_params(d, 3, 3, 2);
            for (int layer : {1, 2}) {
                Polynomial closed = expand_modifications(layer, J, 6, fib);
                std::vector<Generator> word;
                for (int v : J) word.push_back(make_generator(layer, v, 6, fib));
                CHECK(closed == normal_form(word, BigInt(1), fib));
                CHECK(closed.term_count() > 0);
            }
            // Deep base cascade at m = 6.
            Params base = make_params(d, 6, 1, 2);
            Polynomial closed = expand_modifications(kBaseLayer, J, 6, base);
            std::vector<Generator> word;
            for (int v : J) word.push_back(make_generator(kBaseLayer, v, 6, base));
            CHECK(closed == normal_form(word, BigInt(1), base));
            CHECK(closed.term_count() == 16);  // 2^(p-1) distinct basis words
        }
    }

    SUBCASE("input validation") {
        CHECK_THROWS_AS(expand_modifications(1, std::vector<int>{2, 1}, 4, p), Error);
        CHECK_THROWS_AS(expand_modifications(1, std::vector<int>{1, 3}, 3, p), Error);
        CHECK_THROWS_AS(expand_modifications(1, std::vector<int>{1}, 3, p), Error);
    }
}

TEST_CASE("diagonal restriction: kernel classes, fixed base, composite") {
    Params p = make_params(3, 2, 1, 2);
    CHECK(in_diagonal_kernel(gen_poly(p, 1, 1, 3) - gen_poly(p, 2, 1, 3)));
    CHECK_FALSE(in_diagonal_kernel(gen_poly(p, 1, 1, 3)));

    Polynomial base = gen_poly(p, kBaseLayer, 1, 2);
    Polynomial img = diagonal_restriction(base);
    CHECK(img.params().r == 1);
    CHECK(format(img) == "w(1,2)");

    // w[1](1,3)*w[2](2,3) maps to the straightened single-space product.
    Params q = make_params(3, 3, 1, 2);  // m = 3 so (1,3),(2,3) are base pairs
    Polynomial composite = multiply(gen_poly(q, 1, 1, 4), gen_poly(q, 2, 2, 4));
    Polynomial image = diagonal_restriction(composite);
    Params q1 = make_params(3, 3, 1, 1);
    Polynomial expect = nf_word(q1, {make_generator(1, 1, 4, q1),
                                     make_generator(1, 2, 4, q1)});
    CHECK(image == expect);
}

TEST_CASE("property: idempotence, order independence, grading") {
    for (int d : {2, 3}) {
        Params p = make_params(d, 3, 2, 2);
        std::vector<Generator> pool = all_generators(p);
        std::mt19937_64 rng(911 + d);
        for (int iter = 0; iter < 400; ++iter) {
            std::vector<Generator> w = tcalg::testing::random_word(rng, pool, 6);
            Polynomial nf = normal_form(w, BigInt(1), p);
            CHECK(normal_form(nf) == nf);

            // Left fold vs right fold of single-generator factors.
            Polynomial left = Polynomial::unit(p);
            for (const Generator& g : w) left = multiply(left, Polynomial::generator(g, p));
            Polynomial right = Polynomial::unit(p);
            for (auto it = w.rbegin(); it != w.rend(); ++it)
                right = multiply(Polynomial::generator(*it, p), right);
            CHECK(left == nf);
            CHECK(right == nf);

            // Straightening preserves word length, hence degree.
            for (const auto& [mono, c] : nf.terms())
                CHECK(mono.length() == w.size());
        }
    }
}

TEST_CASE("property: relation soundness on all valid index triples") {
    for (int d : {2, 3}) {
        Params p = make_params(d, 3, 2, 2);
        for (int layer : {kBaseLayer, 1, 2})
            for (int pp = 3; pp <= p.points(); ++pp)
                for (int jj = 2; jj < pp; ++jj)
                    for (int ii = 1; ii < jj; ++ii) {
                        if (layer == kBaseLayer && pp > p.m) continue;
                        Polynomial lhs = nf_word(p, {make_generator(layer, ii, pp, p),
                                                     make_generator(layer, jj, pp, p)});
                        Polynomial rhs = multiply(
                            nf_word(p, {make_generator(layer, ii, jj, p)}),
                            nf_word(p, {make_generator(layer, jj, pp, p)}) -
                                nf_word(p, {make_generator(layer, ii, pp, p)}));
                        CHECK(lhs == rhs);
                    }
    }
}

TEST_CASE("property: odd-degree squares vanish for even d") {
    Params p = make_params(4, 3, 2, 2);
    std::vector<Generator> pool = all_generators(p);
    std::mt19937_64 rng(2024);
    int done = 0;
    while (done < 200) {
        // Random homogeneous element of odd degree (odd word length).
        std::size_t len = 1 + 2 * (rng() % 2);
        Polynomial x(p);
        for (int t = 0; t < 3; ++t) {
            std::vector<Generator> w;
            for (std::size_t k = 0; k < len; ++k) w.push_back(pool[rng() % pool.size()]);
            x += normal_form(w, BigInt(static_cast<long long>(rng() % 7) - 3), p);
        }
        if (x.is_zero() || !x.is_homogeneous()) continue;
        CHECK(multiply(x, x).is_zero());
        ++done;
    }
}

TEST_CASE("property: disjoint-support basis products are unimodular") {
    // Basis monomials whose second-index sets are disjoint per block
    // multiply to a single basis monomial with coefficient +-1.
    for (int d : {2, 3}) {
        Params p = make_params(d, 4, 2, 2);
        std::mt19937_64 rng(555 + d);
        std::vector<Monomial> basis = enumerate_basis(p);
        for (int iter = 0; iter < 400; ++iter) {
            const Monomial& a = basis[rng() % basis.size()];
            const Monomial& b = basis[rng() % basis.size()];
            bool disjoint = true;
            for (const Generator& ga : a.word)
                for (const Generator& gb : b.word)
                    if (ga.layer == gb.layer && ga.j == gb.j) disjoint = false;
            if (!disjoint) continue;
            Polynomial prod = multiply(normal_form(a.word, BigInt(1), p),
                                       normal_form(b.word, BigInt(1), p));
            REQUIRE(prod.term_count() == 1);
            const auto& [mono, coeff] = *prod.terms().begin();
            CHECK(coeff.abs() == BigInt(1));
            CHECK(mono.length() == a.length() + b.length());
        }
    }
}

TEST_CASE("property: every straightened endpoint product keeps an endpoint factor") {
    // Each basis monomial of nf(w[l](j1,j)...w[l](jp,j)) contains some
    // w[l](js,j); exactly one of them contains w[l](j1,j).
    for (int d : {2, 3}) {
        Params p = make_params(d, 3, 3, 2);
        std::mt19937_64 rng(77 + d);
        for (int iter = 0; iter < 300; ++iter) {
            int layer = 1 + static_cast<int>(rng() % p.r);
            int j = 3 + static_cast<int>(rng() % (p.points() - 2));
            std::size_t pmax = std::min<std::size_t>(4, static_cast<std::size_t>(j - 1));
            if (pmax < 2) continue;
            std::size_t plen = 2 + rng() % (pmax - 1);
            std::vector<int> J;
            for (int v = 1; v < j && J.size() < plen; ++v)
                if (rng() % 2 == 0) J.push_back(v);
            if (J.size() < 2) continue;
            std::vector<Generator> word;
            for (int v : J) word.push_back(make_generator(layer, v, j, p));
            Polynomial nf = normal_form(word, BigInt(1), p);
            Generator first = make_generator(layer, J.front(), j, p);
            int with_first = 0;
            for (const auto& [mono, c] : nf.terms()) {
                bool has_endpoint = false;
                for (int v : J)
                    if (mono.contains(make_generator(layer, v, j, p))) has_endpoint = true;
                CHECK(has_endpoint);
                if (mono.contains(first)) ++with_first;
            }
            CHECK(with_first == 1);
        }
    }
}
