// SPDX-License-Identifier: Apache-2.0
//
// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Criteria 1-3 drive the shared-library command surface; the rest exercise
// the core engine directly.

#include <chrono>
#include <cstdio>
#include <functional>
#include <json.hpp>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <tcalg/tcalg.h>

#include "helpers.hpp"
#include "tcalg/basis.hpp"
#include "tcalg/bounds.hpp"
#include "tcalg/expr.hpp"
#include "tcalg/genfun.hpp"

using namespace tcalg;
using nlohmann::json;

namespace {

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
    if (!ok) throw Failure(what);
}

std::string take(char* s) {
    if (s == nullptr) throw Failure("null string from the C API");
    std::string out(s);
    tcalg_string_free(s);
    return out;
}

json cmd_bounds_doc(int d, int m, int n, int r) {
    char* out = nullptr;
    tcalg_status status = tcalg_cmd_bounds(d, m, n, r, TCALG_EMIT_JSON, &out);
    std::string body = take(out);
    require(status == TCALG_OK, "cmd_bounds failed for d=" + std::to_string(d) +
                                    " m=" + std::to_string(m) + " n=" + std::to_string(n) +
                                    " r=" + std::to_string(r) + ": " + body);
    return json::parse(body);
}

// Shared grid of criteria 1-3.
void check_grid(const std::vector<int>& ds,
                const std::function<void(int, int, int, int, const json&)>& cell) {
    for (int d : ds)
        for (int m = 2; m <= 4; ++m)
            for (int n = 1; n <= 3; ++n)
                for (int r = 2; r <= 4; ++r) {
                    json doc = cmd_bounds_doc(d, m, n, r);
                    std::string at = " at d=" + std::to_string(d) + " m=" + std::to_string(m) +
                                     " n=" + std::to_string(n) + " r=" + std::to_string(r);
                    require(doc["result"]["certificate"]["verified"] == true,
                            "certificate not verified" + at);
                    require(doc["result"]["certificate"]["coefficient"] != "0",
                            "zero witness coefficient" + at);
                    // Handle-level re-verification of the same certificate.
                    tcalg_params* params = nullptr;
                    require(tcalg_params_create(d, m, n, r, &params) == TCALG_OK,
                            "params_create failed" + at);
                    tcalg_bounds* bounds = nullptr;
                    require(tcalg_bounds_compute(params, &bounds) == TCALG_OK,
                            "bounds_compute failed" + at);
                    require(tcalg_bounds_verify(bounds) == TCALG_OK,
                            "handle verification failed" + at);
                    require(tcalg_bounds_lower(bounds) == doc["result"]["lower"],
                            "handle/document lower mismatch" + at);
                    tcalg_bounds_free(bounds);
                    tcalg_params_free(params);
                    cell(d, m, n, r, doc);
                }
}

void criterion1_odd_exactness() {
    check_grid({3, 5}, [](int d, int m, int n, int r, const json& doc) {
        int expect = r * n + m - 1;
        std::string at = " at d=" + std::to_string(d) + " m=" + std::to_string(m) +
                         " n=" + std::to_string(n) + " r=" + std::to_string(r);
        require(doc["result"]["lower"] == expect, "lower != rn+m-1" + at);
        require(doc["result"]["upper"] == expect, "upper != rn+m-1" + at);
        require(doc["result"]["exact"] == true, "not exact" + at);
        require(doc["result"]["certificate"]["k"] == expect, "k != rn+m-1" + at);
    });
}

void criterion2_planar_exactness() {
    check_grid({2}, [](int, int m, int n, int r, const json& doc) {
        int expect = r * n + m - 2;
        std::string at = " at d=2 m=" + std::to_string(m) + " n=" + std::to_string(n) +
                         " r=" + std::to_string(r);
        require(doc["result"]["lower"] == expect, "lower != rn+m-2" + at);
        require(doc["result"]["upper"] == expect, "upper != rn+m-2" + at);
        require(doc["result"]["exact"] == true, "not exact" + at);
    });
}

void criterion3_even_bracket() {
    check_grid({4, 6}, [](int d, int m, int n, int r, const json& doc) {
        std::string at = " at d=" + std::to_string(d) + " m=" + std::to_string(m) +
                         " n=" + std::to_string(n) + " r=" + std::to_string(r);
        require(doc["result"]["lower"] == r * n + m - 2, "lower != rn+m-2" + at);
        require(doc["result"]["upper"] == r * n + m - 1, "upper != rn+m-1" + at);
        require(doc["result"]["exact"] == false, "bracket claimed exactness" + at);
    });
}

void criterion4_rewriter_equivalence() {
    for (int d : {3, 2}) {
        Params p = make_params(d, 3, 2, 2);
        std::vector<Generator> gens = tcalg::testing::all_generators(p);

        // Relation soundness on every valid (i, j, p, l).
        for (int layer : {kBaseLayer, 1, 2})
            for (int pp = 3; pp <= p.points(); ++pp) {
                if (layer == kBaseLayer && pp > p.m) continue;
                for (int jj = 2; jj < pp; ++jj)
                    for (int ii = 1; ii < jj; ++ii) {
                        std::vector<Generator> lhs_word{make_generator(layer, ii, pp, p),
                                                        make_generator(layer, jj, pp, p)};
                        Polynomial lhs = normal_form(lhs_word, BigInt(1), p);
                        Polynomial link = Polynomial::generator(
                            make_generator(layer, ii, jj, p), p);
                        Polynomial rhs = multiply(
                            link,
                            Polynomial::generator(make_generator(layer, jj, pp, p), p) -
                                Polynomial::generator(make_generator(layer, ii, pp, p), p));
                        require(lhs == rhs, "three-term relation failed at d=" +
                                                std::to_string(d));
                    }
            }

        // Every word of length <= 4: the rewriter agrees with the fold of
        // single-generator products, and with the closed-form expansion
        // whenever the word matches the increasing endpoint pattern.
        std::vector<std::size_t> idx;
        std::size_t checked_closed = 0;
        for (std::size_t len = 1; len <= 4; ++len) {
            idx.assign(len, 0);
            while (true) {
                std::vector<Generator> word;
                word.reserve(len);
                for (std::size_t k = 0; k < len; ++k) word.push_back(gens[idx[k]]);
                Polynomial nf = normal_form(word, BigInt(1), p);
                Polynomial fold = Polynomial::unit(p);
                for (const Generator& g : word)
                    fold = multiply(fold, Polynomial::generator(g, p));
                require(fold == nf, "fold/rewriter mismatch at d=" + std::to_string(d));

                bool pattern = len >= 2;
                for (std::size_t k = 0; pattern && k < len; ++k) {
                    if (word[k].layer != word[0].layer || word[k].j != word[0].j)
                        pattern = false;
                    if (k > 0 && word[k].i <= word[k - 1].i) pattern = false;
                }
                if (pattern) {
                    std::vector<int> J;
                    for (const Generator& g : word) J.push_back(g.i);
                    Polynomial closed = expand_modifications(word[0].layer, J,
                                                             word[0].j, p);
                    require(closed == nf,
                            "closed form mismatch at d=" + std::to_string(d));
                    ++checked_closed;
                }

                std::size_t pos = len;
                while (pos > 0 && ++idx[pos - 1] == gens.size()) idx[--pos] = 0;
                if (pos == 0) break;
            }
        }
        require(checked_closed > 0, "no endpoint-pattern words were exercised");
    }
}

void criterion5_basis_poincare() {
    for (int m = 1; m <= 5; ++m)
        for (int n = 1; n <= 5; ++n) {
            if (m + n > 6) continue;
            for (int r = 1; r <= 3; ++r) {
                // The basis words do not depend on d, only their degrees do:
                // count by length once, then compare against each d.
                std::vector<long long> counts;
                enumerate_basis_visit(make_params(2, m, n, r),
                                      [&](std::span<const Generator> w) {
                                          if (counts.size() <= w.size())
                                              counts.resize(w.size() + 1, 0);
                                          ++counts[w.size()];
                                      });
                for (int d : {2, 3}) {
                    Params p = make_params(d, m, n, r);
                    IntPoly poly = poincare_polynomial(p);
                    std::string at = " at " + p.describe();
                    require(poly.degree() == top_degree(p),
                            "top degree != (rn+m-1)(d-1)" + at);
                    require(static_cast<int>(counts.size() - 1) * p.deg_gen() ==
                                top_degree(p),
                            "enumerated top length mismatch" + at);
                    for (int deg = 0; deg <= poly.degree(); ++deg) {
                        long long count = 0;
                        if (deg % p.deg_gen() == 0) {
                            std::size_t len =
                                static_cast<std::size_t>(deg / p.deg_gen());
                            if (len < counts.size()) count = counts[len];
                        }
                        require(poly.at(static_cast<std::size_t>(deg)) == BigInt(count),
                                "count/coefficient mismatch in degree " +
                                    std::to_string(deg) + at);
                    }
                }
            }
        }
}

void criterion6_parity_identities() {
    for (int d : {3, 5}) {
        Params p = make_params(d, 2, 2, 2);
        for (int j = 3; j <= 4; ++j) {
            std::string text = "(w[2](1," + std::to_string(j) + ")-w[1](1," +
                               std::to_string(j) + "))^2";
            Polynomial got = evaluate(text, p);
            std::vector<Generator> word{make_generator(1, 1, j, p),
                                        make_generator(2, 1, j, p)};
            require(got == normal_form(word, BigInt(-2), p),
                    "odd-d square identity failed at d=" + std::to_string(d));
        }
    }
    for (int d : {2, 4}) {
        Params p = make_params(d, 2, 2, 2);
        for (int j = 3; j <= 4; ++j) {
            std::string text = "(w[2](1," + std::to_string(j) + ")-w[1](1," +
                               std::to_string(j) + "))^2";
            require(evaluate(text, p).is_zero(),
                    "even-d square did not vanish at d=" + std::to_string(d));
        }
    }
}

void criterion7_generating_functions() {
    for (int m = 2; m <= 6; ++m)
        for (int n = 1; n <= 6; ++n) {
            auto odd = genfun_of(TCSequence::fadell_neuwirth_odd(m, n)).principal_residues();
            require(odd.first == Rational(n) && odd.second == Rational(m - 1),
                    "fn-odd residues wrong");
            auto planar =
                genfun_of(TCSequence::fadell_neuwirth_planar(m, n)).principal_residues();
            require(planar.first == Rational(n) && planar.second == Rational(m - 2),
                    "fn-planar residues wrong");
            require(recurrence_check(TCSequence::fadell_neuwirth_odd(m, n), 12) ==
                        BigInt(n),
                    "fn recurrence != n");
        }
    auto hopf = genfun_of(TCSequence::hopf()).principal_residues();
    require(hopf.first == Rational(1) && hopf.second == Rational(-1),
            "hopf residues wrong");
    require(recurrence_check(TCSequence::hopf(), 12) == BigInt(1), "hopf recurrence != 1");
    for (int n = 1; n <= 6; ++n) {
        auto fiber = genfun_of(TCSequence::fn_fiber(n)).principal_residues();
        require(fiber.first == Rational(n) && fiber.second == Rational(0),
                "fiber residues wrong");
    }

    // Series coefficients against the certified exact-regime values,
    // term by term through r = 8 (coefficient of t^r is TC_{r+1}).
    struct Case {
        int d;
        int m;
        int n;
    };
    for (const Case& c : {Case{3, 2, 1}, Case{5, 2, 1}, Case{3, 3, 2}, Case{2, 2, 1},
                          Case{2, 3, 2}}) {
        TCSequence seq = c.d == 2 ? TCSequence::fadell_neuwirth_planar(c.m, c.n)
                                  : TCSequence::fadell_neuwirth_odd(c.m, c.n);
        std::vector<Rational> series = genfun_of(seq).expand_series(9);
        require(series[0] == Rational(0), "series must start at t^1");
        for (int r = 1; r <= 8; ++r) {
            BoundsReport rep = fn_tc_bounds(make_params(c.d, c.m, c.n, r + 1));
            require(rep.exact, "exact regime expected");
            require(series[static_cast<std::size_t>(r)] == Rational(rep.lower),
                    "series/certified value mismatch at d=" + std::to_string(c.d) +
                        " m=" + std::to_string(c.m) + " n=" + std::to_string(c.n) +
                        " r=" + std::to_string(r));
        }
    }
}

void criterion8_property_suites() {
    for (int d : {2, 3}) {
        Params p = make_params(d, 3, 2, 2);
        std::vector<Generator> pool = tcalg::testing::all_generators(p);
        std::mt19937_64 rng(20250808 + d);

        // normal_form idempotence.
        for (int iter = 0; iter < 1000; ++iter) {
            std::vector<Generator> w = tcalg::testing::random_word(rng, pool, 6);
            Polynomial nf = normal_form(w, BigInt(1), p);
            require(normal_form(nf) == nf, "idempotence failed");
        }

        // Multiplication associativity-compatibility.
        for (int iter = 0; iter < 1000; ++iter) {
            Polynomial a = tcalg::testing::random_polynomial(rng, p, pool, 3, 2);
            Polynomial b = tcalg::testing::random_polynomial(rng, p, pool, 3, 2);
            Polynomial c = tcalg::testing::random_polynomial(rng, p, pool, 3, 2);
            require(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)),
                    "associativity failed");
        }

        // Diagonal restriction is a ring homomorphism.
        for (int iter = 0; iter < 1000; ++iter) {
            Polynomial a = tcalg::testing::random_polynomial(rng, p, pool, 3, 3);
            Polynomial b = tcalg::testing::random_polynomial(rng, p, pool, 3, 3);
            require(diagonal_restriction(multiply(a, b)) ==
                        multiply(diagonal_restriction(a), diagonal_restriction(b)),
                    "diagonal restriction is not multiplicative");
        }

        // Disjoint-support products of basis monomials are unimodular.
        std::vector<Monomial> basis = enumerate_basis(p);
        int done = 0;
        while (done < 1000) {
            const Monomial& a = basis[rng() % basis.size()];
            const Monomial& b = basis[rng() % basis.size()];
            bool disjoint = true;
            for (const Generator& ga : a.word)
                for (const Generator& gb : b.word)
                    if (ga.layer == gb.layer && ga.j == gb.j) disjoint = false;
            if (!disjoint) continue;
            Polynomial prod = multiply(normal_form(a.word, BigInt(1), p),
                                       normal_form(b.word, BigInt(1), p));
            require(prod.term_count() == 1, "disjoint product not a single monomial");
            require(prod.terms().begin()->second.abs() == BigInt(1),
                    "disjoint product coefficient not +-1");
            ++done;
        }

        // Endpoint-factor property of straightened endpoint products.
        int pattern_done = 0;
        while (pattern_done < 1000) {
            int layer = 1 + static_cast<int>(rng() % p.r);
            int j = 3 + static_cast<int>(rng() % (p.points() - 2));
            std::vector<int> J;
            for (int v = 1; v < j; ++v)
                if (rng() % 2 == 0) J.push_back(v);
            if (J.size() < 2) continue;
            std::vector<Generator> word;
            for (int v : J) word.push_back(make_generator(layer, v, j, p));
            Polynomial nf = normal_form(word, BigInt(1), p);
            Generator first = make_generator(layer, J.front(), j, p);
            int with_first = 0;
            for (const auto& [mono, coeff] : nf.terms()) {
                bool endpoint = false;
                for (int v : J)
                    if (mono.contains(make_generator(layer, v, j, p))) endpoint = true;
                require(endpoint, "term lost every endpoint factor");
                if (mono.contains(first)) ++with_first;
            }
            require(with_first == 1, "first endpoint factor count != 1");
            ++pattern_done;
        }
    }
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* title;
        std::function<void()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "odd-d exactness: lower = upper = rn+m-1 with verified certificates",
         criterion1_odd_exactness},
        {2, "planar exactness: lower = upper = rn+m-2 with verified certificates",
         criterion2_planar_exactness},
        {3, "even-d bracket: [rn+m-2, rn+m-1], never exact", criterion3_even_bracket},
        {4, "rewriter equivalence: closed form and relations, words up to length 4",
         criterion4_rewriter_equivalence},
        {5, "basis counts equal Poincare coefficients, top degree (rn+m-1)(d-1)",
         criterion5_basis_poincare},
        {6, "parity identities: squared difference is -2 w[1]w[2] (odd) / 0 (even)",
         criterion6_parity_identities},
        {7, "generating functions: closed forms, residues, series, recurrences",
         criterion7_generating_functions},
        {8, "property suites: 1000+ randomized cases per law, fixed seeds",
         criterion8_property_suites},
    };

    int failures = 0;
    for (const Criterion& crit : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::string message;
        bool ok = true;
        try {
            crit.run();
        } catch (const std::exception& err) {
            ok = false;
            message = err.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                    start)
                          .count();
        if (ok) {
            std::printf("PASS  criterion %d: %s (%.1fs)\n", crit.id, crit.title, secs);
        } else {
            std::printf("FAIL  criterion %d: %s (%.1fs)\n      %s\n", crit.id,
                        crit.title, secs, message.c_str());
            ++failures;
        }
        std::fflush(stdout);
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
