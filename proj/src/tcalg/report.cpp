// SPDX-License-Identifier: Apache-2.0
#include "tcalg/report.hpp"

#include <algorithm>
#include <cstdlib>
#include <json.hpp>

#include "tcalg/basis.hpp"
#include "tcalg/bounds.hpp"
#include "tcalg/expr.hpp"
#include "tcalg/genfun.hpp"
#include "tcalg/version.hpp"

namespace tcalg {

namespace {

using nlohmann::json;

json params_json(const Params& p) {
    return json{{"d", p.d}, {"m", p.m}, {"n", p.n}, {"r", p.r}};
}

json engine_json() {
    return json{{"name", "tcalg"}, {"version", kVersion}, {"exact_arithmetic", true}};
}

std::string engine_text() {
    return std::string("engine: tcalg ") + kVersion + " (exact integer arithmetic)";
}

CommandOutput finish_json(json doc) { return {0, doc.dump(2) + "\n"}; }

CommandOutput error_output(const Error& err, Emit emit) {
    if (emit == Emit::Json) {
        json doc{{"error", err.what()}, {"exit_code", static_cast<int>(err.code())}};
        return {static_cast<int>(err.code()), doc.dump(2) + "\n"};
    }
    return {static_cast<int>(err.code()), std::string("error: ") + err.what() + "\n"};
}

template <typename Fn>
CommandOutput guarded(Emit emit, Fn&& fn) {
    try {
        return fn();
    } catch (const Error& err) {
        return error_output(err, emit);
    } catch (const std::exception& err) {
        return error_output(Error(Errc::invalid_argument, err.what()), emit);
    }
}

json certificate_json(const Certificate& cert, bool verified) {
    json factors = json::array();
    for (const Polynomial& f : cert.factors) factors.push_back(format(f));
    return json{{"k", cert.k},
                {"factors", std::move(factors)},
                {"witness", format_monomial(cert.witness)},
                {"coefficient", cert.witness_coefficient.to_string()},
                {"verified", verified}};
}

void certificate_text(std::string& out, const Certificate& cert, bool verified) {
    out += "certificate.k: " + std::to_string(cert.k) + "\n";
    for (std::size_t idx = 0; idx < cert.factors.size(); ++idx)
        out += "certificate.factor[" + std::to_string(idx) + "]: " +
               format(cert.factors[idx]) + "\n";
    out += "certificate.witness: " + format_monomial(cert.witness) + "\n";
    out += "certificate.coefficient: " + cert.witness_coefficient.to_string() + "\n";
    out += std::string("certificate.verified: ") + (verified ? "true" : "false") + "\n";
}

}  // namespace

CommandOutput cmd_bounds(int d, int m, int n, int r, Emit emit) {
    return guarded(emit, [&]() -> CommandOutput {
        Params params = make_params(d, m, n, r);
        BoundsReport report = fn_tc_bounds(params);
        verify_certificate(report.certificate);

        if (emit == Emit::Json) {
            json doc{{"command", "bounds"},
                     {"engine", engine_json()},
                     {"params", params_json(params)},
                     {"result",
                      {{"lower", report.lower},
                       {"upper", report.upper},
                       {"exact", report.exact},
                       {"regime", regime_name(report.regime)},
                       {"certificate", certificate_json(report.certificate, true)}}}};
            return finish_json(std::move(doc));
        }
        std::string out;
        out += "command: bounds\n";
        out += "params: " + params.describe() + "\n";
        out += "lower: " + std::to_string(report.lower) + "\n";
        out += "upper: " + std::to_string(report.upper) + "\n";
        out += std::string("exact: ") + (report.exact ? "true" : "false") + "\n";
        out += "regime: " + regime_name(report.regime) + "\n";
        certificate_text(out, report.certificate, true);
        out += engine_text() + "\n";
        return {0, out};
    });
}

CommandOutput cmd_verify(const std::vector<int>& d_set, int m_max, int n_max,
                         int r_max, std::size_t max_cells, Emit emit) {
    return guarded(emit, [&]() -> CommandOutput {
        if (max_cells == 0) {
            max_cells = 500;
            if (const char* env = std::getenv("TCALG_MAX_CELLS")) {
                char* end = nullptr;
                unsigned long long v = std::strtoull(env, &end, 10);
                if (end == env || *end != '\0' || v == 0)
                    fail_invalid("TCALG_MAX_CELLS must be a positive integer");
                max_cells = static_cast<std::size_t>(v);
            }
        }
        if (d_set.empty()) fail_invalid("verify: empty d set");
        for (int d : d_set)
            if (d < 2) fail_invalid("verify: d must be >= 2");
        if (m_max < 2) fail_invalid("verify: m_max must be >= 2 (sweep starts at m=2)");
        if (n_max < 1) fail_invalid("verify: n_max must be >= 1");
        if (r_max < 2) fail_invalid("verify: r_max must be >= 2 (sweep starts at r=2)");

        std::vector<int> ds = d_set;
        std::sort(ds.begin(), ds.end());
        ds.erase(std::unique(ds.begin(), ds.end()), ds.end());

        std::size_t cells = static_cast<std::size_t>(ds.size()) *
                            static_cast<std::size_t>(m_max - 1) *
                            static_cast<std::size_t>(n_max) *
                            static_cast<std::size_t>(r_max - 1);
        if (cells > max_cells)
            fail_resource("verify: sweep of " + std::to_string(cells) +
                          " cells exceeds the cap of " + std::to_string(max_cells));

        struct Row {
            Params params;
            BoundsReport report;
            bool cert_ok = false;
        };
        std::vector<Row> rows;
        int failures = 0;
        bool monotone_ok = true;

        for (int d : ds)
            for (int m = 2; m <= m_max; ++m)
                for (int n = 1; n <= n_max; ++n) {
                    int prev_lower = -1, prev_upper = -1;
                    for (int r = 2; r <= r_max; ++r) {
                        Row row{make_params(d, m, n, r), {}, false};
                        row.report = fn_tc_bounds(row.params);
                        try {
                            verify_certificate(row.report.certificate);
                            row.cert_ok = true;
                        } catch (const Error&) {
                            row.cert_ok = false;
                        }
                        const bool exact_regime = d % 2 == 1 || d == 2;
                        if (!row.cert_ok || (exact_regime && !row.report.exact)) ++failures;
                        if (row.report.lower < prev_lower || row.report.upper < prev_upper)
                            monotone_ok = false;
                        prev_lower = row.report.lower;
                        prev_upper = row.report.upper;
                        rows.push_back(std::move(row));
                    }
                }
        if (!monotone_ok) ++failures;
        int exit_code = failures == 0 ? 0 : 3;

        if (emit == Emit::Json) {
            json jrows = json::array();
            for (const Row& row : rows)
                jrows.push_back(json{{"params", params_json(row.params)},
                                     {"lower", row.report.lower},
                                     {"upper", row.report.upper},
                                     {"exact", row.report.exact},
                                     {"regime", regime_name(row.report.regime)},
                                     {"certificate_ok", row.cert_ok}});
            json doc{{"command", "verify"},
                     {"engine", engine_json()},
                     {"sweep",
                      {{"d_set", ds}, {"m_max", m_max}, {"n_max", n_max}, {"r_max", r_max}}},
                     {"rows", std::move(jrows)},
                     {"summary",
                      {{"cells", rows.size()},
                       {"failures", failures},
                       {"monotone_in_r", monotone_ok}}}};
            return {exit_code, doc.dump(2) + "\n"};
        }

        std::string out;
        out += "command: verify\n";
        out += "cells: " + std::to_string(rows.size()) + "\n";
        for (const Row& row : rows) {
            out += row.params.describe() + " | lower=" + std::to_string(row.report.lower) +
                   " upper=" + std::to_string(row.report.upper) +
                   " exact=" + (row.report.exact ? "true" : "false") +
                   " regime=" + regime_name(row.report.regime) +
                   " certificate=" + (row.cert_ok ? "ok" : "FAILED") + "\n";
        }
        out += std::string("monotone-in-r: ") + (monotone_ok ? "ok" : "FAILED") + "\n";
        out += "failures: " + std::to_string(failures) + "\n";
        out += engine_text() + "\n";
        return {exit_code, out};
    });
}

CommandOutput cmd_normal_form(std::string_view expr_text, int d, int m, int n, int r,
                              std::size_t max_word_len, Emit emit) {
    return guarded(emit, [&]() -> CommandOutput {
        Params params = make_params(d, m, n, r);
        if (max_word_len == 0) fail_invalid("normal-form: max word length must be positive");
        params.max_word_len = max_word_len;
        Polynomial value = evaluate(expr_text, params);

        if (emit == Emit::Json) {
            json terms = json::array();
            for (const auto& [mono, coeff] : value.terms())
                terms.push_back(json{{"monomial", format_monomial(mono)},
                                     {"coefficient", coeff.to_string()}});
            json doc{{"command", "normal-form"},
                     {"engine", engine_json()},
                     {"params", params_json(params)},
                     {"expression", std::string(expr_text)},
                     {"result",
                      {{"normal_form", format(value)},
                       {"is_zero", value.is_zero()},
                       {"term_count", value.term_count()},
                       {"terms", std::move(terms)}}}};
            return finish_json(std::move(doc));
        }
        std::string out;
        out += "command: normal-form\n";
        out += "params: " + params.describe() + "\n";
        out += "input: " + std::string(expr_text) + "\n";
        out += "normal-form: " + format(value) + "\n";
        out += "terms: " + std::to_string(value.term_count()) + "\n";
        out += engine_text() + "\n";
        return {0, out};
    });
}

CommandOutput cmd_poincare(int d, int m, int n, int r, bool check, Emit emit) {
    return guarded(emit, [&]() -> CommandOutput {
        Params params = make_params(d, m, n, r);
        IntPoly poly = poincare_polynomial(params);

        bool check_ok = true;
        if (check) {
            std::vector<std::size_t> counts;  // basis monomials by word length
            enumerate_basis_visit(params, [&](std::span<const Generator> word) {
                if (counts.size() <= word.size()) counts.resize(word.size() + 1, 0);
                ++counts[word.size()];
            });
            const int dg = params.deg_gen();
            if (static_cast<int>(counts.size() - 1) * dg != poly.degree()) check_ok = false;
            for (int deg = 0; deg <= poly.degree() && check_ok; ++deg) {
                BigInt actual(0);
                if (deg % dg == 0 && static_cast<std::size_t>(deg / dg) < counts.size())
                    actual = BigInt(static_cast<long long>(counts[static_cast<std::size_t>(deg / dg)]));
                if (poly.at(static_cast<std::size_t>(deg)) != actual) check_ok = false;
            }
        }
        int exit_code = check_ok ? 0 : 3;

        if (emit == Emit::Json) {
            json coeffs = json::array();
            for (const BigInt& c : poly.coeffs()) coeffs.push_back(c.to_string());
            json doc{{"command", "poincare"},
                     {"engine", engine_json()},
                     {"params", params_json(params)},
                     {"result",
                      {{"polynomial", poly.to_string()},
                       {"coefficients", std::move(coeffs)},
                       {"top_degree", poly.degree()}}}};
            if (check) doc["result"]["check"] = check_ok ? "pass" : "fail";
            return {exit_code, doc.dump(2) + "\n"};
        }
        std::string out;
        out += "command: poincare\n";
        out += "params: " + params.describe() + "\n";
        out += "poincare: " + poly.to_string() + "\n";
        out += "top-degree: " + std::to_string(poly.degree()) + "\n";
        if (check) out += std::string("check: ") + (check_ok ? "pass" : "fail") + "\n";
        out += engine_text() + "\n";
        return {exit_code, out};
    });
}

CommandOutput cmd_genfun(std::string_view bundle, int m, int n, int terms, Emit emit) {
    return guarded(emit, [&]() -> CommandOutput {
        if (terms < 1) fail_invalid("genfun: terms must be >= 1");
        TCSequence seq;
        if (bundle == "fn-odd") {
            seq = TCSequence::fadell_neuwirth_odd(m, n);
        } else if (bundle == "fn-planar") {
            seq = TCSequence::fadell_neuwirth_planar(m, n);
        } else if (bundle == "hopf") {
            seq = TCSequence::hopf();
        } else if (bundle == "fn-fiber") {
            seq = TCSequence::fn_fiber(n);
        } else {
            fail_invalid("genfun: unknown bundle '" + std::string(bundle) +
                         "' (expected fn-odd, fn-planar, hopf or fn-fiber)");
        }
        RationalFunction fun = genfun_of(seq);
        auto pf = fun.pole_form();
        if (!pf) fail_verification("genfun: registered sequence lost its pole form");
        std::vector<Rational> series = fun.expand_series(terms);
        BigInt recurrence = recurrence_check(seq, std::max(terms + 1, 10));

        if (emit == Emit::Json) {
            json jterms = json::array();
            for (const Rational& v : series) jterms.push_back(v.to_string());
            json doc{{"command", "genfun"},
                     {"engine", engine_json()},
                     {"params", {{"bundle", seq.name()}, {"m", m}, {"n", n}, {"terms", terms}}},
                     {"result",
                      {{"ratio", fun.to_string()},
                       {"pole_form", pf->to_string()},
                       {"A", pf->A.to_string()},
                       {"B", pf->B.to_string()},
                       {"series", std::move(jterms)},
                       {"recurrence_A", recurrence.to_string()}}}};
            return finish_json(std::move(doc));
        }
        std::string out;
        out += "command: genfun\n";
        out += "bundle: " + seq.name() + "\n";
        if (seq.kind == TCSequence::Kind::FadellNeuwirthOdd ||
            seq.kind == TCSequence::Kind::FadellNeuwirthPlanar)
            out += "params: m=" + std::to_string(m) + " n=" + std::to_string(n) + "\n";
        if (seq.kind == TCSequence::Kind::FNFiber)
            out += "params: n=" + std::to_string(n) + "\n";
        out += "ratio: " + fun.to_string() + "\n";
        out += "pole-form: " + pf->to_string() + "\n";
        out += "residues: A=" + pf->A.to_string() + " B=" + pf->B.to_string() + "\n";
        out += "series:";
        for (const Rational& v : series) out += " " + v.to_string();
        out += "\n";
        out += "recurrence-A: " + recurrence.to_string() + "\n";
        out += engine_text() + "\n";
        return {0, out};
    });
}

CommandOutput cmd_oracle(int d, int m, int n, int r, int budget, Emit emit) {
    return guarded(emit, [&]() -> CommandOutput {
        Params params = make_params(d, m, n, r);
        DifferencePool pool = DifferencePool::standard(params);
        OracleResult res = oracle_cup_length(params, pool, budget);

        if (emit == Emit::Json) {
            json doc{{"command", "oracle"},
                     {"engine", engine_json()},
                     {"params", params_json(params)},
                     {"result",
                      {{"cup_length", res.k},
                       {"truncated", res.truncated},
                       {"budget", budget},
                       {"pool_size", pool.classes.size()}}}};
            return finish_json(std::move(doc));
        }
        std::string out;
        out += "command: oracle\n";
        out += "params: " + params.describe() + "\n";
        out += "pool-size: " + std::to_string(pool.classes.size()) + "\n";
        out += "budget: " + std::to_string(budget) + "\n";
        out += "cup-length: " + std::to_string(res.k) + "\n";
        out += std::string("truncated: ") + (res.truncated ? "true" : "false") + "\n";
        out += engine_text() + "\n";
        return {0, out};
    });
}

}  // namespace tcalg
