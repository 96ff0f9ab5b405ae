// SPDX-License-Identifier: Apache-2.0
#include "tcalg/bounds.hpp"

#include <utility>

#include "tcalg/expr.hpp"

namespace tcalg {

std::string regime_name(Regime regime) {
    switch (regime) {
        case Regime::OddD: return "odd-d";
        case Regime::D2: return "planar";
        case Regime::EvenDGE4: return "even-d-bracket";
    }
    return "?";
}

Regime regime_of(const Params& params) {
    if (params.d % 2 == 1) return Regime::OddD;
    return params.d == 2 ? Regime::D2 : Regime::EvenDGE4;
}

int upper_bound_schwarz(int hdim_total, int k_conn) {
    if (hdim_total < 0 || k_conn < 0)
        fail_invalid("upper_bound_schwarz: negative input");
    int num = hdim_total + 1;
    int den = k_conn + 1;
    // Largest integer strictly below num/den.
    return num % den == 0 ? num / den - 1 : num / den;
}

namespace {

void require_bounds_params(const Params& params) {
    params.validate();
    if (params.m < 2) fail_invalid("bounds: m must be >= 2, got m=" + std::to_string(params.m));
    if (params.r < 2) fail_invalid("bounds: r must be >= 2, got r=" + std::to_string(params.r));
}

Polynomial layer_difference(const Params& params, int la, int lb, int i, int j) {
    return Polynomial::generator(make_generator(la, i, j, params), params) -
           Polynomial::generator(make_generator(lb, i, j, params), params);
}

}  // namespace

int fn_upper_bound(const Params& params) {
    require_bounds_params(params);
    const int rn_m = params.r * params.n + params.m;
    if (params.d >= 3)
        return upper_bound_schwarz((rn_m - 1) * params.deg_gen(), params.d - 2);
    return upper_bound_schwarz(params.r * params.n + params.m - 2, 0);
}

std::vector<Polynomial> certificate_factors_odd_recipe(const Params& params) {
    require_bounds_params(params);
    const int m = params.m, n = params.n, r = params.r;
    std::vector<Polynomial> out;
    // (m-1) factors: w[1](i,m+1) - w[2](i,m+1), i = 2..m.
    for (int i = 2; i <= m; ++i) out.push_back(layer_difference(params, 1, 2, i, m + 1));
    // 2n factors: (w[2](1,j) - w[1](1,j)) twice per robot index j.
    for (int j = m + 1; j <= m + n; ++j) {
        out.push_back(layer_difference(params, 2, 1, 1, j));
        out.push_back(layer_difference(params, 2, 1, 1, j));
    }
    // n(r-2) factors: w[l](1,j) - w[1](1,j), l = 3..r.
    for (int l = 3; l <= r; ++l)
        for (int j = m + 1; j <= m + n; ++j)
            out.push_back(layer_difference(params, l, 1, 1, j));
    return out;
}

std::vector<Polynomial> certificate_factors_even_recipe(const Params& params) {
    require_bounds_params(params);
    const int m = params.m, n = params.n, r = params.r;
    std::vector<Polynomial> out;
    // (m-1) factors: w[1](i,m+1) - w[2](i,m+1), i = 2..m.
    for (int i = 2; i <= m; ++i) out.push_back(layer_difference(params, 1, 2, i, m + 1));
    // (n-1) factors: w[1](j-1,j) - w[2](j-1,j); empty when n = 1.
    for (int j = m + 2; j <= m + n; ++j)
        out.push_back(layer_difference(params, 1, 2, j - 1, j));
    // n(r-1) factors: w[l](1,j) - w[1](1,j), l = 2..r.
    for (int l = 2; l <= r; ++l)
        for (int j = m + 1; j <= m + n; ++j)
            out.push_back(layer_difference(params, l, 1, 1, j));
    return out;
}

std::vector<Polynomial> kernel_certificate_factors(const Params& params) {
    return params.d % 2 == 1 ? certificate_factors_odd_recipe(params)
                             : certificate_factors_even_recipe(params);
}

namespace {

// The basis monomial the recipe is known to hit with nonzero coefficient.
Monomial named_witness(const Params& params) {
    const int m = params.m, n = params.n, r = params.r;
    std::vector<Generator> w;
    if (params.d % 2 == 1) {
        // Base part pairs (1,2),(2,3),...,(2,m); then layer 1 pairs
        // (1,m+1..m+n); layer 2 pairs (2,m+1),(1,m+2..m+n); layers
        // l >= 3 pairs (1,m+1..m+n).
        for (int j = 2; j <= m; ++j)
            w.push_back(make_generator(kBaseLayer, j == 2 ? 1 : 2, j, params));
        for (int j = m + 1; j <= m + n; ++j) w.push_back(make_generator(1, 1, j, params));
        for (int j = m + 1; j <= m + n; ++j)
            w.push_back(make_generator(2, j == m + 1 ? 2 : 1, j, params));
        for (int l = 3; l <= r; ++l)
            for (int j = m + 1; j <= m + n; ++j) w.push_back(make_generator(l, 1, j, params));
    } else {
        // Base part pairs (2,3),...,(2,m); layer 1 pairs (2,m+1) then
        // (m+1,m+2),...,(m+n-1,m+n); layers l >= 2 pairs (1,m+1..m+n).
        for (int j = 3; j <= m; ++j) w.push_back(make_generator(kBaseLayer, 2, j, params));
        for (int j = m + 1; j <= m + n; ++j)
            w.push_back(make_generator(1, j == m + 1 ? 2 : j - 1, j, params));
        for (int l = 2; l <= r; ++l)
            for (int j = m + 1; j <= m + n; ++j) w.push_back(make_generator(l, 1, j, params));
    }
    return Monomial{std::move(w)};
}

}  // namespace

Certificate certify_lower_bound(const Params& params) {
    std::vector<Polynomial> factors = kernel_certificate_factors(params);
    Polynomial product = Polynomial::unit(params);
    for (const Polynomial& f : factors) product = multiply(product, f);

    if (product.is_zero()) {
        std::string listing;
        for (const Polynomial& f : factors) {
            if (!listing.empty()) listing += "; ";
            listing += format(f);
        }
        fail_verification("certificate: kernel-class product vanished for " +
                          params.describe() + " (factors: " + listing + ")");
    }

    Certificate cert;
    cert.params = params;
    cert.k = static_cast<int>(factors.size());
    cert.factors = std::move(factors);

    Monomial preferred = named_witness(params);
    BigInt c = product.coefficient(preferred);
    if (!c.is_zero()) {
        cert.witness = std::move(preferred);
        cert.witness_coefficient = std::move(c);
    } else {
        const auto& [mono, coeff] = *product.terms().begin();
        cert.witness = mono;
        cert.witness_coefficient = coeff;
    }
    cert.product = std::move(product);
    return cert;
}

void verify_certificate(const Certificate& cert) {
    if (cert.k != static_cast<int>(cert.factors.size()))
        fail_verification("certificate: k does not match the factor count");
    for (std::size_t idx = 0; idx < cert.factors.size(); ++idx)
        if (!in_diagonal_kernel(cert.factors[idx]))
            fail_verification("certificate: factor " + std::to_string(idx) +
                              " is not in the diagonal kernel");
    Polynomial product = Polynomial::unit(cert.params);
    for (const Polynomial& f : cert.factors) product = multiply(product, f);
    if (!(product == cert.product))
        fail_verification("certificate: stored product does not match the factors");
    if (cert.witness_coefficient.is_zero())
        fail_verification("certificate: witness coefficient is zero");
    if (product.coefficient(cert.witness) != cert.witness_coefficient)
        fail_verification("certificate: witness coefficient does not match the product");
}

BoundsReport fn_tc_bounds(const Params& params) {
    BoundsReport report;
    report.params = params;
    report.certificate = certify_lower_bound(params);
    report.lower = report.certificate.k;
    report.upper = fn_upper_bound(params);
    report.exact = report.lower == report.upper;
    report.regime = regime_of(params);
    if (report.lower > report.upper)
        fail_verification("bounds: lower " + std::to_string(report.lower) +
                          " exceeds upper " + std::to_string(report.upper));
    return report;
}

DifferencePool DifferencePool::standard(const Params& params) {
    params.validate();
    DifferencePool pool;
    for (int la = 1; la <= params.r; ++la)
        for (int lb = la + 1; lb <= params.r; ++lb)
            for (int j = params.m + 1; j <= params.points(); ++j)
                for (int i = 1; i < j; ++i)
                    pool.classes.push_back(layer_difference(params, la, lb, i, j));
    return pool;
}

DifferencePool DifferencePool::with_base_multiples(const Params& params) {
    DifferencePool pool = standard(params);
    const std::size_t plain = pool.classes.size();
    for (std::size_t k = 0; k < plain; ++k)
        for (int j = 2; j <= params.m; ++j)
            for (int i = 1; i < j; ++i) {
                Polynomial base =
                    Polynomial::generator(make_generator(kBaseLayer, i, j, params), params);
                pool.classes.push_back(multiply(base, pool.classes[k]));
            }
    return pool;
}

namespace {

void oracle_dfs(const DifferencePool& pool, std::size_t from, int depth, int budget,
                const Polynomial& acc, int& best) {
    if (depth > best) best = depth;
    if (depth == budget) return;
    for (std::size_t idx = from; idx < pool.classes.size(); ++idx) {
        Polynomial next = multiply(acc, pool.classes[idx]);
        if (!next.is_zero()) oracle_dfs(pool, idx, depth + 1, budget, next, best);
    }
}

}  // namespace

OracleResult oracle_cup_length(const Params& params, const DifferencePool& pool,
                               int budget) {
    params.validate();
    if (budget < 0) fail_invalid("oracle: negative budget");
    OracleResult out;
    // Products are reorderable up to a global sign, so nondecreasing index
    // sequences cover all products.
    oracle_dfs(pool, 0, 0, budget, Polynomial::unit(params), out.k);
    out.truncated = out.k == budget;
    return out;
}

}  // namespace tcalg
