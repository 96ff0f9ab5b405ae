// SPDX-License-Identifier: Apache-2.0
#include "tcalg/tcalg.h"

#include <cstring>
#include <string>

#include "tcalg/bounds.hpp"
#include "tcalg/expr.hpp"
#include "tcalg/report.hpp"
#include "tcalg/version.hpp"

using namespace tcalg;

struct tcalg_params {
    Params value;
};

struct tcalg_poly {
    Polynomial value;
};

struct tcalg_bounds {
    BoundsReport value;
    std::string regime;
};

namespace {

thread_local std::string g_last_error;

tcalg_status set_error(const Error& err) {
    g_last_error = err.what();
    return static_cast<tcalg_status>(err.code());
}

tcalg_status set_error(const std::exception& err) {
    g_last_error = err.what();
    return TCALG_INVALID_ARGUMENT;
}

template <typename Fn>
tcalg_status guarded(Fn&& fn) {
    try {
        fn();
        return TCALG_OK;
    } catch (const Error& err) {
        return set_error(err);
    } catch (const std::exception& err) {
        return set_error(err);
    }
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

Emit to_emit(tcalg_emit emit) { return emit == TCALG_EMIT_JSON ? Emit::Json : Emit::Text; }

tcalg_status command_result(const CommandOutput& res, char** out) {
    if (out == nullptr) {
        g_last_error = "null output parameter";
        return TCALG_INVALID_ARGUMENT;
    }
    if (res.exit_code != 0) g_last_error = res.body;
    *out = dup_string(res.body);
    return static_cast<tcalg_status>(res.exit_code);
}

}  // namespace

extern "C" {

const char* tcalg_version(void) { return kVersion; }

const char* tcalg_last_error(void) { return g_last_error.c_str(); }

void tcalg_string_free(char* s) { delete[] s; }

tcalg_status tcalg_params_create(int d, int m, int n, int r, tcalg_params** out) {
    return guarded([&] {
        if (out == nullptr) fail_invalid("null output parameter");
        Params p = make_params(d, m, n, r);
        *out = new tcalg_params{p};
    });
}

tcalg_status tcalg_params_set_max_word_len(tcalg_params* params, size_t max_word_len) {
    return guarded([&] {
        if (params == nullptr) fail_invalid("null params handle");
        if (max_word_len == 0) fail_invalid("max word length must be positive");
        params->value.max_word_len = max_word_len;
    });
}

void tcalg_params_free(tcalg_params* params) { delete params; }

tcalg_status tcalg_poly_parse(const tcalg_params* params, const char* text,
                              tcalg_poly** out) {
    return guarded([&] {
        if (params == nullptr || text == nullptr || out == nullptr)
            fail_invalid("null argument");
        *out = new tcalg_poly{evaluate(text, params->value)};
    });
}

tcalg_status tcalg_poly_multiply(const tcalg_poly* a, const tcalg_poly* b,
                                 tcalg_poly** out) {
    return guarded([&] {
        if (a == nullptr || b == nullptr || out == nullptr) fail_invalid("null argument");
        *out = new tcalg_poly{multiply(a->value, b->value)};
    });
}

tcalg_status tcalg_poly_add(const tcalg_poly* a, const tcalg_poly* b, tcalg_poly** out) {
    return guarded([&] {
        if (a == nullptr || b == nullptr || out == nullptr) fail_invalid("null argument");
        *out = new tcalg_poly{a->value + b->value};
    });
}

tcalg_status tcalg_poly_diagonal(const tcalg_poly* p, tcalg_poly** out) {
    return guarded([&] {
        if (p == nullptr || out == nullptr) fail_invalid("null argument");
        *out = new tcalg_poly{diagonal_restriction(p->value)};
    });
}

int tcalg_poly_is_zero(const tcalg_poly* p) {
    return p != nullptr && p->value.is_zero() ? 1 : 0;
}

int tcalg_poly_equal(const tcalg_poly* a, const tcalg_poly* b) {
    if (a == nullptr || b == nullptr) return 0;
    return a->value == b->value ? 1 : 0;
}

tcalg_status tcalg_poly_format(const tcalg_poly* p, char** out) {
    return guarded([&] {
        if (p == nullptr || out == nullptr) fail_invalid("null argument");
        *out = dup_string(format(p->value));
    });
}

void tcalg_poly_free(tcalg_poly* p) { delete p; }

tcalg_status tcalg_bounds_compute(const tcalg_params* params, tcalg_bounds** out) {
    return guarded([&] {
        if (params == nullptr || out == nullptr) fail_invalid("null argument");
        BoundsReport report = fn_tc_bounds(params->value);
        *out = new tcalg_bounds{std::move(report), ""};
        (*out)->regime = regime_name((*out)->value.regime);
    });
}

int tcalg_bounds_lower(const tcalg_bounds* b) { return b ? b->value.lower : -1; }

int tcalg_bounds_upper(const tcalg_bounds* b) { return b ? b->value.upper : -1; }

int tcalg_bounds_exact(const tcalg_bounds* b) {
    return b != nullptr && b->value.exact ? 1 : 0;
}

const char* tcalg_bounds_regime(const tcalg_bounds* b) {
    return b ? b->regime.c_str() : "";
}

size_t tcalg_bounds_certificate_size(const tcalg_bounds* b) {
    return b ? b->value.certificate.factors.size() : 0;
}

tcalg_status tcalg_bounds_certificate_factor(const tcalg_bounds* b, size_t index,
                                             char** out) {
    return guarded([&] {
        if (b == nullptr || out == nullptr) fail_invalid("null argument");
        if (index >= b->value.certificate.factors.size())
            fail_invalid("certificate factor index out of range");
        *out = dup_string(format(b->value.certificate.factors[index]));
    });
}

tcalg_status tcalg_bounds_certificate_witness(const tcalg_bounds* b, char** monomial,
                                              char** coefficient) {
    return guarded([&] {
        if (b == nullptr || monomial == nullptr || coefficient == nullptr)
            fail_invalid("null argument");
        *monomial = dup_string(format_monomial(b->value.certificate.witness));
        *coefficient = dup_string(b->value.certificate.witness_coefficient.to_string());
    });
}

tcalg_status tcalg_bounds_verify(const tcalg_bounds* b) {
    return guarded([&] {
        if (b == nullptr) fail_invalid("null argument");
        verify_certificate(b->value.certificate);
    });
}

void tcalg_bounds_free(tcalg_bounds* b) { delete b; }

tcalg_status tcalg_cmd_bounds(int d, int m, int n, int r, tcalg_emit emit, char** out) {
    return command_result(cmd_bounds(d, m, n, r, to_emit(emit)), out);
}

tcalg_status tcalg_cmd_verify(const int* d_set, size_t d_count, int m_max, int n_max,
                              int r_max, size_t max_cells, tcalg_emit emit, char** out) {
    std::vector<int> ds;
    if (d_set != nullptr) ds.assign(d_set, d_set + d_count);
    return command_result(cmd_verify(ds, m_max, n_max, r_max, max_cells, to_emit(emit)),
                          out);
}

tcalg_status tcalg_cmd_normal_form(const char* expr, int d, int m, int n, int r,
                                   size_t max_word_len, tcalg_emit emit, char** out) {
    if (expr == nullptr) {
        g_last_error = "null expression";
        return TCALG_INVALID_ARGUMENT;
    }
    return command_result(
        cmd_normal_form(expr, d, m, n, r, max_word_len, to_emit(emit)), out);
}

tcalg_status tcalg_cmd_poincare(int d, int m, int n, int r, int check, tcalg_emit emit,
                                char** out) {
    return command_result(cmd_poincare(d, m, n, r, check != 0, to_emit(emit)), out);
}

tcalg_status tcalg_cmd_genfun(const char* bundle, int m, int n, int terms,
                              tcalg_emit emit, char** out) {
    if (bundle == nullptr) {
        g_last_error = "null bundle name";
        return TCALG_INVALID_ARGUMENT;
    }
    return command_result(cmd_genfun(bundle, m, n, terms, to_emit(emit)), out);
}

tcalg_status tcalg_cmd_oracle(int d, int m, int n, int r, int budget, tcalg_emit emit,
                              char** out) {
    return command_result(cmd_oracle(d, m, n, r, budget, to_emit(emit)), out);
}

}  // extern "C"
