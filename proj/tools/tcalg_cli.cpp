// SPDX-License-Identifier: Apache-2.0
//
// Command-line front-end. Everything goes through the public C API so the
// CLI exercises exactly what shared-library consumers get.

#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <tcalg/tcalg.h>

namespace {

int print_result(tcalg_status status, char* body) {
    if (body != nullptr) {
        std::fputs(body, status == TCALG_OK ? stdout : stderr);
        tcalg_string_free(body);
    } else if (status != TCALG_OK) {
        std::fprintf(stderr, "error: %s\n", tcalg_last_error());
    }
    return static_cast<int>(status);
}

tcalg_emit parse_emit(const std::string& emit) {
    return emit == "json" ? TCALG_EMIT_JSON : TCALG_EMIT_TEXT;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tcalg: exact sequential parametrized topological complexity "
                 "of obstacle-avoidance bundles"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string("tcalg ") + tcalg_version());

    int d = 3, m = 2, n = 1, r = 2;
    std::string emit = "text";
    auto add_params = [&](CLI::App* cmd, bool with_r = true) {
        cmd->add_option("--d", d, "dimension of the ambient Euclidean space")->required();
        cmd->add_option("--m", m, "number of obstacles")->required();
        cmd->add_option("--n", n, "number of robots")->required();
        if (with_r) cmd->add_option("--r", r, "number of prescribed states")->required();
        cmd->add_option("--emit", emit, "output format: text|json")
            ->check(CLI::IsMember({"text", "json"}));
    };

    auto* bounds = app.add_subcommand(
        "bounds", "certified lower/upper complexity bounds for one parameter set");
    add_params(bounds);

    auto* verify = app.add_subcommand(
        "verify", "sweep a parameter grid and re-verify every certificate");
    std::vector<int> d_set{2, 3, 4, 5};
    int m_max = 4, n_max = 3, r_max = 4;
    verify->add_option("--d-set", d_set, "dimensions to sweep")->delimiter(',');
    verify->add_option("--m-max", m_max, "largest obstacle count (from 2)");
    verify->add_option("--n-max", n_max, "largest robot count (from 1)");
    verify->add_option("--r-max", r_max, "largest state count (from 2)");
    verify->add_option("--emit", emit, "output format: text|json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* normal_form = app.add_subcommand(
        "normal-form", "reduce a class expression to the canonical basis");
    std::string expression;
    std::size_t max_word_len = 64;
    normal_form->add_option("expression", expression, "expression, e.g. \"w(1,3)*w(2,3)\"")
        ->required();
    add_params(normal_form);
    normal_form->add_option("--max-word-len", max_word_len,
                            "straightening guard (generators per word)");

    auto* poincare = app.add_subcommand(
        "poincare", "Poincare polynomial of the r-fold fiberwise product space");
    bool check = false;
    add_params(poincare);
    poincare->add_flag("--check", check, "cross-check against basis enumeration");

    auto* genfun = app.add_subcommand(
        "genfun", "TC-generating function of a registered bundle family");
    std::string bundle;
    int terms = 8;
    genfun->add_option("bundle", bundle, "fn-odd | fn-planar | hopf | fn-fiber")
        ->required();
    genfun->add_option("--m", m, "number of obstacles (fn-odd, fn-planar)");
    genfun->add_option("--n", n, "number of robots (fn-odd, fn-planar, fn-fiber)");
    genfun->add_option("--terms", terms, "how many series coefficients to print");
    genfun->add_option("--emit", emit, "output format: text|json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* oracle = app.add_subcommand(
        "oracle", "brute-force search for the longest nonzero kernel-class product");
    int budget = 12;
    add_params(oracle);
    oracle->add_option("--budget", budget, "maximum number of factors to try");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    char* body = nullptr;
    tcalg_status status = TCALG_OK;
    if (bounds->parsed()) {
        status = tcalg_cmd_bounds(d, m, n, r, parse_emit(emit), &body);
    } else if (verify->parsed()) {
        status = tcalg_cmd_verify(d_set.data(), d_set.size(), m_max, n_max, r_max, 0,
                                  parse_emit(emit), &body);
    } else if (normal_form->parsed()) {
        status = tcalg_cmd_normal_form(expression.c_str(), d, m, n, r, max_word_len,
                                       parse_emit(emit), &body);
    } else if (poincare->parsed()) {
        status = tcalg_cmd_poincare(d, m, n, r, check ? 1 : 0, parse_emit(emit), &body);
    } else if (genfun->parsed()) {
        status = tcalg_cmd_genfun(bundle.c_str(), m, n, terms, parse_emit(emit), &body);
    } else if (oracle->parsed()) {
        status = tcalg_cmd_oracle(d, m, n, r, budget, parse_emit(emit), &body);
    }
    return print_result(status, body);
}
