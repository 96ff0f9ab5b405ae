// SPDX-License-Identifier: Apache-2.0
#ifndef TCALG_REPORT_HPP
#define TCALG_REPORT_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace tcalg {

enum class Emit { Text, Json };

/// One self-describing document per invocation plus the process exit code
/// (0 ok, 2 usage/parameter error, 3 verification failure, 4 resource
/// limit). The same functions back both the C API and the CLI, so their
/// output is byte-identical across the two surfaces.
struct CommandOutput {
    int exit_code = 0;
    std::string body;
};

CommandOutput cmd_bounds(int d, int m, int n, int r, Emit emit);

// max_cells == 0 selects the TCALG_MAX_CELLS environment override, or the
// built-in default of 500 sweep cells.
CommandOutput cmd_verify(const std::vector<int>& d_set, int m_max, int n_max,
                         int r_max, std::size_t max_cells, Emit emit);

CommandOutput cmd_normal_form(std::string_view expr_text, int d, int m, int n, int r,
                              std::size_t max_word_len, Emit emit);

CommandOutput cmd_poincare(int d, int m, int n, int r, bool check, Emit emit);

CommandOutput cmd_genfun(std::string_view bundle, int m, int n, int terms, Emit emit);

CommandOutput cmd_oracle(int d, int m, int n, int r, int budget, Emit emit);

}  // namespace tcalg

#endif
