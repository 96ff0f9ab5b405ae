// SPDX-License-Identifier: Apache-2.0
#ifndef TCALG_VERSION_HPP
#define TCALG_VERSION_HPP

namespace tcalg {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace tcalg

#endif
