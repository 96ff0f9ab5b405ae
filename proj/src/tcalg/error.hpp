// SPDX-License-Identifier: Apache-2.0
#ifndef TCALG_ERROR_HPP
#define TCALG_ERROR_HPP

#include <stdexcept>
#include <string>

namespace tcalg {

// Failure classes; values double as the CLI / C API status codes.
enum class Errc {
    invalid_argument = 2,
    verification_failed = 3,
    resource_limit = 4,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail_invalid(const std::string& what) {
    throw Error(Errc::invalid_argument, what);
}

[[noreturn]] inline void fail_verification(const std::string& what) {
    throw Error(Errc::verification_failed, what);
}

[[noreturn]] inline void fail_resource(const std::string& what) {
    throw Error(Errc::resource_limit, what);
}

}  // namespace tcalg

#endif
