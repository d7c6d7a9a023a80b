#pragma once

#include <stdexcept>
#include <string>

namespace spinpair {

// Invalid physical input or violated invariant (bad norm, non-Hermitian
// operator, illegal fermionic action, ...).  The CLI maps this to exit 3.
struct PhysicsError : std::runtime_error {
    explicit PhysicsError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed configuration or file schema.  CLI exit 2.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Filesystem failures (missing input, unwritable output).  CLI exit 4.
struct IoError : std::runtime_error {
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace spinpair
