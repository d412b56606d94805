#pragma once

#include <stdexcept>
#include <string>

namespace odat {

// Error taxonomy mirrors the CLI exit codes: 2 config, 3 I/O, 4 numerical.
// Bad arguments (domain/dimension violations) count as config errors.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr int kExitConfig = 2;
inline constexpr int kExitIo = 3;
inline constexpr int kExitNumerical = 4;

}  // namespace odat
