// errors.hpp: exception types mapped to CLI exit codes.
#pragma once

#include <stdexcept>
#include <string>

namespace nlphase {

// bad scene / bad parameters -> exit 2
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// construction not representable at the requested resolution -> exit 3
struct ResolutionError : std::runtime_error {
    ResolutionError(const std::string& msg, double usable_eps)
        : std::runtime_error(msg), min_usable_eps(usable_eps) {}
    double min_usable_eps; // smallest eps the grid can carry, 0 if not applicable
};

enum ExitCode {
    kExitOk = 0,
    kExitConfig = 2,
    kExitResolution = 3,
    kExitAssertion = 4,
};

} // namespace nlphase
