#pragma once

#include <stdexcept>
#include <string>

namespace qlmass {

// Base for all library errors. The CLI maps these to exit code 1;
// numerical check failures are not errors and use exit code 2.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Point outside the admissible radial domain of a metric.
struct DomainError : Error {
    explicit DomainError(const std::string& what) : Error(what) {}
};

// Bad run configuration (unknown key, missing section, out-of-range size).
struct ConfigError : Error {
    explicit ConfigError(const std::string& what) : Error(what) {}
};

// Frame/gauge construction failed (non-spacelike H, degenerate projection).
struct GaugeError : Error {
    explicit GaugeError(const std::string& what) : Error(what) {}
};

// Frame handed to a contraction is not orthonormal.
struct ContractError : Error {
    explicit ContractError(const std::string& what) : Error(what) {}
};

// Isometric embedding does not exist or lost accuracy.
struct EmbedError : Error {
    explicit EmbedError(const std::string& what) : Error(what) {}
};

}  // namespace qlmass
