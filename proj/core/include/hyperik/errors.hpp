#pragma once

#include <stdexcept>
#include <string>

namespace hyperik {

/// Invalid run or benchmark configuration (bad bounds, pop/iteration counts,
/// malformed config files). The CLI maps this to exit code 2.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace hyperik
