#ifndef DESP_ERRORS_HPP
#define DESP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace desp {

// Invalid model or run configuration: bad parameter value, seed out of
// range, unknown parameter key. Recoverable by fixing the configuration.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Broken runtime invariant: scheduling in the past, releasing an idle
// resource, dispatching an unknown event code, lifecycle calls out of
// order. Always indicates a bug in the model or in calling code.
class SimulationError : public std::runtime_error {
public:
    explicit SimulationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace desp

#endif
