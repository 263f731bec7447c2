#include "desp/model.hpp"

#include <cmath>

#include "desp/errors.hpp"
#include "desp/simulation.hpp"

namespace desp {

double ParamSet::get_or(const std::string& key, double fallback) const {
    consumed_.insert(key);
    auto it = values_.find(key);
    return it == values_.end() ? fallback : it->second;
}

double ParamSet::require(const std::string& key) const {
    consumed_.insert(key);
    auto it = values_.find(key);
    if (it == values_.end()) {
        throw ConfigError("missing required parameter '" + key + "'");
    }
    return it->second;
}

int ParamSet::get_int_or(const std::string& key, int fallback) const {
    const double v = get_or(key, static_cast<double>(fallback));
    if (std::floor(v) != v) {
        throw ConfigError("parameter '" + key + "' must be an integer, got " +
                          std::to_string(v));
    }
    return static_cast<int>(v);
}

bool ParamSet::get_bool_or(const std::string& key, bool fallback) const {
    return get_or(key, fallback ? 1.0 : 0.0) != 0.0;
}

void ParamSet::reject_unknown() const {
    for (const auto& [key, value] : values_) {
        if (consumed_.count(key) == 0) {
            throw ConfigError("unknown parameter '" + key + "'");
        }
    }
}

void Model::unknown_event(int code) const {
    throw SimulationError("unknown event " + std::to_string(code) + " at time " +
                          std::to_string(sim_.now()) + " in model '" +
                          std::string(name()) + "'");
}

}  // namespace desp
