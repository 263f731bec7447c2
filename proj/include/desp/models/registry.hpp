#ifndef DESP_MODELS_REGISTRY_HPP
#define DESP_MODELS_REGISTRY_HPP

#include <memory>
#include <string>
#include <vector>

#include "desp/model.hpp"

namespace desp::models {

// Registered model names, in CLI listing order.
const std::vector<std::string>& model_names();

bool is_model_name(const std::string& name);

// Builds the named model against the given simulation. Throws ConfigError
// for an unknown name or invalid parameters.
std::unique_ptr<Model> make_model(const std::string& name, Simulation& sim,
                                  const ParamSet& params);

}  // namespace desp::models

#endif
