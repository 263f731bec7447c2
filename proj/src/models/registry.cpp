#include "desp/models/registry.hpp"

#include <algorithm>

#include "desp/errors.hpp"
#include "desp/models/flow_shop.hpp"
#include "desp/models/mini_oodb.hpp"
#include "desp/models/mm1.hpp"
#include "desp/models/philosophers.hpp"

namespace desp::models {

const std::vector<std::string>& model_names() {
    static const std::vector<std::string> names = {"flowshop", "philosophers",
                                                   "mm1", "minioodb"};
    return names;
}

bool is_model_name(const std::string& name) {
    const auto& names = model_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

std::unique_ptr<Model> make_model(const std::string& name, Simulation& sim,
                                  const ParamSet& params) {
    if (name == "flowshop") {
        return std::make_unique<FlowShopModel>(sim, params);
    }
    if (name == "philosophers") {
        return std::make_unique<PhilosophersModel>(sim, params);
    }
    if (name == "mm1") {
        return std::make_unique<Mm1Model>(sim, params);
    }
    if (name == "minioodb") {
        return std::make_unique<MiniOodbModel>(sim, params);
    }
    std::string known;
    for (const auto& n : model_names()) {
        known += known.empty() ? n : ", " + n;
    }
    throw ConfigError("unknown model '" + name + "' (known models: " + known + ")");
}

}  // namespace desp::models
