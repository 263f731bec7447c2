#ifndef DESP_MODELS_MM1_HPP
#define DESP_MODELS_MM1_HPP

#include "desp/model.hpp"
#include "desp/resource.hpp"

namespace desp::models {

// Single M/M/1 station used for analytic validation: Poisson arrivals at
// rate lambda, one exponential server at rate mu, lambda < mu. Expected
// sojourn time is 1/(mu - lambda), expected queue wait rho/(mu - lambda).
class Mm1Model : public Model {
public:
    Mm1Model(Simulation& sim, const ParamSet& params);

    void execute_event(int code, Client& client) override;
    std::string_view name() const override { return "mm1"; }

    const Resource& server() const { return server_; }

private:
    double lambda_;
    double mu_;
    Resource server_;
};

}  // namespace desp::models

#endif
