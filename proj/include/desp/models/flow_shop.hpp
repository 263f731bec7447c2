#ifndef DESP_MODELS_FLOW_SHOP_HPP
#define DESP_MODELS_FLOW_SHOP_HPP

#include "desp/model.hpp"
#include "desp/resource.hpp"

namespace desp::models {

/**
 * Two-machine flow shop with a shared transport robot.
 *
 * Products arrive in an open Poisson stream, are machined on machine #1
 * (exponential service), carried by the robot to machine #2 (uniform
 * transport time), machined again, then carried out of the system by the
 * same robot. Machines release at service end; the robot is held for the
 * duration of each transport.
 *
 * Parameters: m1_mean (10), m2_mean (12), transport_min (4),
 * transport_max (6), interarrival_mean (12.5). All capacities are 1.
 */
class FlowShopModel : public Model {
public:
    FlowShopModel(Simulation& sim, const ParamSet& params);

    void execute_event(int code, Client& client) override;
    std::string_view name() const override { return "flowshop"; }

    const Resource& machine1() const { return machine1_; }
    const Resource& machine2() const { return machine2_; }
    const Resource& robot() const { return robot_; }

private:
    double m1_mean_;
    double m2_mean_;
    double transport_min_;
    double transport_max_;
    double interarrival_mean_;

    Resource machine1_;
    Resource machine2_;
    Resource robot_;
};

}  // namespace desp::models

#endif
