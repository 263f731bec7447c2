#include "desp/models/flow_shop.hpp"

#include "desp/errors.hpp"
#include "desp/simulation.hpp"

namespace desp::models {

namespace {
enum : int {
    kArrival = 0,
    kMachine1Granted = 1,
    kMachine1Done = 2,
    kRobotGrantedToM2 = 3,
    kTransportToM2Done = 4,
    kMachine2Granted = 5,
    kMachine2Done = 6,
    kRobotGrantedOut = 7,
    kTransportOutDone = 8,
};
}  // namespace

FlowShopModel::FlowShopModel(Simulation& sim, const ParamSet& params)
    : Model(sim),
      m1_mean_(params.get_or("m1_mean", 10.0)),
      m2_mean_(params.get_or("m2_mean", 12.0)),
      transport_min_(params.get_or("transport_min", 4.0)),
      transport_max_(params.get_or("transport_max", 6.0)),
      interarrival_mean_(params.get_or("interarrival_mean", 12.5)),
      machine1_("machine1", 1, sim),
      machine2_("machine2", 1, sim),
      robot_("robot", 1, sim) {
    params.reject_unknown();
    if (m1_mean_ <= 0.0 || m2_mean_ <= 0.0 || interarrival_mean_ <= 0.0) {
        throw ConfigError("flowshop service and interarrival means must be positive");
    }
    if (transport_min_ < 0.0 || transport_min_ > transport_max_) {
        throw ConfigError("flowshop needs 0 <= transport_min <= transport_max");
    }
}

void FlowShopModel::execute_event(int code, Client& client) {
    const double now = sim_.now();
    switch (code) {
        case kArrival: {
            Client* next = sim_.new_client();
            sim_.schedule(kArrival, now + sim_.rng().exponential(interarrival_mean_), *next);
            machine1_.p(kMachine1Granted, client, 1);
            break;
        }
        case kMachine1Granted:
            sim_.schedule(kMachine1Done, now + sim_.rng().exponential(m1_mean_), client);
            break;
        case kMachine1Done:
            machine1_.v();
            robot_.p(kRobotGrantedToM2, client, 1);
            break;
        case kRobotGrantedToM2:
            sim_.schedule(kTransportToM2Done,
                          now + sim_.rng().uniform(transport_min_, transport_max_), client);
            break;
        case kTransportToM2Done:
            robot_.v();
            machine2_.p(kMachine2Granted, client, 1);
            break;
        case kMachine2Granted:
            sim_.schedule(kMachine2Done, now + sim_.rng().exponential(m2_mean_), client);
            break;
        case kMachine2Done:
            machine2_.v();
            robot_.p(kRobotGrantedOut, client, 1);
            break;
        case kRobotGrantedOut:
            sim_.schedule(kTransportOutDone,
                          now + sim_.rng().uniform(transport_min_, transport_max_), client);
            break;
        case kTransportOutDone:
            robot_.v();
            sim_.destroy_client(client);
            break;
        default:
            unknown_event(code);
    }
}

}  // namespace desp::models
