#include "desp/models/mm1.hpp"

#include <string>

#include "desp/errors.hpp"
#include "desp/simulation.hpp"

namespace desp::models {

namespace {
enum : int {
    kArrival = 0,
    kServiceStart = 1,
    kDeparture = 2,
};
}  // namespace

Mm1Model::Mm1Model(Simulation& sim, const ParamSet& params)
    : Model(sim),
      lambda_(params.require("lambda")),
      mu_(params.require("mu")),
      server_("server", 1, sim) {
    params.reject_unknown();
    if (lambda_ <= 0.0 || mu_ <= 0.0) {
        throw ConfigError("mm1 rates must be positive");
    }
    if (lambda_ >= mu_) {
        throw ConfigError("mm1 queue is unstable: lambda=" + std::to_string(lambda_) +
                          " >= mu=" + std::to_string(mu_));
    }
}

void Mm1Model::execute_event(int code, Client& client) {
    const double now = sim_.now();
    switch (code) {
        case kArrival: {
            Client* next = sim_.new_client();
            sim_.schedule(kArrival, now + sim_.rng().exponential(1.0 / lambda_), *next);
            server_.p(kServiceStart, client, 1);
            break;
        }
        case kServiceStart:
            sim_.schedule(kDeparture, now + sim_.rng().exponential(1.0 / mu_), client);
            break;
        case kDeparture:
            server_.v();
            sim_.destroy_client(client);
            break;
        default:
            unknown_event(code);
    }
}

}  // namespace desp::models
