#include "desp/models/philosophers.hpp"

#include <any>
#include <string>

#include "desp/client.hpp"
#include "desp/errors.hpp"
#include "desp/simulation.hpp"

namespace desp::models {

namespace {
enum : int {
    kInit = 0,
    kThinkDone = 1,
    kSeated = 2,
    kFirstForkGranted = 3,
    kSecondForkRequest = 4,
    kSecondForkGranted = 5,
    kEatDone = 6,
};
}  // namespace

PhilosophersModel::PhilosophersModel(Simulation& sim, const ParamSet& params)
    : Model(sim),
      n_(params.get_int_or("n_philosophers", 4)),
      eat_mean_(params.get_or("eat_mean", 5.0)),
      think_mean_(params.get_or("think_mean", 2.0)),
      fork_pickup_time_(params.get_or("fork_pickup_time", 0.5)),
      ordered_forks_(params.get_bool_or("ordered_forks", false)) {
    params.reject_unknown();
    if (n_ < 2) {
        throw ConfigError("philosophers needs n_philosophers >= 2, got " +
                          std::to_string(n_));
    }
    if (eat_mean_ <= 0.0 || think_mean_ <= 0.0) {
        throw ConfigError("philosophers eat_mean and think_mean must be positive");
    }
    if (fork_pickup_time_ < 0.0) {
        throw ConfigError("philosophers fork_pickup_time must be nonnegative");
    }
    philosophers_.reserve(static_cast<std::size_t>(n_));
    forks_.reserve(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) {
        philosophers_.push_back(std::make_unique<Resource>(
            "philosopher" + std::to_string(i), 1, sim));
    }
    for (int i = 0; i < n_; ++i) {
        forks_.push_back(std::make_unique<Resource>("fork" + std::to_string(i), 1, sim));
    }
}

PhilosophersModel::Seat& PhilosophersModel::seat(Client& client) const {
    return std::any_cast<Seat&>(client.payload());
}

// Seat i eats with forks i and (i+1) mod n. "First" is the left fork, or
// the lower index when acquisition is ordered.
Resource& PhilosophersModel::first_fork(int seat_index) {
    const int left = seat_index;
    const int right = (seat_index + 1) % n_;
    return *forks_[ordered_forks_ ? std::min(left, right) : left];
}

Resource& PhilosophersModel::second_fork(int seat_index) {
    const int left = seat_index;
    const int right = (seat_index + 1) % n_;
    return *forks_[ordered_forks_ ? std::max(left, right) : right];
}

void PhilosophersModel::execute_event(int code, Client& client) {
    const double now = sim_.now();
    switch (code) {
        case kInit:
            for (int i = 0; i < n_; ++i) {
                Client* c = (i == 0) ? &client : sim_.new_client();
                c->payload() = Seat{i};
                sim_.schedule(kThinkDone, now + sim_.rng().exponential(think_mean_), *c);
            }
            break;
        case kThinkDone:
            philosophers_[seat(client).index]->p(kSeated, client, 1);
            break;
        case kSeated:
            first_fork(seat(client).index).p(kFirstForkGranted, client, 1);
            break;
        case kFirstForkGranted:
            // Picking the fork up takes a moment; holding one fork inside
            // this window while the neighbour grabs the other is what lets
            // the circular wait close.
            sim_.schedule(kSecondForkRequest, now + fork_pickup_time_, client);
            break;
        case kSecondForkRequest:
            second_fork(seat(client).index).p(kSecondForkGranted, client, 1);
            break;
        case kSecondForkGranted: {
            const int i = seat(client).index;
            if (!first_fork(i).holds(client) || !second_fork(i).holds(client)) {
                throw SimulationError("philosopher " + std::to_string(i) +
                                      " started eating without both forks at time " +
                                      std::to_string(now));
            }
            sim_.schedule(kEatDone, now + sim_.rng().exponential(eat_mean_), client);
            break;
        }
        case kEatDone: {
            const int i = seat(client).index;
            first_fork(i).v();
            second_fork(i).v();
            philosophers_[i]->v();
            sim_.schedule(kThinkDone, now + sim_.rng().exponential(think_mean_), client);
            break;
        }
        default:
            unknown_event(code);
    }
}

}  // namespace desp::models
