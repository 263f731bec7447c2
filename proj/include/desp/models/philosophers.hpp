#ifndef DESP_MODELS_PHILOSOPHERS_HPP
#define DESP_MODELS_PHILOSOPHERS_HPP

#include <memory>
#include <vector>

#include "desp/model.hpp"
#include "desp/resource.hpp"

namespace desp::models {

/**
 * Dining philosophers. n philosophers (active resources, capacity 1) share
 * n forks (passive resources, capacity 1); each cycles think -> sit ->
 * take one fork -> take the other -> eat -> release. One circulating
 * client per seat.
 *
 * Taking a fork lasts fork_pickup_time. Inside that window a philosopher
 * holds one fork while neighbours act, so the classic circular
 * hold-and-wait can form; the replication then ends in a drained scheduler
 * before the horizon. With fork_pickup_time=0 the two acquisitions
 * collapse onto one event date and no interleaving can close the cycle.
 * With ordered_forks=1 forks are taken lower index first, which imposes a
 * total order and precludes deadlock at any pickup time.
 *
 * Parameters: n_philosophers (4), eat_mean (5), think_mean (2),
 * fork_pickup_time (0.5), ordered_forks (0).
 */
class PhilosophersModel : public Model {
public:
    PhilosophersModel(Simulation& sim, const ParamSet& params);

    void execute_event(int code, Client& client) override;
    std::string_view name() const override { return "philosophers"; }

    int count() const { return n_; }
    const Resource& philosopher(int i) const { return *philosophers_[i]; }
    const Resource& fork(int i) const { return *forks_[i]; }

private:
    struct Seat {
        int index = 0;
    };

    Seat& seat(Client& client) const;
    Resource& first_fork(int seat_index);
    Resource& second_fork(int seat_index);

    int n_;
    double eat_mean_;
    double think_mean_;
    double fork_pickup_time_;
    bool ordered_forks_;

    std::vector<std::unique_ptr<Resource>> philosophers_;
    std::vector<std::unique_ptr<Resource>> forks_;
};

}  // namespace desp::models

#endif
