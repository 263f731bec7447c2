#include "desp/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "desp/errors.hpp"
#include "desp/model.hpp"
#include "desp/resource.hpp"

namespace desp {

std::size_t RunResult::drained_replications() const {
    return static_cast<std::size_t>(
        std::count_if(ends.begin(), ends.end(),
                      [](const ReplicationEnd& e) { return e.drained; }));
}

Simulation::Simulation(const SimulationConfig& config)
    : config_(config), tnow_(config.tstart), rng_(config.seed) {
    if (!(config.tstart < config.tmax)) {
        throw ConfigError("simulation needs tstart < tmax, got tstart=" +
                          std::to_string(config.tstart) + " tmax=" +
                          std::to_string(config.tmax));
    }
    if (config.replications < 1) {
        throw ConfigError("replication count must be >= 1, got " +
                          std::to_string(config.replications));
    }
}

void Simulation::schedule(int code, double date, Client& client) {
    if (!std::isfinite(date) || date < tnow_) {
        throw SimulationError("event " + std::to_string(code) +
                              " scheduled in the past: date " + std::to_string(date) +
                              " < now " + std::to_string(tnow_));
    }
    scheduler_.schedule(code, date, &client);
}

std::optional<EventRecord> Simulation::next_event() {
    std::optional<EventRecord> record = scheduler_.pop();
    if (record) {
        tnow_ = record->date;
    }
    return record;
}

void Simulation::purge_scheduler() {
    scheduler_.purge();
}

Client* Simulation::new_client() {
    auto client = std::make_unique<Client>(next_client_id_++, tnow_);
    client->slot_ = clients_.size();
    clients_.push_back(std::move(client));
    return clients_.back().get();
}

void Simulation::destroy_client(Client& client) {
    const std::size_t slot = client.slot_;
    if (slot >= clients_.size() || clients_[slot].get() != &client) {
        throw SimulationError("destroy_client() on an unregistered client");
    }
    if (slot + 1 != clients_.size()) {
        std::swap(clients_[slot], clients_.back());
        clients_[slot]->slot_ = slot;
    }
    clients_.pop_back();
}

void Simulation::purge_client_list() {
    clients_.clear();
    next_client_id_ = 0;
}

void Simulation::register_resource(Resource* resource) {
    resources_.push_back(resource);
}

void Simulation::unregister_resource(Resource* resource) {
    std::erase(resources_, resource);
}

RunResult Simulation::run(Model& model) {
    RunResult result;
    result.replications.reserve(static_cast<std::size_t>(config_.replications));
    result.ends.reserve(static_cast<std::size_t>(config_.replications));

    stats_.init(resources_);
    for (int rep = 0; rep < config_.replications; ++rep) {
        tnow_ = config_.tstart;
        purge_scheduler();
        stats_.init_replication(resources_);

        Client* first = new_client();
        model.execute_event(0, *first);

        bool drained = true;
        while (!scheduler_.empty()) {
            // Events fire strictly before the horizon; the first event at
            // or past tmax ends the replication unexecuted.
            if (scheduler_.peek()->date >= config_.tmax) {
                tnow_ = config_.tmax;
                drained = false;
                break;
            }
            const EventRecord record = *scheduler_.pop();
            tnow_ = record.date;
            model.execute_event(record.code, *record.client);
        }

        stats_.end_replication(resources_);
        result.replications.push_back(stats_.snapshots().back());
        result.ends.push_back({tnow_, drained});
        purge_client_list();
    }
    result.stats = stats_.finalize();
    return result;
}

}  // namespace desp
