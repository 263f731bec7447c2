#ifndef DESP_SIMULATION_HPP
#define DESP_SIMULATION_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "desp/client.hpp"
#include "desp/rng.hpp"
#include "desp/scheduler.hpp"
#include "desp/stats.hpp"

namespace desp {

class Model;
class Resource;

struct SimulationConfig {
    double tstart = 0.0;
    double tmax = 0.0;
    std::int64_t seed = 1;
    int replications = 1;
};

// How a replication ended: at the time horizon, or because the scheduler
// drained first (deadlock or a model that stopped feeding events).
struct ReplicationEnd {
    double end_time = 0.0;
    bool drained = false;
};

struct RunResult {
    AggregateStats stats;
    std::vector<ReplicationStats> replications;
    std::vector<ReplicationEnd> ends;

    std::size_t drained_replications() const;
};

/**
 * Simulation clock, event scheduler, client registry and replication loop.
 *
 * One instance owns one run: a single RNG stream (never reseeded between
 * replications, which keeps them independent), a clock, and the resources
 * its model registered. Strictly single-threaded; run independent instances
 * in parallel instead of sharing one.
 */
class Simulation {
public:
    explicit Simulation(const SimulationConfig& config);

    double now() const { return tnow_; }
    const SimulationConfig& config() const { return config_; }
    Gfsr& rng() { return rng_; }

    // Inserts an event; scheduling before the current clock time is a
    // model bug and throws.
    void schedule(int code, double date, Client& client);

    // Pops the earliest event and advances the clock to its date.
    std::optional<EventRecord> next_event();

    void purge_scheduler();
    const Scheduler& scheduler() const { return scheduler_; }

    Client* new_client();
    void destroy_client(Client& client);
    void purge_client_list();
    std::size_t client_count() const { return clients_.size(); }

    void register_resource(Resource* resource);
    void unregister_resource(Resource* resource);
    std::span<Resource* const> resources() const { return resources_; }

    // Runs the configured number of replications and aggregates. Events
    // fire strictly before tmax; a replication ends when the clock reaches
    // the horizon or the scheduler drains.
    RunResult run(Model& model);

private:
    SimulationConfig config_;
    double tnow_;
    Scheduler scheduler_;
    Gfsr rng_;
    std::vector<std::unique_ptr<Client>> clients_;
    std::uint64_t next_client_id_ = 0;
    std::vector<Resource*> resources_;
    ExperimentStats stats_;
};

}  // namespace desp

#endif
