#ifndef DESP_STATS_HPP
#define DESP_STATS_HPP

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "desp/resource.hpp"

namespace desp {

// One replication's snapshots, one entry per resource in registration order.
using ReplicationStats = std::vector<ResourceSnapshot>;

enum class Metric {
    kResponseMean = 0,
    kWaitMean,
    kServed,
    kInService,
    kStillWaiting,
};

inline constexpr std::array<Metric, 5> kAllMetrics = {
    Metric::kResponseMean, Metric::kWaitMean, Metric::kServed,
    Metric::kInService, Metric::kStillWaiting};

std::string_view metric_name(Metric metric);
double metric_value(const ResourceSnapshot& snapshot, Metric metric);

struct MetricAggregate {
    double mean = 0.0;
    double stddev = 0.0;        // sample stddev, n-1 divisor
    double ci_halfwidth = 0.0;  // 0 when the CI is undefined
    bool ci_defined = false;    // false for a single replication
};

struct ResourceAggregate {
    std::string resource;
    std::array<MetricAggregate, kAllMetrics.size()> metrics;
};

// Cross-replication means and 95% confidence intervals.
struct AggregateStats {
    std::size_t replications = 0;
    std::vector<ResourceAggregate> resources;
};

// Two-sided 95% Student-t quantile: 30-entry table, 1.96 beyond.
double student_t_975(std::size_t degrees_of_freedom);

// Equal-weight aggregation over replications: mean, sample stddev and
// t-based CI halfwidth per (resource, metric). Throws on an empty sample
// set or on snapshots with mismatched resource lists.
AggregateStats aggregate(const std::vector<ReplicationStats>& samples);

/**
 * Experiment statistics lifecycle:
 *
 *   init             clears collected snapshots (whole experiment)
 *   init_replication resets every resource's counters and queue
 *   end_replication  appends one snapshot per resource
 *   finalize         aggregates and returns to the idle state
 *
 * Out-of-order calls throw SimulationError. init() is always allowed and
 * starts a fresh experiment.
 */
class ExperimentStats {
public:
    void init(std::span<Resource* const> resources);
    void init_replication(std::span<Resource* const> resources);
    void end_replication(std::span<Resource* const> resources);
    AggregateStats finalize();

    const std::vector<ReplicationStats>& snapshots() const { return snapshots_; }

private:
    enum class Phase { kIdle, kReady, kInReplication };

    Phase phase_ = Phase::kIdle;
    std::vector<ReplicationStats> snapshots_;
};

}  // namespace desp

#endif
