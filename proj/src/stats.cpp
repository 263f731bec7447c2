#include "desp/stats.hpp"

#include <cmath>

#include "desp/errors.hpp"

namespace desp {

namespace {

// t(0.975, df) for df = 1..30, four decimals.
constexpr std::array<double, 30> kStudentT975 = {
    12.7062, 4.3027, 3.1824, 2.7764, 2.5706, 2.4469, 2.3646, 2.3060,
    2.2622,  2.2281, 2.2010, 2.1788, 2.1604, 2.1448, 2.1314, 2.1199,
    2.1098,  2.1009, 2.0930, 2.0860, 2.0796, 2.0739, 2.0687, 2.0639,
    2.0595,  2.0555, 2.0518, 2.0484, 2.0452, 2.0423};

constexpr double kNormal975 = 1.96;

}  // namespace

std::string_view metric_name(Metric metric) {
    switch (metric) {
        case Metric::kResponseMean: return "mean_response_time";
        case Metric::kWaitMean: return "mean_wait_time";
        case Metric::kServed: return "clients_served";
        case Metric::kInService: return "clients_in_service";
        case Metric::kStillWaiting: return "clients_still_waiting";
    }
    return "unknown";
}

double metric_value(const ResourceSnapshot& snapshot, Metric metric) {
    switch (metric) {
        case Metric::kResponseMean: return snapshot.response_mean;
        case Metric::kWaitMean: return snapshot.wait_mean;
        case Metric::kServed: return static_cast<double>(snapshot.served);
        case Metric::kInService: return static_cast<double>(snapshot.in_service);
        case Metric::kStillWaiting: return static_cast<double>(snapshot.still_waiting);
    }
    return 0.0;
}

double student_t_975(std::size_t degrees_of_freedom) {
    if (degrees_of_freedom == 0) {
        throw SimulationError("Student-t quantile needs at least 1 degree of freedom");
    }
    if (degrees_of_freedom <= kStudentT975.size()) {
        return kStudentT975[degrees_of_freedom - 1];
    }
    return kNormal975;
}

AggregateStats aggregate(const std::vector<ReplicationStats>& samples) {
    if (samples.empty()) {
        throw SimulationError("cannot aggregate an empty replication set");
    }
    const std::size_t n = samples.size();
    const std::size_t n_resources = samples.front().size();
    for (const auto& sample : samples) {
        if (sample.size() != n_resources) {
            throw SimulationError("replication snapshots disagree on the resource list");
        }
    }

    AggregateStats out;
    out.replications = n;
    out.resources.resize(n_resources);
    for (std::size_t r = 0; r < n_resources; ++r) {
        ResourceAggregate& agg = out.resources[r];
        agg.resource = samples.front()[r].resource;
        for (std::size_t m = 0; m < kAllMetrics.size(); ++m) {
            double sum = 0.0;
            for (const auto& sample : samples) {
                sum += metric_value(sample[r], kAllMetrics[m]);
            }
            const double mean = sum / static_cast<double>(n);

            double stddev = 0.0;
            double halfwidth = 0.0;
            bool defined = false;
            if (n > 1) {
                double sq = 0.0;
                for (const auto& sample : samples) {
                    const double d = metric_value(sample[r], kAllMetrics[m]) - mean;
                    sq += d * d;
                }
                stddev = std::sqrt(sq / static_cast<double>(n - 1));
                halfwidth = student_t_975(n - 1) * stddev /
                            std::sqrt(static_cast<double>(n));
                defined = true;
            }
            agg.metrics[m] = {mean, stddev, halfwidth, defined};
        }
    }
    return out;
}

void ExperimentStats::init(std::span<Resource* const>) {
    snapshots_.clear();
    phase_ = Phase::kReady;
}

void ExperimentStats::init_replication(std::span<Resource* const> resources) {
    if (phase_ != Phase::kReady) {
        throw SimulationError("init_replication() outside the init/end_replication cycle");
    }
    for (Resource* resource : resources) {
        resource->reset_counters();
    }
    phase_ = Phase::kInReplication;
}

void ExperimentStats::end_replication(std::span<Resource* const> resources) {
    if (phase_ != Phase::kInReplication) {
        throw SimulationError("end_replication() without a matching init_replication()");
    }
    ReplicationStats snapshot;
    snapshot.reserve(resources.size());
    for (const Resource* resource : resources) {
        snapshot.push_back(resource->replication_snapshot());
    }
    snapshots_.push_back(std::move(snapshot));
    phase_ = Phase::kReady;
}

AggregateStats ExperimentStats::finalize() {
    if (phase_ != Phase::kReady || snapshots_.empty()) {
        throw SimulationError("finalize() before any completed replication");
    }
    AggregateStats result = aggregate(snapshots_);
    phase_ = Phase::kIdle;
    return result;
}

}  // namespace desp
