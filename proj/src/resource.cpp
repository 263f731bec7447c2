#include "desp/resource.hpp"

#include <algorithm>
#include <cassert>

#include "desp/client.hpp"
#include "desp/errors.hpp"
#include "desp/simulation.hpp"

namespace desp {

Resource::Resource(std::string name, int capacity, Simulation& sim)
    : name_(std::move(name)), capacity_(capacity), ccapacity_(capacity), sim_(&sim) {
    if (capacity < 1) {
        throw ConfigError("resource '" + name_ + "' needs capacity >= 1, got " +
                          std::to_string(capacity));
    }
    sim.register_resource(this);
}

Resource::~Resource() {
    sim_->unregister_resource(this);
}

bool Resource::queued_after(const WaitEntry& a, const WaitEntry& b) {
    if (a.priority != b.priority) {
        return a.priority < b.priority;  // larger priority first
    }
    return a.sequence > b.sequence;  // FIFO within a priority
}

void Resource::admit(int code, Client& client, double requested_at) {
    const double now = sim_->now();
    --ccapacity_;
    ++grants_;
    wait_sum_ += now - requested_at;
    in_flight_.push_back({client.id(), requested_at});
    sim_->schedule(code, now, client);
}

void Resource::p(int next_event_code, Client& client, int priority) {
    ++requests_;
    if (ccapacity_ > 0) {
        admit(next_event_code, client, sim_->now());
    } else {
        queue_.push_back({next_event_code, &client, priority, sim_->now(),
                          next_queue_sequence_++});
        std::push_heap(queue_.begin(), queue_.end(), queued_after);
    }
    assert(in_flight_.size() == static_cast<std::size_t>(in_service()));
}

void Resource::v() {
    if (in_flight_.empty()) {
        throw SimulationError("V() on resource '" + name_ +
                              "' with no client in service at time " +
                              std::to_string(sim_->now()));
    }
    const Grant done = in_flight_.front();
    in_flight_.pop_front();
    ++releases_;
    response_sum_ += sim_->now() - done.requested_at;
    ++ccapacity_;
    if (!queue_.empty()) {
        std::pop_heap(queue_.begin(), queue_.end(), queued_after);
        WaitEntry head = queue_.back();
        queue_.pop_back();
        admit(head.code, *head.client, head.enqueued_at);
    }
    assert(ccapacity_ <= capacity_);
    assert(in_flight_.size() == static_cast<std::size_t>(in_service()));
}

void Resource::reset_counters() {
    requests_ = 0;
    grants_ = 0;
    releases_ = 0;
    wait_sum_ = 0.0;
    response_sum_ = 0.0;
    queue_.clear();
    next_queue_sequence_ = 0;
    in_flight_.clear();
    ccapacity_ = capacity_;
}

ResourceSnapshot Resource::replication_snapshot() const {
    ResourceSnapshot snap;
    snap.resource = name_;
    snap.response_mean = releases_ > 0 ? response_sum_ / static_cast<double>(releases_) : 0.0;
    snap.wait_mean = grants_ > 0 ? wait_sum_ / static_cast<double>(grants_) : 0.0;
    snap.served = releases_;
    snap.in_service = static_cast<std::uint64_t>(in_service());
    snap.still_waiting = queue_.size();
    return snap;
}

bool Resource::holds(const Client& client) const {
    return std::any_of(in_flight_.begin(), in_flight_.end(),
                       [&](const Grant& g) { return g.client_id == client.id(); });
}

}  // namespace desp
