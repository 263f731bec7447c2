#ifndef DESP_RESOURCE_HPP
#define DESP_RESOURCE_HPP

#include <cstddef>
#include <cstdint>
#include <deque>
#include <string>
#include <vector>

namespace desp {

class Client;
class Simulation;

// The five per-replication metrics reported for every resource.
struct ResourceSnapshot {
    std::string resource;
    double response_mean = 0.0;  // request -> release, averaged over releases
    double wait_mean = 0.0;      // request -> grant, averaged over grants
    std::uint64_t served = 0;    // completed releases
    std::uint64_t in_service = 0;
    std::uint64_t still_waiting = 0;  // queued at replication end
};

/**
 * Capacity-limited server with P/V reservation and a priority wait queue.
 *
 * P() grants immediately while free slots remain and schedules the caller's
 * next event at the current time; otherwise the (event, client, priority)
 * entry parks in the queue. Larger priority is served earlier, FIFO within
 * a priority. V() releases the longest-held grant, then hands the freed
 * slot to the queue head.
 *
 * Active resources are plain Resources whose events live in the owning
 * model; the statistics are identical for both kinds.
 */
class Resource {
public:
    // Registers itself with the simulation; the simulation must outlive it.
    Resource(std::string name, int capacity, Simulation& sim);
    ~Resource();
    Resource(const Resource&) = delete;
    Resource& operator=(const Resource&) = delete;

    void p(int next_event_code, Client& client, int priority);
    void v();

    // Zeroes every counter, empties the queue and restores full capacity.
    void reset_counters();

    ResourceSnapshot replication_snapshot() const;

    const std::string& name() const { return name_; }
    int capacity() const { return capacity_; }
    int free_slots() const { return ccapacity_; }
    int in_service() const { return capacity_ - ccapacity_; }
    std::size_t queue_length() const { return queue_.size(); }
    bool holds(const Client& client) const;

    std::uint64_t requests() const { return requests_; }
    std::uint64_t grants() const { return grants_; }
    std::uint64_t releases() const { return releases_; }
    double wait_time_sum() const { return wait_sum_; }
    double response_time_sum() const { return response_sum_; }

private:
    struct WaitEntry {
        int code;
        Client* client;
        int priority;
        double enqueued_at;
        std::uint64_t sequence;
    };
    // In-flight grants in grant order; V() always completes the front.
    struct Grant {
        std::uint64_t client_id;
        double requested_at;
    };

    static bool queued_after(const WaitEntry& a, const WaitEntry& b);
    void admit(int code, Client& client, double requested_at);

    std::string name_;
    int capacity_;
    int ccapacity_;
    Simulation* sim_;

    std::vector<WaitEntry> queue_;  // heap: priority desc, sequence asc
    std::uint64_t next_queue_sequence_ = 0;
    std::deque<Grant> in_flight_;

    std::uint64_t requests_ = 0;
    std::uint64_t grants_ = 0;
    std::uint64_t releases_ = 0;
    double wait_sum_ = 0.0;
    double response_sum_ = 0.0;
};

}  // namespace desp

#endif
