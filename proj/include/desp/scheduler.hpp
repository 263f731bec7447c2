#ifndef DESP_SCHEDULER_HPP
#define DESP_SCHEDULER_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace desp {

class Client;

// A scheduled (event code, date, client) triple. The sequence number is a
// monotonic tiebreaker: same-date events dequeue in insertion order.
struct EventRecord {
    int code = 0;
    double date = 0.0;
    Client* client = nullptr;
    std::uint64_t sequence = 0;
};

// Future event list ordered by (date, sequence). Binary heap rather than a
// linked list; the FIFO tiebreaker preserves append-after-equal-keys
// insertion semantics.
class Scheduler {
public:
    void schedule(int code, double date, Client* client);

    // Removes and returns the earliest record, empty when none remain.
    std::optional<EventRecord> pop();

    // Earliest record without removing it; nullptr when empty.
    const EventRecord* peek() const;

    bool empty() const { return heap_.empty(); }
    std::size_t size() const { return heap_.size(); }

    // Drops every pending event and restarts the sequence counter.
    void purge();

private:
    static bool later(const EventRecord& a, const EventRecord& b);

    std::vector<EventRecord> heap_;
    std::uint64_t next_sequence_ = 0;
};

}  // namespace desp

#endif
