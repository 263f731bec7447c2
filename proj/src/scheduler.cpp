#include "desp/scheduler.hpp"

#include <algorithm>

namespace desp {

bool Scheduler::later(const EventRecord& a, const EventRecord& b) {
    if (a.date != b.date) {
        return a.date > b.date;
    }
    return a.sequence > b.sequence;
}

void Scheduler::schedule(int code, double date, Client* client) {
    heap_.push_back({code, date, client, next_sequence_++});
    std::push_heap(heap_.begin(), heap_.end(), later);
}

std::optional<EventRecord> Scheduler::pop() {
    if (heap_.empty()) {
        return std::nullopt;
    }
    std::pop_heap(heap_.begin(), heap_.end(), later);
    EventRecord record = heap_.back();
    heap_.pop_back();
    return record;
}

const EventRecord* Scheduler::peek() const {
    return heap_.empty() ? nullptr : &heap_.front();
}

void Scheduler::purge() {
    heap_.clear();
    next_sequence_ = 0;
}

}  // namespace desp
