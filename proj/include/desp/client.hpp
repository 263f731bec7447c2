#ifndef DESP_CLIENT_HPP
#define DESP_CLIENT_HPP

#include <any>
#include <cstddef>
#include <cstdint>

namespace desp {

// Passive entity travelling through the resource network. Models attach
// whatever payload they need (loop counters, operating times...); the
// kernel never interprets it.
class Client {
public:
    Client(std::uint64_t id, double created_at)
        : id_(id), created_at_(created_at) {}

    std::uint64_t id() const { return id_; }
    double created_at() const { return created_at_; }

    std::any& payload() { return payload_; }
    const std::any& payload() const { return payload_; }

private:
    friend class Simulation;

    std::uint64_t id_;
    double created_at_;
    std::any payload_;
    std::size_t slot_ = 0;  // registry index, maintained by Simulation
};

}  // namespace desp

#endif
