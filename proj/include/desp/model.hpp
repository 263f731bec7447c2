#ifndef DESP_MODEL_HPP
#define DESP_MODEL_HPP

#include <map>
#include <set>
#include <string>
#include <string_view>

namespace desp {

class Client;
class Simulation;

// Key=value model parameters. Getters record which keys were read so a
// model can reject mistyped keys once construction is done.
class ParamSet {
public:
    ParamSet() = default;
    explicit ParamSet(std::map<std::string, double> values)
        : values_(std::move(values)) {}

    void set(const std::string& key, double value) { values_[key] = value; }
    bool has(const std::string& key) const { return values_.count(key) > 0; }

    double get_or(const std::string& key, double fallback) const;
    double require(const std::string& key) const;
    int get_int_or(const std::string& key, int fallback) const;
    bool get_bool_or(const std::string& key, bool fallback) const;

    // Throws ConfigError if any key was never read by a getter.
    void reject_unknown() const;

private:
    std::map<std::string, double> values_;
    mutable std::set<std::string> consumed_;
};

/**
 * Event dispatcher contract. A model owns its resources (registering them
 * with the simulation at construction) and maps integer event codes to
 * handlers. Code 0 is the replication's mandatory initial event; the kernel
 * fires it once per replication with a freshly created client.
 */
class Model {
public:
    explicit Model(Simulation& sim) : sim_(sim) {}
    virtual ~Model() = default;
    Model(const Model&) = delete;
    Model& operator=(const Model&) = delete;

    virtual void execute_event(int code, Client& client) = 0;
    virtual std::string_view name() const = 0;

protected:
    [[noreturn]] void unknown_event(int code) const;

    Simulation& sim_;
};

}  // namespace desp

#endif
