#ifndef DESP_MODELS_MINI_OODB_HPP
#define DESP_MODELS_MINI_OODB_HPP

#include "desp/model.hpp"
#include "desp/resource.hpp"

namespace desp::models {

/**
 * Four-stage object database pipeline. Users think, then submit a
 * transaction to the transaction manager; the transaction touches a
 * geometric number of objects. Each object access runs through the object
 * manager (a CPU slice on the processor), then the buffer manager; on a
 * buffer miss (probability 1-h) the I/O subsystem performs a disk access.
 *
 * Active resources: txn_manager, object_manager, buffer_manager,
 * io_subsystem. Passive: processor, disk. Clients are the circulating user
 * transactions carrying a remaining-objects counter.
 *
 * Parameters: n_users (5), think_mean (2), objects_per_txn_mean (10),
 * buffer_hit_prob (0.7), cpu_time (0.02), io_time (0.1).
 */
class MiniOodbModel : public Model {
public:
    MiniOodbModel(Simulation& sim, const ParamSet& params);

    void execute_event(int code, Client& client) override;
    std::string_view name() const override { return "minioodb"; }

    const Resource& txn_manager() const { return txn_manager_; }
    const Resource& object_manager() const { return object_manager_; }
    const Resource& buffer_manager() const { return buffer_manager_; }
    const Resource& io_subsystem() const { return io_subsystem_; }
    const Resource& processor() const { return processor_; }
    const Resource& disk() const { return disk_; }

private:
    struct Txn {
        int remaining_objects = 0;
    };

    Txn& txn(Client& client) const;
    int sample_objects_per_txn();
    void finish_object_access(Client& client);

    int n_users_;
    double think_mean_;
    double objects_per_txn_mean_;
    double buffer_hit_prob_;
    double cpu_time_;
    double io_time_;

    Resource txn_manager_;
    Resource object_manager_;
    Resource buffer_manager_;
    Resource io_subsystem_;
    Resource processor_;
    Resource disk_;
};

}  // namespace desp::models

#endif
