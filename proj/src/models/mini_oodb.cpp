#include "desp/models/mini_oodb.hpp"

#include <any>
#include <cmath>
#include <string>

#include "desp/client.hpp"
#include "desp/errors.hpp"
#include "desp/simulation.hpp"

namespace desp::models {

namespace {
enum : int {
    kInit = 0,
    kThinkDone = 1,
    kTxnAdmitted = 2,
    kLookupAdmitted = 3,
    kCpuGranted = 4,
    kCpuDone = 5,
    kBufferChecked = 6,
    kIoAdmitted = 7,
    kDiskGranted = 8,
    kDiskDone = 9,
};
}  // namespace

MiniOodbModel::MiniOodbModel(Simulation& sim, const ParamSet& params)
    : Model(sim),
      n_users_(params.get_int_or("n_users", 5)),
      think_mean_(params.get_or("think_mean", 2.0)),
      objects_per_txn_mean_(params.get_or("objects_per_txn_mean", 10.0)),
      buffer_hit_prob_(params.get_or("buffer_hit_prob", 0.7)),
      cpu_time_(params.get_or("cpu_time", 0.02)),
      io_time_(params.get_or("io_time", 0.1)),
      txn_manager_("txn_manager", 1, sim),
      object_manager_("object_manager", 1, sim),
      buffer_manager_("buffer_manager", 1, sim),
      io_subsystem_("io_subsystem", 1, sim),
      processor_("processor", 1, sim),
      disk_("disk", 1, sim) {
    params.reject_unknown();
    if (n_users_ < 1) {
        throw ConfigError("minioodb needs n_users >= 1");
    }
    if (buffer_hit_prob_ < 0.0 || buffer_hit_prob_ > 1.0) {
        throw ConfigError("minioodb buffer_hit_prob must lie in [0, 1], got " +
                          std::to_string(buffer_hit_prob_));
    }
    if (think_mean_ <= 0.0 || objects_per_txn_mean_ < 1.0) {
        throw ConfigError("minioodb needs think_mean > 0 and objects_per_txn_mean >= 1");
    }
    if (cpu_time_ < 0.0 || io_time_ < 0.0) {
        throw ConfigError("minioodb cpu_time and io_time must be nonnegative");
    }
}

MiniOodbModel::Txn& MiniOodbModel::txn(Client& client) const {
    return std::any_cast<Txn&>(client.payload());
}

// Geometric on {1, 2, ...} with the requested mean.
int MiniOodbModel::sample_objects_per_txn() {
    const double p = 1.0 / objects_per_txn_mean_;
    if (p >= 1.0) {
        return 1;
    }
    const double u = sim_.rng().uniform01();
    const int k = 1 + static_cast<int>(std::floor(std::log(1.0 - u) / std::log(1.0 - p)));
    return k < 1 ? 1 : k;
}

void MiniOodbModel::finish_object_access(Client& client) {
    Txn& t = txn(client);
    --t.remaining_objects;
    if (t.remaining_objects > 0) {
        object_manager_.p(kLookupAdmitted, client, 1);
    } else {
        txn_manager_.v();
        sim_.schedule(kThinkDone, sim_.now() + sim_.rng().exponential(think_mean_), client);
    }
}

void MiniOodbModel::execute_event(int code, Client& client) {
    const double now = sim_.now();
    switch (code) {
        case kInit:
            for (int i = 0; i < n_users_; ++i) {
                Client* c = (i == 0) ? &client : sim_.new_client();
                c->payload() = Txn{};
                sim_.schedule(kThinkDone, now + sim_.rng().exponential(think_mean_), *c);
            }
            break;
        case kThinkDone:
            txn_manager_.p(kTxnAdmitted, client, 1);
            break;
        case kTxnAdmitted:
            txn(client).remaining_objects = sample_objects_per_txn();
            object_manager_.p(kLookupAdmitted, client, 1);
            break;
        case kLookupAdmitted:
            processor_.p(kCpuGranted, client, 1);
            break;
        case kCpuGranted:
            sim_.schedule(kCpuDone, now + cpu_time_, client);
            break;
        case kCpuDone:
            processor_.v();
            object_manager_.v();
            buffer_manager_.p(kBufferChecked, client, 1);
            break;
        case kBufferChecked: {
            const bool hit = sim_.rng().uniform01() < buffer_hit_prob_;
            buffer_manager_.v();
            if (hit) {
                finish_object_access(client);
            } else {
                io_subsystem_.p(kIoAdmitted, client, 1);
            }
            break;
        }
        case kIoAdmitted:
            disk_.p(kDiskGranted, client, 1);
            break;
        case kDiskGranted:
            sim_.schedule(kDiskDone, now + io_time_, client);
            break;
        case kDiskDone:
            disk_.v();
            io_subsystem_.v();
            finish_object_access(client);
            break;
        default:
            unknown_event(code);
    }
}

}  // namespace desp::models
