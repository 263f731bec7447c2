#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>
#include <vector>

#include "desp/errors.hpp"
#include "desp/model.hpp"
#include "desp/models/mm1.hpp"
#include "desp/report.hpp"
#include "desp/resource.hpp"
#include "desp/simulation.hpp"

using namespace desp;

namespace {

SimulationConfig basic_config(int replications = 1, double tmax = 1000.0) {
    SimulationConfig cfg;
    cfg.tstart = 0.0;
    cfg.tmax = tmax;
    cfg.seed = 1;
    cfg.replications = replications;
    return cfg;
}

// Routes every event to a std::function so tests can script behaviour.
class CallbackModel : public Model {
public:
    CallbackModel(Simulation& sim, std::function<void(int, Client&)> handler)
        : Model(sim), handler_(std::move(handler)) {}

    void execute_event(int code, Client& client) override { handler_(code, client); }
    std::string_view name() const override { return "callback"; }

    using Model::unknown_event;

private:
    std::function<void(int, Client&)> handler_;
};

}  // namespace

TEST_CASE("schedule then next_event returns the same record") {
    Simulation sim(basic_config());
    Client* c = sim.new_client();
    sim.schedule(1, sim.now(), *c);
    auto ev = sim.next_event();
    REQUIRE(ev.has_value());
    CHECK(ev->code == 1);
    CHECK(ev->date == 0.0);
    CHECK(ev->client == c);
}

TEST_CASE("events dequeue in date order") {
    Simulation sim(basic_config());
    Client* c = sim.new_client();
    sim.schedule(1, 5.0, *c);
    sim.schedule(2, 3.0, *c);
    sim.schedule(3, 7.0, *c);
    CHECK(sim.next_event()->date == 3.0);
    CHECK(sim.next_event()->date == 5.0);
    CHECK(sim.next_event()->date == 7.0);
    CHECK_FALSE(sim.next_event().has_value());
}

TEST_CASE("same-date events are FIFO") {
    Simulation sim(basic_config());
    Client* c = sim.new_client();
    for (int code = 0; code < 20; ++code) {
        sim.schedule(code, 4.0, *c);
    }
    for (int code = 0; code < 20; ++code) {
        CHECK(sim.next_event()->code == code);
    }
}

TEST_CASE("scheduling in the past is fatal") {
    Simulation sim(basic_config());
    Client* c = sim.new_client();
    sim.schedule(1, 10.0, *c);
    sim.next_event();  // clock now 10
    CHECK(sim.now() == 10.0);
    CHECK_THROWS_AS(sim.schedule(2, 9.999, *c), SimulationError);
    CHECK_NOTHROW(sim.schedule(2, 10.0, *c));
    const double nan = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(sim.schedule(3, nan, *c), SimulationError);
}

TEST_CASE("purge empties the scheduler and restarts sequences") {
    Simulation sim(basic_config());
    Client* c = sim.new_client();
    for (int i = 0; i < 5; ++i) {
        sim.schedule(i, 1.0 + i, *c);
    }
    sim.purge_scheduler();
    CHECK_FALSE(sim.next_event().has_value());
    sim.purge_scheduler();  // purging an empty scheduler is a no-op
    CHECK(sim.scheduler().empty());
    sim.schedule(9, 2.0, *c);
    CHECK(sim.next_event()->sequence == 0);
}

TEST_CASE("client registry tracks creation and destruction") {
    Simulation sim(basic_config());
    Client* a = sim.new_client();
    Client* b = sim.new_client();
    CHECK(a->id() != b->id());
    CHECK(sim.client_count() == 2);
    CHECK(a->created_at() == 0.0);

    sim.schedule(1, 42.0, *a);
    sim.next_event();
    Client* c = sim.new_client();
    CHECK(c->created_at() == 42.0);
    CHECK(sim.client_count() == 3);

    sim.destroy_client(*b);
    CHECK(sim.client_count() == 2);
    CHECK_THROWS_AS(sim.destroy_client(*b), SimulationError);

    sim.purge_client_list();
    CHECK(sim.client_count() == 0);
    Client* fresh = sim.new_client();
    CHECK(fresh->id() == 0);  // ids restart after a purge
}

TEST_CASE("dequeue order matches a naive sorted-list oracle") {
    Simulation sim(basic_config(1, 1e12));
    Client* c = sim.new_client();
    std::mt19937 gen(12345);
    std::uniform_real_distribution<double> date(0.0, 1000.0);

    struct Entry {
        double date;
        std::uint64_t seq;
    };
    std::vector<Entry> oracle;
    for (std::uint64_t i = 0; i < 10000; ++i) {
        // Coarse grid so duplicate dates actually occur.
        const double d = std::floor(date(gen) * 10.0) / 10.0;
        sim.schedule(0, d, *c);
        oracle.push_back({d, i});
    }
    std::stable_sort(oracle.begin(), oracle.end(),
                     [](const Entry& a, const Entry& b) { return a.date < b.date; });

    double last = -1.0;
    for (const Entry& expected : oracle) {
        auto ev = sim.next_event();
        REQUIRE(ev.has_value());
        CHECK(ev->date == expected.date);
        CHECK(ev->sequence == expected.seq);
        CHECK(ev->date >= last);  // clock never runs backwards
        last = ev->date;
    }
}

TEST_CASE("a model that schedules nothing ends every replication immediately") {
    Simulation sim(basic_config(3));
    Resource idle("idle", 1, sim);
    CallbackModel model(sim, [](int, Client&) {});
    RunResult result = sim.run(model);

    CHECK(result.stats.replications == 3);
    CHECK(result.replications.size() == 3);
    for (const auto& rep : result.replications) {
        REQUIRE(rep.size() == 1);
        CHECK(rep[0].served == 0);
        CHECK(rep[0].still_waiting == 0);
        CHECK(rep[0].in_service == 0);
    }
    for (const auto& end : result.ends) {
        CHECK(end.drained);
        CHECK(end.end_time == 0.0);
    }
}

TEST_CASE("replications start at t-start") {
    SimulationConfig cfg;
    cfg.tstart = 100.0;
    cfg.tmax = 200.0;
    cfg.seed = 1;
    cfg.replications = 2;
    Simulation sim(cfg);
    Resource idle("idle", 1, sim);
    std::vector<double> created;
    CallbackModel model(sim, [&](int code, Client& client) {
        if (code == 0) {
            created.push_back(client.created_at());
        }
    });
    const RunResult result = sim.run(model);
    CHECK(created == std::vector<double>{100.0, 100.0});
    CHECK(result.ends[0].end_time == 100.0);
}

TEST_CASE("unknown event codes abort with code and time") {
    Simulation sim(basic_config());
    CallbackModel model(sim, [&](int code, Client& client) {
        if (code == 0) {
            sim.schedule(42, 7.5, client);
        } else {
            model.unknown_event(code);
        }
    });
    try {
        sim.run(model);
        FAIL("expected SimulationError");
    } catch (const SimulationError& e) {
        const std::string what = e.what();
        CHECK(what.find("42") != std::string::npos);
        CHECK(what.find("7.5") != std::string::npos);
    }
}

TEST_CASE("events at or past the horizon never fire") {
    Simulation sim(basic_config(1, 100.0));
    std::vector<double> fired;
    CallbackModel model(sim, [&](int code, Client& client) {
        if (code == 0) {
            sim.schedule(1, 99.9999, client);
            sim.schedule(1, 100.0, client);  // exactly tmax: must not fire
            sim.schedule(1, 150.0, client);
        } else {
            fired.push_back(sim.now());
        }
    });
    RunResult result = sim.run(model);
    CHECK(fired == std::vector<double>{99.9999});
    CHECK(result.ends[0].end_time == 100.0);
    CHECK_FALSE(result.ends[0].drained);
}

TEST_CASE("crosswise resource waits drain the scheduler before the horizon") {
    // Two clients each hold one resource and request the other: classic
    // hold-and-wait. The scheduler drains and the replication ends early.
    Simulation sim(basic_config(1, 1000.0));
    Resource r1("r1", 1, sim);
    Resource r2("r2", 1, sim);
    CallbackModel model(sim, [&](int code, Client& client) {
        switch (code) {
            case 0: {
                Client* other = sim.new_client();
                r1.p(1, client, 1);
                r2.p(2, *other, 1);
                break;
            }
            case 1:
                sim.schedule(3, sim.now() + 1.0, client);
                break;
            case 2:
                sim.schedule(4, sim.now() + 1.0, client);
                break;
            case 3:
                r2.p(5, client, 1);  // r2 is held by the other client
                break;
            case 4:
                r1.p(5, client, 1);  // r1 is held by the first client
                break;
            case 5:
                FAIL("deadlocked clients must never advance");
                break;
        }
    });
    RunResult result = sim.run(model);
    CHECK(result.ends[0].drained);
    CHECK(result.ends[0].end_time == 1.0);
    CHECK(result.ends[0].end_time < 1000.0);
    CHECK(result.replications[0][0].still_waiting + result.replications[0][1].still_waiting == 2);
    CHECK(result.drained_replications() == 1);
}

TEST_CASE("identical configs give byte-identical reports") {
    const auto run_once = [] {
        SimulationConfig cfg = basic_config(5, 2000.0);
        cfg.seed = 4321;
        Simulation sim(cfg);
        ParamSet params;
        params.set("lambda", 0.05);
        params.set("mu", 0.1);
        models::Mm1Model model(sim, params);
        RunResult result = sim.run(model);
        return render_csv(result.stats, {"mm1", cfg.seed, cfg.replications});
    };
    CHECK(run_once() == run_once());
}

TEST_CASE("replications share one rng stream and are otherwise isolated") {
    ParamSet params;
    params.set("lambda", 0.05);
    params.set("mu", 0.1);

    SimulationConfig one = basic_config(1, 500.0);
    one.seed = 2024;
    Simulation sim_one(one);
    models::Mm1Model model_one(sim_one, params);
    RunResult first_only = sim_one.run(model_one);
    const std::uint64_t draws_in_rep1 = sim_one.rng().draws_emitted();

    SimulationConfig two = basic_config(2, 500.0);
    two.seed = 2024;
    Simulation sim_two(two);
    models::Mm1Model model_two(sim_two, params);
    RunResult both = sim_two.run(model_two);

    // Replication 1 is byte-identical between the two experiments.
    CHECK(both.replications[0][0].response_mean == first_only.replications[0][0].response_mean);
    CHECK(both.replications[0][0].served == first_only.replications[0][0].served);

    // Replication 2 equals a fresh run whose stream is fast-forwarded past
    // replication 1's draws.
    SimulationConfig ff = basic_config(1, 500.0);
    ff.seed = 2024;
    Simulation sim_ff(ff);
    models::Mm1Model model_ff(sim_ff, params);
    for (std::uint64_t i = 0; i < draws_in_rep1; ++i) {
        sim_ff.rng().next_u32();
    }
    RunResult second_only = sim_ff.run(model_ff);
    CHECK(second_only.replications[0][0].response_mean == both.replications[1][0].response_mean);
    CHECK(second_only.replications[0][0].wait_mean == both.replications[1][0].wait_mean);
    CHECK(second_only.replications[0][0].served == both.replications[1][0].served);
}

TEST_CASE("config invariants are enforced") {
    SimulationConfig bad = basic_config();
    bad.tmax = 0.0;  // tstart == tmax
    CHECK_THROWS_AS(Simulation{bad}, ConfigError);
    SimulationConfig none = basic_config(0);
    CHECK_THROWS_AS(Simulation{none}, ConfigError);
    SimulationConfig seed0 = basic_config();
    seed0.seed = 0;
    CHECK_THROWS_AS(Simulation{seed0}, ConfigError);
}
