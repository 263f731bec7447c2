#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <string>

#include "desp/errors.hpp"
#include "desp/models/registry.hpp"
#include "desp/report.hpp"
#include "desp/rng_fixtures.hpp"
#include "desp/simulation.hpp"

namespace py = pybind11;

namespace {

py::dict run_model(const std::string& model_name, std::int64_t seed,
                   int replications, double t_end, double t_start,
                   const std::map<std::string, double>& params) {
    desp::SimulationConfig config;
    config.tstart = t_start;
    config.tmax = t_end;
    config.seed = seed;
    config.replications = replications;

    desp::Simulation sim(config);
    desp::ParamSet param_set{std::map<std::string, double>(params)};
    auto model = desp::models::make_model(model_name, sim, param_set);
    const desp::RunResult result = sim.run(*model);

    py::list resources;
    for (const auto& resource : result.stats.resources) {
        py::dict metrics;
        for (std::size_t m = 0; m < desp::kAllMetrics.size(); ++m) {
            const desp::MetricAggregate& agg = resource.metrics[m];
            py::dict entry;
            entry["mean"] = agg.mean;
            entry["stddev"] = agg.stddev;
            entry["ci_halfwidth"] = agg.ci_halfwidth;
            entry["ci_defined"] = agg.ci_defined;
            metrics[py::str(std::string(desp::metric_name(desp::kAllMetrics[m])))] =
                entry;
        }
        py::dict row;
        row["resource"] = resource.resource;
        row["metrics"] = metrics;
        resources.append(row);
    }

    py::dict out;
    out["model"] = model_name;
    out["seed"] = seed;
    out["replications"] = replications;
    out["drained_replications"] = result.drained_replications();
    out["resources"] = resources;
    return out;
}

std::string run_model_csv(const std::string& model_name, std::int64_t seed,
                          int replications, double t_end, double t_start,
                          const std::map<std::string, double>& params) {
    desp::SimulationConfig config;
    config.tstart = t_start;
    config.tmax = t_end;
    config.seed = seed;
    config.replications = replications;

    desp::Simulation sim(config);
    desp::ParamSet param_set{std::map<std::string, double>(params)};
    auto model = desp::models::make_model(model_name, sim, param_set);
    const desp::RunResult result = sim.run(*model);
    return desp::render_csv(result.stats, {model_name, seed, replications});
}

}  // namespace

PYBIND11_MODULE(despsim, m) {
    m.doc() = "Discrete-event random simulation engine (resource view): "
              "seeded GFSR randomness, P/V resources, replication statistics.";

    py::register_exception<desp::ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<desp::SimulationError>(m, "SimulationError",
                                                  PyExc_RuntimeError);

    py::class_<desp::Gfsr>(m, "Gfsr",
                           "Seeded feedback shift register generator; identical "
                           "seeds give identical streams.")
        .def(py::init<std::int64_t>(), py::arg("seed"))
        .def("next_u32", &desp::Gfsr::next_u32)
        .def("uniform01", &desp::Gfsr::uniform01)
        .def("uniform", &desp::Gfsr::uniform, py::arg("a"), py::arg("b"))
        .def("exponential", &desp::Gfsr::exponential, py::arg("mean"))
        .def_property_readonly("draws_emitted", &desp::Gfsr::draws_emitted);

    m.def("model_names", [] { return desp::models::model_names(); },
          "Names accepted by run().");

    m.def("run", &run_model, py::arg("model"), py::kw_only(), py::arg("seed"),
          py::arg("replications"), py::arg("t_end"), py::arg("t_start") = 0.0,
          py::arg("params") = std::map<std::string, double>{},
          "Run a model and return cross-replication statistics.");

    m.def("run_csv", &run_model_csv, py::arg("model"), py::kw_only(),
          py::arg("seed"), py::arg("replications"), py::arg("t_end"),
          py::arg("t_start") = 0.0,
          py::arg("params") = std::map<std::string, double>{},
          "Run a model and return the csv report.");

    m.def("verify_rng_fixtures",
          [] { return desp::verify_rng_fixtures().empty(); },
          "Replay the golden conformance triples; True when they all match.");
}
