#include "desp/report.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "desp/errors.hpp"

namespace desp {

namespace {

const char* note_for(const MetricAggregate& m) {
    return m.ci_defined ? "" : "ci_undefined";
}

}  // namespace

OutputFormat parse_format(const std::string& text) {
    if (text == "text") return OutputFormat::kText;
    if (text == "csv") return OutputFormat::kCsv;
    if (text == "json") return OutputFormat::kJson;
    throw ConfigError("unknown output format '" + text + "' (use text, csv or json)");
}

std::string format_real(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", value);
    return buf;
}

std::string render_text(const AggregateStats& stats, const ReportHeader& header) {
    std::ostringstream out;
    out << "*** SIMULATION STATISTICS ***\n";
    out << "model: " << header.model << "  replications: " << header.replications
        << "  seed: " << header.seed << "\n";
    for (const auto& resource : stats.resources) {
        out << "\n" << resource.resource << "\n";
        for (std::size_t m = 0; m < kAllMetrics.size(); ++m) {
            const MetricAggregate& agg = resource.metrics[m];
            out << "  " << metric_name(kAllMetrics[m]) << ": "
                << format_real(agg.mean);
            if (agg.ci_defined) {
                out << " +/- " << format_real(agg.ci_halfwidth) << " (95% CI)";
            } else {
                out << " (CI undefined: single replication)";
            }
            out << "\n";
        }
    }
    return out.str();
}

std::string render_csv(const AggregateStats& stats, const ReportHeader& header) {
    std::ostringstream out;
    out << "model,resource,metric,mean,ci_low,ci_high,replications,seed,note\n";
    for (const auto& resource : stats.resources) {
        for (std::size_t m = 0; m < kAllMetrics.size(); ++m) {
            const MetricAggregate& agg = resource.metrics[m];
            out << header.model << ',' << resource.resource << ','
                << metric_name(kAllMetrics[m]) << ',' << format_real(agg.mean) << ','
                << format_real(agg.mean - agg.ci_halfwidth) << ','
                << format_real(agg.mean + agg.ci_halfwidth) << ','
                << header.replications << ',' << header.seed << ',' << note_for(agg)
                << "\n";
        }
    }
    return out.str();
}

std::string render_json(const AggregateStats& stats, const ReportHeader& header) {
    nlohmann::json doc;
    doc["model"] = header.model;
    doc["replications"] = header.replications;
    doc["seed"] = header.seed;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& resource : stats.resources) {
        for (std::size_t m = 0; m < kAllMetrics.size(); ++m) {
            const MetricAggregate& agg = resource.metrics[m];
            rows.push_back({{"resource", resource.resource},
                            {"metric", metric_name(kAllMetrics[m])},
                            {"mean", agg.mean},
                            {"ci_low", agg.mean - agg.ci_halfwidth},
                            {"ci_high", agg.mean + agg.ci_halfwidth},
                            {"note", note_for(agg)}});
        }
    }
    doc["rows"] = std::move(rows);
    return doc.dump(2) + "\n";
}

std::string render(const AggregateStats& stats, const ReportHeader& header,
                   OutputFormat format) {
    switch (format) {
        case OutputFormat::kText: return render_text(stats, header);
        case OutputFormat::kCsv: return render_csv(stats, header);
        case OutputFormat::kJson: return render_json(stats, header);
    }
    throw ConfigError("unhandled output format");
}

}  // namespace desp
