#ifndef DESP_REPORT_HPP
#define DESP_REPORT_HPP

#include <cstdint>
#include <string>

#include "desp/stats.hpp"

namespace desp {

enum class OutputFormat { kText, kCsv, kJson };

// Parses "text" | "csv" | "json"; anything else throws ConfigError.
OutputFormat parse_format(const std::string& text);

// Run identification echoed into every report.
struct ReportHeader {
    std::string model;
    std::int64_t seed = 0;
    int replications = 0;
};

// Reals rendered with 6 significant digits; fixture-stable across runs and
// platforms.
std::string format_real(double value);

std::string render_text(const AggregateStats& stats, const ReportHeader& header);
std::string render_csv(const AggregateStats& stats, const ReportHeader& header);
std::string render_json(const AggregateStats& stats, const ReportHeader& header);
std::string render(const AggregateStats& stats, const ReportHeader& header,
                   OutputFormat format);

}  // namespace desp

#endif
