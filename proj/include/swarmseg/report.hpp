#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "swarmseg/attention.hpp"

namespace swarmseg {

/// One analyzed sample. Real-valued fields are canonicalized to 6 significant
/// digits when the record is built, so serialization is lossless.
struct SampleRecord {
    std::string sample_id;
    bool failed = false;
    std::string error; // reason, when failed

    double threshold = 0.0;
    double best_fitness = 0.0;
    int iterations_used = 0;
    double white_fraction = 0.0;
    bool degenerate = false; // white_fraction left the penalty window
    std::int64_t edge_count = 0;
    int hole_count = 0;
    InterfaceMetrics metrics;

    // Paths relative to the report's directory; empty when not emitted.
    std::string segmented_path;
    std::string overlay_path;
    std::string composite_path;
    std::string saliency_path;
};

struct AnalysisReport {
    std::string tool_version;
    std::uint64_t seed = 0;
    std::string config_digest;
    std::vector<SampleRecord> samples;
};

/// Nearest double representable by a 6-significant-digit decimal.
double round6(double v);

/// Canonical JSON: UTF-8, fixed key order, reals printed with 6 significant
/// digits, no timestamps. Identical reports serialize to identical bytes.
/// The schema is documented in docs/report-schema.md.
std::string report_to_json(const AnalysisReport& report);

void write_report(const AnalysisReport& report, const std::string& path);
AnalysisReport read_report(const std::string& path);

} // namespace swarmseg
