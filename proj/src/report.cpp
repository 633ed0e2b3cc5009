#include "swarmseg/report.hpp"

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace swarmseg {

namespace {

constexpr const char* kSchemaTag = "swarmseg-report-v1";

std::string fmt_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (unsigned char c : s) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\r': out += "\\r"; break;
        case '\t': out += "\\t"; break;
        default:
            if (c < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof buf, "\\u%04x", c);
                out += buf;
            } else {
                out += static_cast<char>(c);
            }
        }
    }
    return out;
}

void emit_string_or_null(std::ostream& out, const std::string& s) {
    if (s.empty())
        out << "null";
    else
        out << '"' << escape(s) << '"';
}

} // namespace

double round6(double v) {
    return std::strtod(fmt_real(v).c_str(), nullptr);
}

std::string report_to_json(const AnalysisReport& report) {
    std::ostringstream out;
    out << "{\n";
    out << "  \"schema\": \"" << kSchemaTag << "\",\n";
    out << "  \"tool_version\": \"" << escape(report.tool_version) << "\",\n";
    out << "  \"seed\": " << report.seed << ",\n";
    out << "  \"config_digest\": \"" << escape(report.config_digest) << "\",\n";
    out << "  \"samples\": [";
    for (std::size_t i = 0; i < report.samples.size(); ++i) {
        const SampleRecord& r = report.samples[i];
        out << (i ? ",\n" : "\n");
        out << "    {\n";
        out << "      \"sample_id\": \"" << escape(r.sample_id) << "\",\n";
        out << "      \"error\": ";
        if (r.failed)
            out << '"' << escape(r.error) << '"';
        else
            out << "null";
        out << ",\n";
        if (r.failed) {
            out << "      \"threshold\": null,\n";
            out << "      \"best_fitness\": null,\n";
            out << "      \"iterations_used\": null,\n";
            out << "      \"white_fraction\": null,\n";
            out << "      \"degenerate\": null,\n";
            out << "      \"edge_count\": null,\n";
            out << "      \"hole_count\": null,\n";
            out << "      \"metrics\": null,\n";
            out << "      \"outputs\": null\n";
        } else {
            out << "      \"threshold\": " << fmt_real(r.threshold) << ",\n";
            out << "      \"best_fitness\": " << fmt_real(r.best_fitness) << ",\n";
            out << "      \"iterations_used\": " << r.iterations_used << ",\n";
            out << "      \"white_fraction\": " << fmt_real(r.white_fraction) << ",\n";
            out << "      \"degenerate\": " << (r.degenerate ? "true" : "false") << ",\n";
            out << "      \"edge_count\": " << r.edge_count << ",\n";
            out << "      \"hole_count\": " << r.hole_count << ",\n";
            out << "      \"metrics\": {\n";
            out << "        \"transition_sharpness\": " << fmt_real(r.metrics.transition_sharpness)
                << ",\n";
            out << "        \"defect_density\": " << fmt_real(r.metrics.defect_density) << ",\n";
            out << "        \"edge_density\": " << fmt_real(r.metrics.edge_density) << ",\n";
            out << "        \"white_fraction\": " << fmt_real(r.metrics.white_fraction) << ",\n";
            out << "        \"threshold\": " << fmt_real(r.metrics.threshold) << "\n";
            out << "      },\n";
            out << "      \"outputs\": {\n";
            out << "        \"segmented\": ";
            emit_string_or_null(out, r.segmented_path);
            out << ",\n        \"overlay\": ";
            emit_string_or_null(out, r.overlay_path);
            out << ",\n        \"composite\": ";
            emit_string_or_null(out, r.composite_path);
            out << ",\n        \"saliency\": ";
            emit_string_or_null(out, r.saliency_path);
            out << "\n      }\n";
        }
        out << "    }";
    }
    out << (report.samples.empty() ? "]\n" : "\n  ]\n");
    out << "}\n";
    return out.str();
}

void write_report(const AnalysisReport& report, const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error(path + ": cannot open report for writing");
    out << report_to_json(report);
    out.flush();
    if (!out)
        throw std::runtime_error(path + ": report write failed");
}

AnalysisReport read_report(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error(path + ": cannot open report");
    nlohmann::json j = nlohmann::json::parse(in);
    if (j.value("schema", "") != kSchemaTag)
        throw std::runtime_error(path + ": unknown report schema");

    AnalysisReport report;
    report.tool_version = j.at("tool_version").get<std::string>();
    report.seed = j.at("seed").get<std::uint64_t>();
    report.config_digest = j.at("config_digest").get<std::string>();
    for (const auto& js : j.at("samples")) {
        SampleRecord r;
        r.sample_id = js.at("sample_id").get<std::string>();
        if (!js.at("error").is_null()) {
            r.failed = true;
            r.error = js.at("error").get<std::string>();
        } else {
            r.threshold = js.at("threshold").get<double>();
            r.best_fitness = js.at("best_fitness").get<double>();
            r.iterations_used = js.at("iterations_used").get<int>();
            r.white_fraction = js.at("white_fraction").get<double>();
            r.degenerate = js.at("degenerate").get<bool>();
            r.edge_count = js.at("edge_count").get<std::int64_t>();
            r.hole_count = js.at("hole_count").get<int>();
            const auto& jm = js.at("metrics");
            r.metrics.transition_sharpness = jm.at("transition_sharpness").get<double>();
            r.metrics.defect_density = jm.at("defect_density").get<double>();
            r.metrics.edge_density = jm.at("edge_density").get<double>();
            r.metrics.white_fraction = jm.at("white_fraction").get<double>();
            r.metrics.threshold = jm.at("threshold").get<double>();
            const auto& jo = js.at("outputs");
            auto path_or_empty = [&](const char* key) {
                return jo.at(key).is_null() ? std::string{} : jo.at(key).get<std::string>();
            };
            r.segmented_path = path_or_empty("segmented");
            r.overlay_path = path_or_empty("overlay");
            r.composite_path = path_or_empty("composite");
            r.saliency_path = path_or_empty("saliency");
        }
        report.samples.push_back(std::move(r));
    }
    return report;
}

} // namespace swarmseg
