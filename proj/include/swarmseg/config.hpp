#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "swarmseg/attention.hpp"
#include "swarmseg/phantom.hpp"
#include "swarmseg/pso.hpp"
#include "swarmseg/render.hpp"

namespace swarmseg {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct EmitFlags {
    bool mask = true;
    bool overlay = true;
    bool composite = true;
    bool saliency = true;
};

struct AnalysisConfig {
    std::vector<std::string> inputs; // files or directories to scan
    std::string out_dir = "out";
    PsoConfig pso;
    FitnessParams fitness;
    AttentionParams attention;
    double band_width = 10.0;
    int min_hole_area = 9; // px^2; smaller enclosed components are not counted as voids
    double overlay_alpha = 0.6;
    Colormap colormap = Colormap::standard();
    EmitFlags emit;
};

/// Flat "key = value" lines with dotted section prefixes; '#' starts a comment
/// line; repeated keys append where that makes sense (input). Returned in file
/// order.
std::vector<std::pair<std::string, std::string>> parse_kv_text(const std::string& text);

AnalysisConfig parse_analysis_config(const std::string& path);
PhantomSpec parse_phantom_spec(const std::string& path);

/// "all", "none", or a comma list of mask/overlay/composite/saliency.
EmitFlags parse_emit_flags(const std::string& value);

/// Canonical text form of the effective config, one key per line in a fixed
/// order. Input paths are included; the digest therefore pins the whole run.
std::string serialize_config(const AnalysisConfig& config);

/// 16-hex-digit FNV-1a 64 digest of serialize_config.
std::string config_digest(const AnalysisConfig& config);

} // namespace swarmseg
