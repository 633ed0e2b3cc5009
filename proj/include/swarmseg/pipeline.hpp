#pragma once

#include <optional>
#include <string>
#include <vector>

#include "swarmseg/config.hpp"
#include "swarmseg/report.hpp"

namespace swarmseg {

/// Expands files/directories into the sorted list of analyzable image paths
/// (directories contribute their *.pgm / *.png entries).
std::vector<std::string> collect_inputs(const std::vector<std::string>& inputs);

/// Runs the full stage chain on one loaded image: threshold (PSO when
/// fixed_threshold is unset) -> binarize -> Canny -> distance transform ->
/// attention map -> self-attention saliency -> metrics -> renders under
/// cfg.out_dir. Throws on per-sample failure; run_analysis converts that into
/// an error record.
SampleRecord process_sample(const GrayImage& image, const std::string& sample_id,
                            const AnalysisConfig& cfg,
                            std::optional<double> fixed_threshold = std::nullopt);

/// Batch driver: loads every collected input in sorted order, records
/// per-sample results or errors, and returns the report (metadata filled,
/// not yet written to disk). Per-sample failures do not abort the batch.
AnalysisReport run_analysis(const AnalysisConfig& config);

} // namespace swarmseg
