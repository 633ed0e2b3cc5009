#pragma once

#include <array>
#include <vector>

#include "swarmseg/geometry.hpp"
#include "swarmseg/image.hpp"

namespace swarmseg {

struct AttentionParams {
    double floor = 0.25;        // bulk attention level, in [0,1)
    double decay = 15.0;        // distance decay length in pixels, > 0
    int patch_size = 8;         // >= 2; ragged right/bottom patches allowed
    double softmax_scale = 0.0; // <= 0 selects 1/sqrt(feature dimension)
};

/// Per-patch feature rows: (mean intensity / 255, intensity stddev / 128,
/// mean normalized gradient magnitude). Patches tile the image row-major.
struct PatchFeatures {
    int cols = 0;
    int rows = 0;
    int patch_size = 0;
    int image_width = 0;
    int image_height = 0;
    std::vector<std::array<double, 3>> features;

    int count() const { return cols * rows; }
};

/// Row-stochastic n x n patch-to-patch attention weights.
struct AttentionMatrix {
    int n = 0;
    std::vector<double> weights; // row-major

    double at(int row, int col) const { return weights[static_cast<std::size_t>(row) * n + col]; }
};

struct InterfaceMetrics {
    double transition_sharpness = 0.0; // band-mean gradient over global-mean gradient
    double defect_density = 0.0;       // hole pixels / deposit pixels
    double edge_density = 0.0;         // edge pixels / total pixels
    double white_fraction = 0.0;
    double threshold = 0.0;
};

/// A(p) = floor + (1-floor) * grad_norm(p) * exp(-dist(p)/decay); range [floor, 1].
/// grad_norm must already be normalized to [0,1].
FloatMap attention_map(const FloatMap& grad_norm, const DistanceField& dist,
                       const AttentionParams& params);

/// Tiles the image into patch_size^2 patches (row-major; edge patches use their
/// actual pixel count) and computes the three per-patch statistics.
PatchFeatures patch_features(const GrayImage& image, const FloatMap& grad_norm, int patch_size);

/// Row-softmax of the scaled Gram matrix F F^T with identity projections.
/// Softmax subtracts the per-row max before exponentiating.
AttentionMatrix self_attention(const PatchFeatures& f, double scale);

/// Per-patch incoming attention (column mean of S), min-max normalized, then
/// painted back to pixel resolution by nearest-neighbor patch fill.
FloatMap saliency_map(const AttentionMatrix& S, const PatchFeatures& layout);

/// Interface-quality metrics for one analysis pass. The gradient magnitude is
/// computed from the raw image with Sobel; degenerate denominators yield 0.
InterfaceMetrics interface_metrics(const GrayImage& image, const BinaryMask& deposit,
                                   const BinaryMask& edges, const DistanceField& dist,
                                   double threshold, double band_width);

} // namespace swarmseg
