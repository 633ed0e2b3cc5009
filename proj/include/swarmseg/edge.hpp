#pragma once

#include <cstddef>

#include "swarmseg/image.hpp"

namespace swarmseg {

/// Horizontal/vertical derivatives in intensity per pixel, same dims as the source.
struct GradientPair {
    FloatMap gx;
    FloatMap gy;
};

/// Blur scale and hysteresis magnitude thresholds on the 0-255 intensity scale.
struct CannyParams {
    double sigma = 1.4;
    double low = 50.0;
    double high = 100.0;
};

/// Separable Gaussian, kernel radius ceil(3*sigma), weights normalized to sum 1,
/// clamp-to-edge borders.
FloatMap gaussian_blur(const GrayImage& image, double sigma);

/// Standard 3x3 Sobel kernels, clamp-to-edge borders. Requires width, height >= 3.
GradientPair sobel_gradients(const FloatMap& map);

/// Per-pixel sqrt(gx^2 + gy^2).
FloatMap gradient_magnitude(const GradientPair& g);

/// Non-maximum suppression with gradient direction quantized to 4 bins
/// (0/45/90/135 degrees). A pixel survives when its magnitude is >= both
/// neighbors along the quantized direction (ties kept); suppressed pixels
/// become 0. Neighbors outside the image clamp to the edge.
FloatMap non_max_suppress(const FloatMap& magnitude, const GradientPair& g);

/// Double-threshold hysteresis: pixels >= high seed the edge set; pixels in
/// [low, high) are kept iff 8-connected to a seed.
BinaryMask hysteresis(const FloatMap& nms_magnitude, double low, double high);

/// Full detector: blur -> Sobel -> magnitude -> NMS -> hysteresis.
BinaryMask canny(const GrayImage& image, const CannyParams& params);

/// Number of 255 pixels.
std::size_t edge_sum(const BinaryMask& mask);

} // namespace swarmseg
